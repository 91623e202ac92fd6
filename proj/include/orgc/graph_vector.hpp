#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orgc/graph.hpp"
#include "orgc/rational.hpp"

namespace orgc {

/// Exact-rational linear combination of canonical graphs. Zero coefficients are
/// never stored.
class GraphVector {
 public:
  using Terms = std::map<CanonicalGraph, Rational>;

  GraphVector() = default;
  explicit GraphVector(const CanonicalGraph& g, const Rational& c = 1) { add(g, c); }

  // Adds c * g, where g may be any oriented connected graph; the term is
  // canonicalized and dropped if it vanishes.
  void add(const OrientedGraph& g, const Rational& c);
  void add(const CanonicalGraph& g, const Rational& c);
  void add(const GraphVector& other, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const CanonicalGraph& g) const;

  // Common degree of all terms; nullopt for the zero vector. Throws InputError
  // if the terms disagree.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  GraphVector& operator*=(const Rational& c);
  GraphVector& operator+=(const GraphVector& o) { add(o, 1); return *this; }
  GraphVector& operator-=(const GraphVector& o) { add(o, -1); return *this; }
  friend GraphVector operator+(GraphVector a, const GraphVector& b) { return a += b; }
  friend GraphVector operator-(GraphVector a, const GraphVector& b) { return a -= b; }
  friend GraphVector operator*(const Rational& c, GraphVector v) { return v *= c; }
  friend bool operator==(const GraphVector&, const GraphVector&) = default;

 private:
  Terms terms_;
};

GraphVector combine(const std::vector<Rational>& scalars, const std::vector<GraphVector>& vectors);

/// Formal power series in hbar with graph-vector coefficients; only nonzero
/// orders are stored.
class GraphSeries {
 public:
  using Orders = std::map<int, GraphVector>;

  GraphSeries() = default;

  void set(int order, GraphVector v);
  void add(int order, const GraphVector& v, const Rational& c = 1);
  const GraphVector& at(int order) const;  // zero vector when absent
  const Orders& orders() const { return orders_; }
  int max_order() const { return orders_.empty() ? -1 : orders_.rbegin()->first; }
  bool empty() const { return orders_.empty(); }
  friend bool operator==(const GraphSeries&, const GraphSeries&) = default;

 private:
  Orders orders_;
};

}  // namespace orgc
