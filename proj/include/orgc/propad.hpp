#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orgc/canonical.hpp"
#include "orgc/rational.hpp"

namespace orgc {

/// Generator with m outputs, n inputs and weight a. Degree 2 - m.
struct Corolla {
  int m = 1;
  int n = 1;
  int a = 0;

  bool valid() const { return m >= 1 && n >= 1 && a >= 0 && m + n + a >= 3; }
  int degree() const { return 2 - m; }
  friend auto operator<=>(const Corolla&, const Corolla&) = default;
};

// Throws InputError unless c.valid().
void require_valid(const Corolla& c);

struct PropadVertex {
  int weight = 0;
  std::vector<int> outputs;  // free output labels, sorted
  std::vector<int> inputs;   // free input labels, sorted
  friend auto operator<=>(const PropadVertex&, const PropadVertex&) = default;
};

/// Connected composite of corollas. Internal edges and free outputs are odd;
/// the orientation is the edge list in order followed by the outputs by label.
struct PropadTerm {
  std::vector<PropadVertex> vertices;
  std::vector<Edge> edges;  // source output feeds target input
  int output_count = 0;
  int input_count = 0;

  Corolla corolla(int v) const;
  bool all_valid() const;
  int degree() const;
  int total_weight() const;
  friend auto operator<=>(const PropadTerm&, const PropadTerm&) = default;
};

struct SignedTerm {
  PropadTerm term;
  int sign = 1;
};

// Checks labels (each of 1..M and 1..N used once), acyclicity and connectivity
// (InputError otherwise). Returns nullopt when the term vanishes by an odd
// automorphism or parallel edges.
std::optional<SignedTerm> canonicalize(const PropadTerm& t);

PropadTerm corolla_term(const Corolla& c);

// Replaces output label i by sigma[i-1] (a permutation of 1..M). The sign
// relates the old orientation to the new one.
SignedTerm relabel_outputs(const PropadTerm& t, const std::vector<int>& sigma);
SignedTerm relabel_inputs(const PropadTerm& t, const std::vector<int>& tau);

std::string describe(const PropadTerm& t);

/// Rational combination of canonical terms. Terms containing a corolla outside
/// the generator range are zero and never stored.
class PropadVector {
 public:
  using Terms = std::map<PropadTerm, Rational>;

  PropadVector() = default;
  explicit PropadVector(const PropadTerm& t, const Rational& c = 1) { add(t, c); }

  void add(const PropadTerm& t, const Rational& c);
  void add(const PropadVector& v, const Rational& c = 1);
  // Like add(), for terms known to be well formed (labels, acyclic, connected).
  void add_trusted(const PropadTerm& t, const Rational& c);
  // Adds a term already in canonical form.
  void add_canonical(const PropadTerm& t, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const PropadTerm& canonical) const;

  PropadVector& operator*=(const Rational& c);
  friend PropadVector operator-(PropadVector a, const PropadVector& b) { a.add(b, -1); return a; }
  friend PropadVector operator+(PropadVector a, const PropadVector& b) { a.add(b, 1); return a; }
  friend bool operator==(const PropadVector&, const PropadVector&) = default;

 private:
  Terms terms_;
};

}  // namespace orgc
