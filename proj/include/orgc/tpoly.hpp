#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orgc/graph_vector.hpp"
#include "orgc/rational.hpp"

namespace orgc {

inline constexpr int kMaxPolyDimension = 32;

struct PolyMonomial {
  std::vector<int> x;      // exponents of x_1..x_d
  std::uint32_t psi = 0;   // bit a-1 set iff psi_a present, product in increasing index order

  int psi_count() const;
  int x_degree() const;
  friend auto operator<=>(const PolyMonomial&, const PolyMonomial&) = default;
};

/// Polynomial in commuting x_1..x_d and anticommuting psi_1..psi_d. The psi
/// count of a monomial is its grading.
class PolyVector {
 public:
  using Terms = std::map<PolyMonomial, Rational>;

  explicit PolyVector(int dim = 0);

  // c * x^exponents * psi_{i1} ... psi_{ik} (1-based psi indices, any order;
  // repeated indices give zero).
  static PolyVector monomial(int dim, const std::vector<int>& exponents, const std::vector<int>& psi,
                             const Rational& c = 1);
  static PolyVector x(int dim, int i);    // 1-based
  static PolyVector psi(int dim, int a);  // 1-based

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const PolyMonomial& m, const Rational& c);
  void add(const PolyVector& p, const Rational& c = 1);

  PolyVector psi_component(int k) const;
  std::vector<int> psi_counts() const;  // sorted, distinct
  std::optional<int> psi_count() const;  // nullopt if zero or mixed
  bool x_homogeneous_of_degree(int d) const;

  PolyVector& operator*=(const Rational& c);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { a.add(b); return a; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { a.add(b, -1); return a; }
  friend PolyVector operator*(const Rational& c, PolyVector a) { return a *= c; }
  friend bool operator==(const PolyVector&, const PolyVector&) = default;

 private:
  int dim_ = 0;
  Terms terms_;
};

// Graded-commutative product.
PolyVector wedge(const PolyVector& a, const PolyVector& b);

std::string to_string(const PolyVector& p);

// Phi_g on inputs in vertex order, without symmetrisation: every edge u->v
// applies sum_a d/dpsi_a at u and d/dx_a at v (last edge first), then the
// factors are multiplied in order. Parallel edges are allowed.
PolyVector graph_apply(const OrientedGraph& g, const std::vector<PolyVector>& inputs);

// Sum over all assignments of the inputs to the vertices with Koszul signs.
PolyVector graph_act(const OrientedGraph& g, const std::vector<PolyVector>& inputs);
PolyVector graph_act(const CanonicalGraph& g, const std::vector<PolyVector>& inputs);

PolyVector schouten(const PolyVector& a, const PolyVector& b);

// Linear extension of graph_act over the terms of g. Throws InputError unless
// every term has inputs.size() vertices.
PolyVector ks_bracket(const GraphVector& g, const std::vector<PolyVector>& inputs);

using PolySeries = std::map<int, PolyVector>;

struct ResidualOptions {
  // prefactors[n-1] multiplies hbar^{n-1} [p,...,p]_{2n}; default 1/(2n)!.
  std::vector<Rational> prefactors;
};

// 1/2 [p,p]_2 + hbar/4! [p,p,p,p]_4 + hbar^2/6! [...]_6 + ..., mod hbar^{K+1}.
// The 2n-bracket for n >= 2 is ks_bracket of the KS element's hbar^{n-1} part.
PolySeries quantizable_residual(const PolySeries& p, int K, const ResidualOptions& options = {});

struct BialgebraReport {
  PolyVector square;         // Phi_edge((xi + Phi) x (xi + Phi))
  PolyVector co_jacobi;      // psi-count 1 part (xi o xi)
  PolyVector compatibility;  // psi-count 2 part
  PolyVector jacobi;         // psi-count 3 part
  bool passed() const { return square.empty(); }
};

// xi: psi-count 1 with quadratic coefficients; Phi: psi-count 2 with linear
// coefficients (zero allowed). Throws InputError otherwise.
BialgebraReport check_odd_bialgebra(const PolyVector& xi, const PolyVector& phi);

struct QuantizabilityReport {
  PolyVector composite;
  bool vanishes() const { return composite.empty(); }
};

// The genus-one composite of two cobrackets and two brackets, as a vector field.
QuantizabilityReport check_quantizable(const PolyVector& xi, const PolyVector& phi);

// Cobracket followed by bracket along both outputs; psi-count 1, degree 1.
PolyVector involutivity_composite(const PolyVector& xi, const PolyVector& phi);

// Wirings used by the two composites, with inputs (xi, xi, Phi, Phi) and (xi, Phi).
OrientedGraph quantizability_wiring();
OrientedGraph involutivity_wiring();

}  // namespace orgc
