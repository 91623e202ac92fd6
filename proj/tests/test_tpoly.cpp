#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "orgc/gclie.hpp"
#include "orgc/holieb.hpp"
#include "orgc/mcsolver.hpp"
#include "orgc/tpoly.hpp"

using namespace orgc;

namespace {

PolyVector random_poly(std::mt19937& rng, int d, int psi, int degree, int terms) {
  PolyVector p(d);
  std::uniform_int_distribution<int> coeff(-3, 3), idx(1, d);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(d, 0);
    for (int i = 0; i < degree; ++i) ++e[idx(rng) - 1];
    std::vector<int> s(d);
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(s.begin(), s.end(), rng);
    s.resize(psi);
    p.add(PolyVector::monomial(d, e, s, coeff(rng)));
  }
  return p;
}

// d/dx_a applied to the coefficients
PolyVector dx(const PolyVector& p, int a) {
  PolyVector out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (m.x[a - 1] == 0) continue;
    PolyMonomial n = m;
    --n.x[a - 1];
    out.add(n, c * m.x[a - 1]);
  }
  return out;
}

// Coefficient function of psi_a in a vector field.
PolyVector component(const PolyVector& v, int a) {
  PolyVector out(v.dim());
  for (const auto& [m, c] : v.terms())
    if (m.psi == (1u << (a - 1))) out.add(PolyMonomial{m.x, 0}, c);
  return out;
}

PolyVector apply_field(const PolyVector& v, const PolyVector& f) {
  PolyVector out(f.dim());
  for (int a = 1; a <= f.dim(); ++a) out.add(wedge(component(v, a), dx(f, a)));
  return out;
}

Rational koszul(int a, int b) { return (a * b) % 2 ? -1 : 1; }

PolyVector so3() {
  PolyVector pi(3);
  pi.add(PolyVector::monomial(3, {0, 0, 1}, {1, 2}));
  pi.add(PolyVector::monomial(3, {1, 0, 0}, {2, 3}));
  pi.add(PolyVector::monomial(3, {0, 1, 0}, {3, 1}));
  return pi;
}

// All xi (psi-count 1, quadratic) and Phi (psi-count 2, linear) in d = 2 with
// coefficients in {-1, 0, 1}.
std::vector<std::pair<PolyVector, PolyVector>> lattice_pairs() {
  std::vector<PolyVector> xi_basis, phi_basis;
  for (int a = 1; a <= 2; ++a)
    for (auto e : {std::vector<int>{2, 0}, {1, 1}, {0, 2}}) xi_basis.push_back(PolyVector::monomial(2, e, {a}));
  for (auto e : {std::vector<int>{1, 0}, {0, 1}}) phi_basis.push_back(PolyVector::monomial(2, e, {1, 2}));
  std::vector<std::pair<PolyVector, PolyVector>> out;
  const int total = static_cast<int>(xi_basis.size() + phi_basis.size());
  int combos = 1;
  for (int i = 0; i < total; ++i) combos *= 3;
  for (int code = 0; code < combos; ++code) {
    PolyVector xi(2), phi(2);
    int c = code;
    for (int i = 0; i < total; ++i, c /= 3) {
      const int k = c % 3 - 1;
      if (k == 0) continue;
      if (i < static_cast<int>(xi_basis.size()))
        xi.add(xi_basis[i], k);
      else
        phi.add(phi_basis[i - xi_basis.size()], k);
    }
    out.emplace_back(xi, phi);
  }
  return out;
}

}  // namespace

TEST_CASE("polyvector arithmetic") {
  PolyVector a = PolyVector::monomial(3, {1, 0, 0}, {2, 1});
  CHECK(a == PolyVector::monomial(3, {1, 0, 0}, {1, 2}, -1));
  CHECK(PolyVector::monomial(3, {0, 0, 0}, {2, 2}).empty());
  CHECK(wedge(PolyVector::psi(3, 1), PolyVector::psi(3, 2)) == PolyVector::monomial(3, {0, 0, 0}, {1, 2}));
  CHECK(wedge(PolyVector::psi(3, 2), PolyVector::psi(3, 1)) == PolyVector::monomial(3, {0, 0, 0}, {1, 2}, -1));
  CHECK(a.psi_count() == 2);
  CHECK_THROWS_AS(PolyVector::monomial(2, {0, 0}, {3}), InputError);
  CHECK_THROWS_AS(PolyVector(kMaxPolyDimension + 1), InputError);
  CHECK_THROWS_AS(wedge(PolyVector(2), PolyVector(3)), InputError);
}

TEST_CASE("generators and small examples") {
  const int d = 3;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      PolyVector xi = PolyVector::x(d, i), pj = PolyVector::psi(d, j);
      PolyVector one = i == j ? PolyVector::monomial(d, {0, 0, 0}, {}) : PolyVector(d);
      CHECK(schouten(pj, xi) == one);
      CHECK(schouten(xi, pj) == Rational(-1) * one);
      CHECK(schouten(xi, PolyVector::x(d, j)).empty());
      CHECK(schouten(pj, PolyVector::psi(d, i)).empty());
    }
  CHECK(schouten(so3(), so3()).empty());
  PolyVector c = PolyVector::monomial(3, {0, 0, 0}, {1, 2});
  CHECK(schouten(c, c).empty());
  CHECK(graph_act(point_graph(), {so3()}) == so3());
  PolyVector f = PolyVector::monomial(3, {2, 1, 0}, {}), g = PolyVector::monomial(3, {0, 1, 3}, {});
  CHECK(graph_act(edge_graph(), {f, g}).empty());
  CHECK(schouten(f, g).empty());
}

TEST_CASE("vector fields: edge action is the directional derivative, bracket the Lie bracket") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    PolyVector v = random_poly(rng, 3, 1, 2, 4), w = random_poly(rng, 3, 1, 1, 3), f = random_poly(rng, 3, 0, 3, 3);
    CHECK(graph_act(edge_graph(), {v, f}) == apply_field(v, f));
    PolyVector lie(3);
    for (int b = 1; b <= 3; ++b) {
      PolyVector coeff = apply_field(v, component(w, b)) - apply_field(w, component(v, b));
      lie.add(wedge(coeff, PolyVector::psi(3, b)));
    }
    CHECK(schouten(v, w) == lie);
    CHECK(schouten(v, f) == apply_field(v, f));
  }
}

TEST_CASE("graded antisymmetry, Jacobi and Leibniz on random triples") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int ka = trial % 4, kb = (trial / 4) % 4, kc = (trial / 16) % 3;
    PolyVector a = random_poly(rng, 3, ka, 1 + trial % 2, 3), b = random_poly(rng, 3, kb, 2, 3),
               c = random_poly(rng, 3, kc, trial % 3, 2);
    const int sa = ka - 1, sb = kb - 1;
    CHECK((schouten(a, b) + koszul(sa, sb) * schouten(b, a)).empty());
    CHECK((schouten(a, schouten(b, c)) - schouten(schouten(a, b), c) - koszul(sa, sb) * schouten(b, schouten(a, c)))
              .empty());
    CHECK((schouten(a, wedge(b, c)) - wedge(schouten(a, b), c) - koszul(sa, kb) * wedge(b, schouten(a, c))).empty());
  }
}

TEST_CASE("psi-count bookkeeping and consistency with canonical signs") {
  std::mt19937 rng(31);
  std::vector<CanonicalGraph> graphs;
  for (auto [n, l] : {std::pair{3, 2}, {3, 3}, {4, 4}, {4, 5}})
    for (const auto& g : enumerate_basis(n, l)) graphs.push_back(g);
  int nonzero = 0;
  for (const auto& g : graphs) {
    const int n = g.vertex_count();
    std::vector<PolyVector> in;
    int total = 0;
    for (int v = 0; v < n; ++v) {
      const int k = 1 + static_cast<int>(rng() % 3);
      total += k;
      in.push_back(random_poly(rng, 3, k, 1 + static_cast<int>(rng() % 3), 3));
    }
    PolyVector out = graph_act(g, in);
    for (const auto& [m, c] : out.terms()) CHECK(m.psi_count() == total - g.edge_count());
    nonzero += !out.empty();
    // any lift with shuffled vertices and edges acts as sign times the canonical graph
    std::vector<int> perm(n), order(g.edge_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(order.begin(), order.end(), rng);
    OrientedGraph lift{n, {}};
    for (int i : order) lift.edges.push_back({perm[g.edges()[i].source], perm[g.edges()[i].target]});
    auto c = canonicalize(lift);
    REQUIRE(c.has_value());
    CHECK(graph_act(lift, in) == Rational(c->sign) * out);
  }
  CHECK(nonzero > 0);
}

TEST_CASE("graphs with an odd automorphism act as zero") {
  std::mt19937 rng(37);
  const std::vector<OrientedGraph> odd{
      {3, {{0, 1}, {0, 2}}}, {3, {{1, 0}, {2, 0}}}, {2, {{0, 1}, {0, 1}}}, {4, {{0, 1}, {0, 2}, {0, 3}}},
      {4, {{0, 3}, {1, 3}, {2, 3}}}, {4, {{0, 1}, {1, 2}, {1, 3}}}};
  for (const auto& g : odd) {
    REQUIRE_FALSE(canonicalize(g).has_value());
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<PolyVector> in;
      for (int v = 0; v < g.vertex_count; ++v) in.push_back(random_poly(rng, 3, 1 + trial % 3, 2, 3));
      CHECK(graph_act(g, in).empty());
    }
  }
}

TEST_CASE("ks brackets") {
  std::mt19937 rng(41);
  PolyVector a = random_poly(rng, 3, 2, 2, 3), b = random_poly(rng, 3, 1, 2, 3);
  CHECK(ks_bracket(GraphVector(edge_graph()), {a, b}) == graph_act(edge_graph(), {a, b}));
  std::vector<PolyVector> functions(4, PolyVector::monomial(3, {1, 1, 0}, {}));
  CHECK(ks_bracket(upsilon4(), functions).empty());
  CHECK_THROWS_AS(ks_bracket(upsilon4(), {a, b}), InputError);
  int found = 0;
  for (int trial = 0; trial < 2000 && found < 20; ++trial) {
    std::vector<PolyVector> in;
    int total = 0;
    for (int v = 0; v < 4; ++v) {
      const int k = 2 + static_cast<int>(rng() % 2);
      total += k;
      in.push_back(random_poly(rng, 3, k, 2 + static_cast<int>(rng() % 2), 2));
    }
    PolyVector r = ks_bracket(upsilon4(), in);
    if (r.empty()) continue;
    ++found;
    CHECK(r.psi_count() == total - 5);
  }
  CHECK(found == 20);
}

TEST_CASE("generalized MC residual") {
  PolySeries zero{{0, PolyVector(3)}};
  CHECK(quantizable_residual(zero, 2).empty());
  PolySeries p{{0, so3()}};
  auto r = quantizable_residual(p, 1);
  CHECK_FALSE(r.count(0));
  ResidualOptions doubled{{1, 2}};
  auto r2 = quantizable_residual(p, 1, doubled);
  PolyVector four = ks_bracket(ks_series(1).at(1), {so3(), so3(), so3(), so3()});
  CHECK((r.count(1) ? r.at(1) : PolyVector(3)) == Rational(1, 24) * four);
  CHECK((r2.count(1) ? r2.at(1) : PolyVector(3)) == Rational(2) * four);
  MESSAGE("so(3): hbar^1 residual = " << to_string(r.count(1) ? r.at(1) : PolyVector(3)));
  CHECK_THROWS_AS(quantizable_residual(p, kMaxTruncation + 1), InputError);
  // an hbar correction enters the order-one term through the 2-bracket
  PolyVector q = PolyVector::monomial(3, {2, 0, 0}, {2, 3});
  PolySeries pq{{0, so3()}, {1, q}};
  auto rq = quantizable_residual(pq, 1);
  PolyVector expect = Rational(1, 2) * (schouten(so3(), q) + schouten(q, so3())) + Rational(1, 24) * four;
  CHECK((rq.count(1) ? rq.at(1) : PolyVector(3)) == expect);
}

TEST_CASE("odd bialgebra checks") {
  // xi = 0 with a Lie algebra Phi
  PolyVector none(3);
  CHECK(check_odd_bialgebra(none, so3()).passed());
  CHECK(check_quantizable(none, so3()).vanishes());
  // the failing example
  auto bad = check_odd_bialgebra(PolyVector::monomial(1, {2}, {1}), PolyVector(1));
  CHECK_FALSE(bad.passed());
  CHECK(bad.co_jacobi == PolyVector::monomial(1, {3}, {1}, 2));
  CHECK(bad.jacobi.empty());
  // shape violations
  CHECK_THROWS_AS(check_odd_bialgebra(PolyVector::monomial(2, {1, 0}, {1}), PolyVector(2)), InputError);
  CHECK_THROWS_AS(check_odd_bialgebra(PolyVector(2), PolyVector::monomial(2, {1, 1}, {1, 2})), InputError);
  CHECK_THROWS_AS(check_quantizable(PolyVector(2), PolyVector(3)), InputError);

  int passing = 0, nontrivial = 0, witnesses = 0;
  for (const auto& [xi, phi] : lattice_pairs()) {
    auto r = check_odd_bialgebra(xi, phi);
    CHECK(r.square == r.co_jacobi + r.compatibility + r.jacobi);
    CHECK(r.compatibility == schouten(xi, phi));
    if (!r.passed()) continue;
    ++passing;
    CHECK(involutivity_composite(xi, phi).empty());
    if (xi.empty() || phi.empty()) CHECK(check_quantizable(xi, phi).vanishes());
    if (!xi.empty() && !phi.empty()) ++nontrivial;
    if (!check_quantizable(xi, phi).vanishes()) ++witnesses;
  }
  CHECK(passing > 1);
  // the wiring itself is not degenerate
  std::mt19937 rng(43);
  int generic_nonzero = 0;
  for (int trial = 0; trial < 10; ++trial) {
    PolyVector xi = random_poly(rng, 3, 1, 2, 4), phi = random_poly(rng, 3, 2, 1, 3);
    auto q = check_quantizable(xi, phi);
    for (const auto& [m, c] : q.composite.terms()) {
      CHECK(m.psi_count() == 1);
      CHECK(m.x_degree() == 1);
    }
    generic_nonzero += !q.vanishes();
  }
  CHECK(generic_nonzero > 0);
  MESSAGE("d = 2 lattice: " << passing << " bialgebras, " << nontrivial << " with both parts nonzero, " << witnesses
                            << " non-quantizable");
}
