#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "orgc/graph_vector.hpp"

using namespace orgc;

TEST_CASE("canonical form is invariant under relabelling, with the brute-force sign") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 4;
    const int l = n - 1 + static_cast<int>(rng() % (n * (n - 1) / 2 - n + 2));
    OrientedGraph g{n, oracle::random_connected_dag(rng, n, l)};
    const bool odd = oracle::has_odd_automorphism(n, g.edges);
    auto c = canonicalize(g);
    REQUIRE(c.has_value() == !odd);
    if (!c) continue;
    CHECK(c->sign == oracle::sign_onto(n, g.edges, c->graph.edges()));

    // shuffle vertices and edge order
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    OrientedGraph h{n, oracle::relabel(g.edges, perm)};
    std::vector<int> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    OrientedGraph k{n, {}};
    for (int i : order) k.edges.push_back(h.edges[i]);
    auto d = canonicalize(k);
    REQUIRE(d.has_value());
    CHECK(d->graph == c->graph);
    CHECK(d->sign == c->sign * oracle::permutation_sign(order));
  }
}

TEST_CASE("basis sizes agree with brute-force class counting") {
  for (int n = 1; n <= 5; ++n)
    for (int l = 0; l <= n * (n - 1) / 2; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      CHECK(enumerate_basis(n, l).size() == oracle::basis_count(n, l));
    }
  CHECK(enumerate_basis(6, 5).size() == oracle::basis_count(6, 5));
  CHECK(enumerate_basis(6, 6).size() == oracle::basis_count(6, 6));
}

TEST_CASE("known basis sizes on six vertices") {
  const std::vector<std::size_t> expected{45, 243, 659, 1078, 1158, 906};
  for (int l = 5; l <= 10; ++l) CHECK(enumerate_basis(6, l).size() == expected[l - 5]);
}

TEST_CASE("basis elements are canonical fixed points") {
  for (const auto& g : enumerate_basis(5, 6)) {
    auto c = canonicalize(g.graph());
    REQUIRE(c.has_value());
    CHECK(c->graph == g);
    CHECK(c->sign == 1);
    CHECK(g.degree() == 2);
  }
}

TEST_CASE("small examples") {
  CHECK(is_oriented(OrientedGraph{2, {{0, 1}}}));
  CHECK_FALSE(is_oriented(OrientedGraph{3, {{0, 1}, {1, 2}, {2, 0}}}));
  CHECK_THROWS_AS(canonicalize(OrientedGraph{3, {{0, 1}, {1, 2}, {2, 0}}}), InputError);
  CHECK_THROWS_AS(canonicalize(OrientedGraph{3, {{0, 1}}}), InputError);
  CHECK_THROWS_AS(canonicalize(OrientedGraph{2, {{0, 2}}}), InputError);
  // parallel edges and the two-pronged fork vanish
  CHECK_FALSE(canonicalize(OrientedGraph{2, {{0, 1}, {0, 1}}}).has_value());
  CHECK_FALSE(canonicalize(OrientedGraph{3, {{0, 1}, {0, 2}}}).has_value());
  CHECK(canonicalize(OrientedGraph{3, {{0, 1}, {1, 2}}}).has_value());
  // swapping the two edges of the path flips the sign
  auto a = canonicalize(OrientedGraph{3, {{0, 1}, {1, 2}}});
  auto b = canonicalize(OrientedGraph{3, {{1, 2}, {0, 1}}});
  CHECK(a->sign == -b->sign);
  CHECK(edge_graph().degree() == 1);
  CHECK(point_graph().degree() == 0);
  CHECK(enumerate_basis(3, 3).size() == 1);
}

TEST_CASE("graph vectors collect terms and drop zeros") {
  GraphVector v;
  v.add(OrientedGraph{3, {{0, 1}, {1, 2}}}, 2);
  v.add(OrientedGraph{3, {{1, 2}, {0, 1}}}, 2);
  CHECK(v.empty());
  v.add(OrientedGraph{3, {{0, 1}, {0, 2}}}, 5);
  CHECK(v.empty());
  v.add(OrientedGraph{3, {{0, 1}, {1, 2}}}, Rational(1, 3));
  v.add(OrientedGraph{3, {{0, 1}, {1, 2}, {0, 2}}}, 1);
  CHECK(v.size() == 2);
  CHECK_THROWS_AS(v.degree(), InputError);
  GraphVector w = Rational(3) * v - v - v - v;
  CHECK(w.empty());
}
