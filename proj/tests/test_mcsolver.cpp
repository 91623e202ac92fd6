#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orgc/cohomology.hpp"
#include "orgc/gclie.hpp"
#include "orgc/mcsolver.hpp"

using namespace orgc;

namespace {

bool all_zero(const std::vector<OrderCheck>& v) {
  return std::all_of(v.begin(), v.end(), [](const OrderCheck& c) { return c.is_zero; });
}

const GraphSeries& extended(PivotStrategy s) {
  static std::map<PivotStrategy, GraphSeries> cache;
  auto it = cache.find(s);
  if (it == cache.end()) {
    auto r = extend_mc(ks_seed(), 2, {s, false});
    REQUIRE(std::holds_alternative<GraphSeries>(r));
    it = cache.emplace(s, std::get<GraphSeries>(r)).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("the seed solves the MC equation through order one only") {
  auto checks = verify_mc(ks_seed(), 2);
  REQUIRE(checks.size() == 3);
  CHECK(checks[0].is_zero);
  CHECK(checks[1].is_zero);
  CHECK_FALSE(checks[2].is_zero);
  CHECK(ks_series(1) == ks_seed());
}

TEST_CASE("the order-two obstruction is closed and lives on seven vertices") {
  GraphVector o = mc_obstruction(ks_seed(), 2);
  REQUIRE_FALSE(o.empty());
  CHECK(differential(o).empty());
  for (const auto& [g, c] : o.terms()) {
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 10);
  }
}

TEST_CASE("extension to order two") {
  const GraphSeries& s = extended(PivotStrategy::Markowitz);
  CHECK(all_zero(verify_mc(s, 2)));
  const GraphVector& u6 = s.at(2);
  REQUIRE_FALSE(u6.empty());
  for (const auto& [g, c] : u6.terms()) {
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
  }
  CHECK(u6.degree() == 1);
  CHECK(s.at(0) == GraphVector(edge_graph()));
  CHECK(s.at(1) == upsilon4());
}

TEST_CASE("solutions from different pivot orders differ by a cocycle") {
  GraphVector diff = extended(PivotStrategy::Markowitz).at(2) - extended(PivotStrategy::Natural).at(2);
  CHECK(differential(diff).empty());
  CHECK(all_zero(verify_mc(extended(PivotStrategy::Natural), 2)));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(extend_mc(ks_seed(), 0), InputError);
  GraphSeries no_edge;
  no_edge.set(1, upsilon4());
  CHECK_THROWS_AS(extend_mc(no_edge, 2), InputError);
  // a perturbation by a graph with nonzero differential breaks order one
  GraphSeries bad = ks_seed();
  for (const auto& g : *cached_basis(4, 5))
    if (!differential(GraphVector(g)).empty()) {
      bad.add(1, GraphVector(g));
      break;
    }
  CHECK_FALSE(verify_mc(bad, 1)[1].is_zero);
  CHECK_THROWS_AS(extend_mc(bad, 2), InputError);
  CHECK_THROWS_AS(ks_series(-1), InputError);
}
