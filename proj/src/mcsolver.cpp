#include "orgc/mcsolver.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "orgc/cohomology.hpp"
#include "orgc/gclie.hpp"
#include "orgc/parallel.hpp"

namespace orgc {

std::vector<OrderCheck> verify_mc(const GraphSeries& s, int up_to) {
  GraphSeries residual = mc_residual(s, up_to);
  std::vector<OrderCheck> out;
  for (int k = 0; k <= up_to; ++k) out.push_back({k, residual.at(k).empty()});
  return out;
}

GraphVector mc_obstruction(const GraphSeries& s, int order) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < order; ++i) pairs.emplace_back(i, order - i);
  std::vector<GraphVector> parts(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    parts[k] = bracket(s.at(pairs[k].first), s.at(pairs[k].second));
  });
  GraphVector o;
  for (const auto& p : parts) o.add(p, Rational(-1, 2));
  return o;
}

ExtendResult extend_mc(const GraphSeries& s, int order, const EliminationOptions& options) {
  if (order < 1) throw InputError("extend_mc: order must be at least 1");
  if (s.at(0) != GraphVector(edge_graph())) throw InputError("extend_mc: the order-0 term must be the edge");
  for (const auto& c : verify_mc(s, order - 1))
    if (!c.is_zero)
      throw InputError("extend_mc: MC equation fails at order " + std::to_string(c.order));

  GraphVector o = mc_obstruction(s, order);
  if (!differential(o).empty())
    throw std::logic_error("extend_mc: obstruction is not closed (sign convention failure)");

  std::map<std::pair<int, int>, GraphVector> by_bigrade;
  for (const auto& [g, c] : o.terms()) by_bigrade[{g.vertex_count(), g.edge_count()}].add(g, c);

  GraphVector x;
  for (const auto& [bigrade, part] : by_bigrade) {
    auto [n, l] = bigrade;
    if (n < 2 || l < 1) return ObstructionClass{order, o};
    SparseMatrix m = matrix_of_differential(n - 1, l - 1);
    auto target = cached_basis(n, l);
    auto source = cached_basis(n - 1, l - 1);
    auto result = solve(m, coordinates(part, *target), options);
    if (std::holds_alternative<Inconsistent>(result)) return ObstructionClass{order, o};
    x.add(from_coordinates(std::get<std::vector<Rational>>(result), *source));
  }

  GraphSeries out;
  for (const auto& [k, v] : s.orders())
    if (k < order) out.set(k, v);
  out.set(order, std::move(x));
  return out;
}

const GraphSeries& ks_series(int order) {
  static std::mutex mutex;
  static std::map<int, GraphSeries> cache;
  std::lock_guard lock(mutex);
  if (order < 0) throw InputError("ks_series: negative order");
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  GraphSeries s = ks_seed();
  int have = 1;
  for (const auto& [k, v] : cache)
    if (k > have && k <= order) s = v, have = k;
  for (int k = have + 1; k <= order; ++k) {
    auto r = extend_mc(s, k);
    if (std::holds_alternative<ObstructionClass>(r))
      throw std::runtime_error("KS series is obstructed at order " + std::to_string(k));
    s = std::get<GraphSeries>(r);
    cache[k] = s;
  }
  if (order <= 1) {
    GraphSeries t;
    for (const auto& [k, v] : s.orders())
      if (k <= order) t.set(k, v);
    s = t;
  }
  return cache[order] = s;
}

}  // namespace orgc
