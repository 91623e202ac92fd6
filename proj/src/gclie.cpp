#include "orgc/gclie.hpp"

namespace orgc {

GraphVector insert(const CanonicalGraph& host, int v, const CanonicalGraph& guest) {
  const int nh = host.vertex_count();
  const int ng = guest.vertex_count();
  if (v < 0 || v >= nh) throw InputError("insert: vertex out of range");

  auto remap = [&](int w) { return w < v ? w : w - 1; };
  const int guest_offset = nh - 1;

  std::vector<int> incident;  // indices of host edges touching v
  for (int i = 0; i < host.edge_count(); ++i)
    if (host.edges()[i].source == v || host.edges()[i].target == v) incident.push_back(i);

  OrientedGraph g{nh - 1 + ng, {}};
  g.edges.reserve(host.edge_count() + guest.edge_count());
  for (const auto& e : host.edges()) g.edges.push_back(e);
  for (const auto& e : guest.edges()) g.edges.push_back({e.source + guest_offset, e.target + guest_offset});

  GraphVector out;
  std::vector<int> choice(incident.size(), 0);
  while (true) {
    for (int i = 0; i < host.edge_count(); ++i) {
      const Edge& e = host.edges()[i];
      g.edges[i] = {e.source == v ? -1 : remap(e.source), e.target == v ? -1 : remap(e.target)};
    }
    for (std::size_t k = 0; k < incident.size(); ++k) {
      Edge& e = g.edges[incident[k]];
      if (e.source == -1) e.source = guest_offset + choice[k];
      if (e.target == -1) e.target = guest_offset + choice[k];
    }
    out.add(g, 1);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == ng) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

GraphVector circ(const GraphVector& a, const GraphVector& b) {
  GraphVector out;
  for (const auto& [host, ca] : a.terms())
    for (const auto& [guest, cb] : b.terms()) {
      Rational c = ca * cb;
      for (int v = 0; v < host.vertex_count(); ++v) out.add(insert(host, v, guest), c);
    }
  return out;
}

GraphVector bracket(const GraphVector& a, const GraphVector& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (!da || !db) return {};
  GraphVector out = circ(a, b);
  int sign = ((*da) * (*db)) % 2 == 0 ? 1 : -1;
  out.add(circ(b, a), -sign);
  return out;
}

GraphVector differential(const GraphVector& a) { return bracket(GraphVector(edge_graph()), a); }

GraphSeries mc_residual(const GraphSeries& s, int max_order) {
  GraphSeries out;
  for (int k = 0; k <= max_order; ++k) {
    GraphVector total;
    for (int i = 0; 2 * i <= k; ++i) {
      const GraphVector& si = s.at(i);
      const GraphVector& sj = s.at(k - i);
      if (si.empty() || sj.empty()) continue;
      GraphVector b = bracket(si, sj);
      if (2 * i == k) {
        total.add(b, Rational(1, 2));
      } else {
        // 1/2([a,b] + [b,a]) with [b,a] = -(-1)^{|a||b|} [a,b]
        int parity = (*si.degree() * *sj.degree()) % 2;
        total.add(b, Rational(1, 2) * (parity == 0 ? 0 : 2));
      }
    }
    out.set(k, std::move(total));
  }
  return out;
}

std::vector<OrientedGraph> upsilon4_shapes() {
  return {
      OrientedGraph{4, {{0, 3}, {3, 1}, {3, 2}, {0, 1}, {0, 2}}},
      OrientedGraph{4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}},
      OrientedGraph{4, {{1, 3}, {2, 3}, {3, 0}, {1, 0}, {2, 0}}},
  };
}

GraphVector upsilon4() {
  auto shapes = upsilon4_shapes();
  GraphVector v;
  v.add(shapes[0], 1);
  v.add(shapes[1], 2);
  v.add(shapes[2], 1);
  return v;
}

GraphSeries ks_seed() {
  GraphSeries s;
  s.set(0, GraphVector(edge_graph()));
  s.set(1, upsilon4());
  return s;
}

}  // namespace orgc
