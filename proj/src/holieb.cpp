#include "orgc/holieb.hpp"

#include <algorithm>
#include <numeric>

#include "orgc/mcsolver.hpp"
#include "orgc/parallel.hpp"

namespace orgc {

namespace {

struct HalfEdges {
  std::vector<int> outputs, inputs;
  std::vector<int> out_edges, in_edges;  // indices into t.edges
  std::size_t size() const { return outputs.size() + inputs.size() + out_edges.size() + in_edges.size(); }
};

// Calls f for every composition of total into parts >= 0 with part i >= low[i].
template <class F>
void compositions(int total, const std::vector<int>& low, std::vector<int>& parts, std::size_t i, F&& f) {
  if (i + 1 == parts.size()) {
    if (total >= low[i]) {
      parts[i] = total;
      f(parts);
    }
    return;
  }
  for (int x = low[i]; x <= total; ++x) {
    parts[i] = x;
    compositions(total - x, low, parts, i + 1, f);
  }
}

// Replaces vertex v of t by g (hbar^k), adding every summand times coeff to out.
void derive_at_vertex(const PropadTerm& t, int v, const CanonicalGraph& g, int k, const Rational& coeff,
                      PropadVector& out) {
  const int weight = t.vertices[v].weight - k;
  if (weight < 0) return;
  const int p = g.vertex_count();
  const int old_n = static_cast<int>(t.vertices.size());
  if (old_n - 1 + p > kMaxCanonicalVertices) throw ResourceError("composite exceeds the vertex limit");

  HalfEdges h;
  h.outputs = t.vertices[v].outputs;
  h.inputs = t.vertices[v].inputs;
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    if (t.edges[e].source == v) h.out_edges.push_back(e);
    if (t.edges[e].target == v) h.in_edges.push_back(e);
  }
  const std::size_t hs = h.size();
  const std::size_t n_out = h.outputs.size() + h.out_edges.size();  // first n_out slots are outgoing

  auto place = [&](int j) { return j == 0 ? v : old_n + j - 1; };

  std::vector<int> gm(p, 0), gn(p, 0);
  for (const auto& e : g.edges()) ++gm[e.source], ++gn[e.target];

  // Backtracking over half-edge placements: outgoing slots first, then incoming.
  // A placement is kept only if every vertex of g ends with m, n >= 1; a vertex
  // still lacking an output (input) needs one of the remaining outgoing
  // (incoming) slots.
  std::vector<int> assign(hs, 0);
  std::vector<int> m = gm, n = gn, low(p), parts(p);
  int missing_m = static_cast<int>(std::count(m.begin(), m.end(), 0));
  int missing_n = static_cast<int>(std::count(n.begin(), n.end(), 0));

  auto emit = [&]() {
    int need = 0;
    for (int j = 0; j < p; ++j) {
      low[j] = std::max(0, 3 - m[j] - n[j]);
      need += low[j];
    }
    if (need > weight) return;
    compositions(weight, low, parts, 0, [&](const std::vector<int>& w) {
      PropadTerm r;
      r.output_count = t.output_count;
      r.input_count = t.input_count;
      r.vertices = t.vertices;
      r.vertices.resize(old_n - 1 + p);
      for (int j = 0; j < p; ++j) r.vertices[place(j)] = PropadVertex{w[j], {}, {}};
      std::size_t slot = 0;
      for (int o : h.outputs) r.vertices[place(assign[slot++])].outputs.push_back(o);
      std::vector<int> new_source(t.edges.size(), -1), new_target(t.edges.size(), -1);
      for (int e : h.out_edges) new_source[e] = place(assign[slot++]);
      for (int i : h.inputs) r.vertices[place(assign[slot++])].inputs.push_back(i);
      for (int e : h.in_edges) new_target[e] = place(assign[slot++]);
      r.edges.reserve(g.edge_count() + t.edges.size());
      for (const auto& e : g.edges()) r.edges.push_back({place(e.source), place(e.target)});
      for (std::size_t e = 0; e < t.edges.size(); ++e)
        r.edges.push_back({new_source[e] >= 0 ? new_source[e] : t.edges[e].source,
                           new_target[e] >= 0 ? new_target[e] : t.edges[e].target});
      out.add_trusted(r, coeff);
    });
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == hs) {
      if (missing_m == 0 && missing_n == 0) emit();
      return;
    }
    const bool outgoing = i < n_out;
    // slots of this kind left after slot i
    const int left = static_cast<int>(outgoing ? n_out - i - 1 : hs - i - 1);
    if (outgoing && missing_m > left + 1) return;
    if (!outgoing && (missing_m > 0 || missing_n > left + 1)) return;
    auto& count = outgoing ? m : n;
    int& missing = outgoing ? missing_m : missing_n;
    for (int j = 0; j < p; ++j) {
      assign[i] = j;
      if (count[j]++ == 0) --missing;
      self(self, i + 1);
      if (--count[j] == 0) ++missing;
    }
  };
  recurse(recurse, 0);
}

const GraphVector& ks_piece(int k) {
  static const GraphVector zero;
  const GraphSeries& s = ks_series(kMaxTruncation);
  return k <= kMaxTruncation ? s.at(k) : zero;
}

void check_trunc(int trunc) {
  if (trunc < 0 || trunc > kMaxTruncation)
    throw InputError("truncation must be in [0, " + std::to_string(kMaxTruncation) + "]");
}

// Graph terms of a vector in a fixed order, for sharding.
std::vector<std::pair<const CanonicalGraph*, const Rational*>> graph_terms(const GraphVector& g) {
  std::vector<std::pair<const CanonicalGraph*, const Rational*>> out;
  for (const auto& [graph, c] : g.terms()) out.emplace_back(&graph, &c);
  return out;
}

}  // namespace

PropadVector act(int k, const CanonicalGraph& g, const Corolla& c) {
  require_valid(c);
  PropadVector out;
  if (k < 0 || k > c.a) return out;
  derive_at_vertex(corolla_term(c), 0, g, k, 1, out);
  return out;
}

PropadVector act(int k, const GraphVector& g, const Corolla& c) {
  require_valid(c);
  return derive(k, g, corolla_term(c));
}

PropadVector derive(int k, const GraphVector& g, const PropadTerm& t) {
  auto terms = graph_terms(g);
  std::vector<int> eligible;
  for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v)
    if (t.vertices[v].weight >= k) eligible.push_back(v);
  const std::size_t nv = eligible.size();
  PropadVector out;
  if (nv == 0 || terms.empty()) return out;
  if (terms.size() * nv == 1) {
    derive_at_vertex(t, eligible[0], *terms[0].first, k, *terms[0].second, out);
    return out;
  }
  std::vector<PropadVector> parts(terms.size() * nv);
  parallel_for(parts.size(), [&](std::size_t i) {
    const auto [graph, c] = terms[i / nv];
    derive_at_vertex(t, eligible[i % nv], *graph, k, *c, parts[i]);
  });
  for (const auto& p : parts) out.add(p);
  return out;
}

PropadVector derive(int k, const GraphVector& g, const PropadVector& v) {
  PropadVector out;
  for (const auto& [t, c] : v.terms()) out.add(derive(k, g, t), c);
  return out;
}

PropadVector delta_on_term(const PropadTerm& t, int trunc) {
  check_trunc(trunc);
  int max_weight = 0;
  for (const auto& v : t.vertices) max_weight = std::max(max_weight, v.weight);
  PropadVector out;
  for (int k = 0; k <= std::min(trunc, max_weight); ++k) out.add(derive(k, ks_piece(k), t));
  return out;
}

PropadVector delta_diamond(const Corolla& c, int trunc) {
  require_valid(c);
  return delta_on_term(corolla_term(c), trunc);
}

PropadVector delta_on_vector(const PropadVector& v, int trunc) {
  PropadVector out;
  for (const auto& [t, c] : v.terms()) out.add(delta_on_term(t, trunc), c);
  return out;
}

PropadVector delta_classical(int m, int n) {
  if (m < 1 || n < 1 || m + n < 3) throw InputError("delta_classical: need m,n >= 1 and m+n >= 3");
  PropadVector out;
  // Lower corolla A carries outputs I1 and inputs J1 and feeds one output into the
  // upper corolla B, which carries outputs I2 and inputs J2.
  for (unsigned i1 = 0; i1 < (1u << m); ++i1) {
    if (i1 == (1u << m) - 1) continue;  // |I2| >= 1
    for (unsigned j1 = 1; j1 < (1u << n); ++j1) {  // |J1| >= 1, |J2| >= 0
      PropadTerm t;
      t.output_count = m;
      t.input_count = n;
      t.vertices.resize(2);
      std::vector<int> order;  // orientation: edge, then I1, then I2
      for (int o = 1; o <= m; ++o)
        if (i1 >> (o - 1) & 1) t.vertices[0].outputs.push_back(o), order.push_back(o);
      for (int o = 1; o <= m; ++o)
        if (!(i1 >> (o - 1) & 1)) t.vertices[1].outputs.push_back(o), order.push_back(o);
      for (int i = 1; i <= n; ++i) (j1 >> (i - 1) & 1 ? t.vertices[0] : t.vertices[1]).inputs.push_back(i);
      t.edges.push_back({0, 1});
      // The splitting carries the Koszul sign of the unshuffle (I1, I2); rewriting
      // the orientation e, I1, I2 in label order costs the same sign again.
      int unshuffle = 1;
      for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
          if (order[a] > order[b]) unshuffle = -unshuffle;
      const int to_label_order = unshuffle;
      out.add(t, unshuffle * to_label_order);
    }
  }
  return out;
}

PropadVector truncate_hbar(const PropadVector& v, int initial_weight, int max_loss) {
  PropadVector out;
  for (const auto& [t, c] : v.terms())
    if (initial_weight - t.total_weight() <= max_loss) out.add_canonical(t, c);
  return out;
}

SignedTerm quantizability_composite() {
  PropadTerm t;
  t.output_count = 1;
  t.input_count = 1;
  t.vertices = {PropadVertex{0, {}, {1}}, PropadVertex{0, {}, {}}, PropadVertex{0, {}, {}},
                PropadVertex{0, {1}, {}}};
  t.edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  return canonicalize(t).value();
}

std::vector<SquareCheck> check_delta_squared(int max_arity, int max_weight, int trunc) {
  check_trunc(trunc);
  std::vector<SquareCheck> out;
  for (int total = 2; total <= max_arity; ++total)
    for (int m = 1; m < total; ++m)
      for (int a = 0; a <= max_weight; ++a) {
        Corolla c{m, total - m, a};
        if (!c.valid()) continue;
        PropadVector d = delta_diamond(c, trunc);
        PropadVector dd = truncate_hbar(delta_on_vector(d, trunc), a, trunc);
        out.push_back({c, std::move(dd)});
      }
  return out;
}

}  // namespace orgc
