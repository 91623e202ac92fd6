#include "orgc/graph.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "orgc/parallel.hpp"
#include "orgc/rational.hpp"

namespace orgc {

struct CanonicalGraphAccess {
  static CanonicalGraph make(OrientedGraph g) {
    CanonicalGraph c;
    c.graph_ = std::move(g);
    return c;
  }
};

namespace {

void validate_indices(const OrientedGraph& g) {
  if (g.vertex_count < 1) throw InputError("graph must have at least one vertex");
  if (g.vertex_count > kMaxCanonicalVertices)
    throw InputError("graph has more than " + std::to_string(kMaxCanonicalVertices) + " vertices");
  for (const auto& e : g.edges)
    if (e.source < 0 || e.source >= g.vertex_count || e.target < 0 || e.target >= g.vertex_count)
      throw InputError("edge endpoint out of range in " + describe(g));
}

// Canonicalizes an already validated connected DAG.
std::optional<SignedGraph> canonicalize_unchecked(const OrientedGraph& g) {
  std::vector<int> colors(g.vertex_count, 0);
  Labeling lab = canonical_labeling(g.vertex_count, g.edges, colors);
  if (lab.vanishes) return std::nullopt;
  OrientedGraph out{g.vertex_count, {}};
  out.edges.reserve(g.edges.size());
  for (const auto& e : g.edges) out.edges.push_back({lab.relabel[e.source], lab.relabel[e.target]});
  std::sort(out.edges.begin(), out.edges.end());
  return SignedGraph{CanonicalGraphAccess::make(std::move(out)), lab.sign};
}

}  // namespace

bool is_oriented(const OrientedGraph& g) {
  validate_indices(g);
  for (const auto& e : g.edges)
    if (e.source == e.target) return false;
  return is_acyclic(g.vertex_count, g.edges);
}

std::optional<SignedGraph> canonicalize(const OrientedGraph& g) {
  if (!is_oriented(g)) throw InputError("graph has a directed cycle: " + describe(g));
  if (!is_connected(g.vertex_count, g.edges)) throw InputError("graph is disconnected: " + describe(g));
  return canonicalize_unchecked(g);
}

std::vector<CanonicalGraph> enumerate_basis(int vertices, int edges) {
  if (vertices < 1) throw InputError("enumerate_basis: need at least one vertex");
  if (vertices > kMaxCanonicalVertices) throw InputError("enumerate_basis: too many vertices");
  const int max_edges = vertices * (vertices - 1) / 2;
  if (edges < 0 || edges > max_edges) throw InputError("enumerate_basis: edge count out of range");
  if (edges < vertices - 1) return {};

  // Every DAG has a topological labeling, so it appears as a subset of the
  // forward pairs (i<j).
  std::vector<Edge> pairs;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) pairs.push_back({i, j});
  const int p = static_cast<int>(pairs.size());

  // Shard on the choice of the first pair taken; each shard is a
  // combination of the remaining pairs.
  std::vector<std::set<CanonicalGraph>> shards(std::max(p, 1));
  auto work = [&](std::size_t first) {
    std::set<CanonicalGraph>& found = shards[first];
    if (edges == 0) {
      if (first == 0) {
        OrientedGraph g{vertices, {}};
        if (is_connected(vertices, g.edges))
          if (auto c = canonicalize_unchecked(g)) found.insert(c->graph);
      }
      return;
    }
    int f = static_cast<int>(first);
    int rest = edges - 1;
    if (p - f - 1 < rest) return;
    std::vector<int> idx(rest);
    for (int k = 0; k < rest; ++k) idx[k] = f + 1 + k;
    OrientedGraph g{vertices, std::vector<Edge>(edges)};
    while (true) {
      g.edges[0] = pairs[f];
      for (int k = 0; k < rest; ++k) g.edges[k + 1] = pairs[idx[k]];
      if (is_connected(vertices, g.edges))
        if (auto c = canonicalize_unchecked(g)) found.insert(c->graph);
      int k = rest - 1;
      while (k >= 0 && idx[k] == p - rest + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < rest; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  parallel_for(shards.size(), work);

  std::set<CanonicalGraph> all;
  for (auto& s : shards) all.merge(s);
  return {all.begin(), all.end()};
}

CanonicalGraph point_graph() { return canonicalize_unchecked(OrientedGraph{1, {}})->graph; }

CanonicalGraph edge_graph() { return canonicalize_unchecked(OrientedGraph{2, {{0, 1}}})->graph; }

std::string describe(const OrientedGraph& g) {
  std::ostringstream os;
  os << "{n=" << g.vertex_count << ";";
  for (const auto& e : g.edges) os << " " << e.source << "->" << e.target;
  os << "}";
  return os.str();
}

}  // namespace orgc
