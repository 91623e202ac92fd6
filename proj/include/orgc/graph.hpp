#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orgc/canonical.hpp"

namespace orgc {

/// A directed graph with an ordered edge list; the list position of an edge is
/// its label. Vertices are 0-based.
struct OrientedGraph {
  int vertex_count = 1;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  friend auto operator<=>(const OrientedGraph&, const OrientedGraph&) = default;
};

/// A connected simple DAG in canonical labeling with edges sorted. Only
/// constructible through canonicalize() or enumerate_basis().
class CanonicalGraph {
 public:
  const OrientedGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count; }
  int edge_count() const { return graph_.edge_count(); }
  const std::vector<Edge>& edges() const { return graph_.edges; }

  // deg = 2(n-1) - l; edges have degree -1, vertices +2.
  int degree() const { return 2 * (vertex_count() - 1) - edge_count(); }
  int loop_order() const { return edge_count() - vertex_count() + 1; }

  friend auto operator<=>(const CanonicalGraph&, const CanonicalGraph&) = default;

 private:
  friend struct CanonicalGraphAccess;
  OrientedGraph graph_;
};

struct SignedGraph {
  CanonicalGraph graph;
  int sign = 1;
};

// Range and direction check only: true iff no directed cycle.
bool is_oriented(const OrientedGraph& g);

// Validates indices, then: nullopt when the graph vanishes (odd automorphism
// or parallel edges). Throws InputError on cyclic or disconnected input.
std::optional<SignedGraph> canonicalize(const OrientedGraph& g);

// All nonvanishing isomorphism classes of connected simple DAGs with n
// vertices and l edges, sorted.
std::vector<CanonicalGraph> enumerate_basis(int vertices, int edges);

CanonicalGraph point_graph();
CanonicalGraph edge_graph();

std::string describe(const OrientedGraph& g);

}  // namespace orgc
