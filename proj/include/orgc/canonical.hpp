#pragma once

// Canonical labeling of small vertex-coloured directed graphs whose edges are
// odd (swapping two edges flips the sign). Shared by the graph complex and the
// properad term representation.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace orgc {

struct Edge {
  int source = 0;
  int target = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int kMaxCanonicalVertices = 16;

struct Labeling {
  // relabel[v] is the canonical position of input vertex v.
  std::vector<int> relabel;
  // Sign of the permutation taking the relabeled input edge order to the
  // sorted canonical edge order.
  int sign = 1;
  // True when some colour-preserving automorphism permutes the edges oddly,
  // or when two edges are parallel.
  bool vanishes = false;
};

// `colors` must be an isomorphism-invariant colouring (equal decorations get
// equal integers). Vertex count is limited to kMaxCanonicalVertices.
Labeling canonical_labeling(int vertex_count, std::span<const Edge> edges,
                            std::span<const int> colors);

// Parity of the permutation sorting `edges`; returns 0 when two entries are
// equal.
int sorting_sign(std::span<const Edge> edges);

// Vertex colours invariant under isomorphism: longest path from a source and
// to a sink, combined with the caller's decoration colour.
std::vector<int> layer_colors(int vertex_count, std::span<const Edge> edges,
                              std::span<const int> base_colors);

bool is_acyclic(int vertex_count, std::span<const Edge> edges);
bool is_connected(int vertex_count, std::span<const Edge> edges);

// Dense ranks of arbitrary comparable keys: equal keys share a rank and ranks
// follow the key order.
template <class Key>
std::vector<int> dense_ranks(const std::vector<Key>& keys);

}  // namespace orgc

#include <algorithm>

template <class Key>
std::vector<int> orgc::dense_ranks(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return out;
}
