#include "orgc/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace orgc {

int sorting_sign(std::span<const Edge> edges) {
  int sign = 1;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] == edges[j]) return 0;
      if (edges[j] < edges[i]) sign = -sign;
    }
  return sign;
}

bool is_acyclic(int vertex_count, std::span<const Edge> edges) {
  std::vector<int> indeg(vertex_count, 0);
  std::vector<std::vector<int>> out(vertex_count);
  for (const auto& e : edges) {
    out[e.source].push_back(e.target);
    ++indeg[e.target];
  }
  std::vector<int> stack;
  for (int v = 0; v < vertex_count; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return seen == vertex_count;
}

bool is_connected(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count <= 1) return true;
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = vertex_count;
  for (const auto& e : edges) {
    int a = find(e.source), b = find(e.target);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<int> layer_colors(int vertex_count, std::span<const Edge> edges,
                              std::span<const int> base_colors) {
  std::vector<int> depth(vertex_count, 0), height(vertex_count, 0);
  if (is_acyclic(vertex_count, edges)) {
    // Longest-path relaxation; vertex_count rounds suffice on a DAG.
    for (int round = 0; round < vertex_count; ++round) {
      bool changed = false;
      for (const auto& e : edges) {
        if (depth[e.target] < depth[e.source] + 1) {
          depth[e.target] = depth[e.source] + 1;
          changed = true;
        }
        if (height[e.source] < height[e.target] + 1) {
          height[e.source] = height[e.target] + 1;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }
  std::vector<std::tuple<int, int, int>> keys(vertex_count);
  for (int v = 0; v < vertex_count; ++v)
    keys[v] = {base_colors.empty() ? 0 : base_colors[v], depth[v], height[v]};
  return dense_ranks(keys);
}

namespace {

using Mask = std::uint32_t;

std::vector<int> refine(int n, const std::vector<Mask>& out, const std::vector<Mask>& in,
                        std::vector<int> colors) {
  auto count_classes = [](const std::vector<int>& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  };
  int classes = count_classes(colors);
  while (true) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Sig> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> o, i;
      for (int w = 0; w < n; ++w) {
        if (out[v] >> w & 1u) o.push_back(colors[w]);
        if (in[v] >> w & 1u) i.push_back(colors[w]);
      }
      std::sort(o.begin(), o.end());
      std::sort(i.begin(), i.end());
      sigs[v] = {colors[v], std::move(o), std::move(i)};
    }
    auto next = dense_ranks(sigs);
    int next_classes = count_classes(next);
    colors = std::move(next);
    if (next_classes == classes) return colors;
    classes = next_classes;
  }
}

struct Search {
  int n = 0;
  const std::vector<Mask>* out = nullptr;
  std::span<const Edge> edges;
  std::vector<int> cell_color;  // colour required at each position
  std::vector<int> colors;

  std::array<int, kMaxCanonicalVertices> perm{};
  std::array<Mask, kMaxCanonicalVertices> code{};
  std::array<Mask, kMaxCanonicalVertices> best{};
  bool have_best = false;
  std::vector<int> best_relabel;
  int best_sign = 1;
  bool vanishes = false;
  Mask used = 0;

  Mask chunk(int v, int k) const {
    Mask c = 0;
    for (int j = 0; j < k; ++j) {
      int w = perm[j];
      if ((*out)[v] >> w & 1u) c |= Mask{1} << (2 * j);
      if ((*out)[w] >> v & 1u) c |= Mask{1} << (2 * j + 1);
    }
    return c;
  }

  int leaf_sign(std::vector<int>& relabel) const {
    relabel.assign(n, 0);
    for (int k = 0; k < n; ++k) relabel[perm[k]] = k;
    std::vector<Edge> mapped;
    mapped.reserve(edges.size());
    for (const auto& e : edges) mapped.push_back({relabel[e.source], relabel[e.target]});
    return sorting_sign(mapped);
  }

  // Lexicographic comparison of code[0..k-1] followed by `c` against best[0..k].
  int compare_prefix(int k, Mask c) const {
    for (int j = 0; j < k; ++j)
      if (code[j] != best[j]) return code[j] < best[j] ? -1 : 1;
    if (c != best[k]) return c < best[k] ? -1 : 1;
    return 0;
  }

  void descend(int k) {
    if (vanishes) return;
    if (k == n) {
      std::vector<int> relabel;
      int s = leaf_sign(relabel);
      int cmp = 0;
      if (have_best)
        for (int j = 0; j < n && cmp == 0; ++j)
          if (code[j] != best[j]) cmp = code[j] < best[j] ? -1 : 1;
      if (!have_best || cmp < 0) {
        best = code;
        have_best = true;
        best_relabel = std::move(relabel);
        best_sign = s;
      } else if (cmp == 0 && s != best_sign) {
        vanishes = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1u || colors[v] != cell_color[k]) continue;
      Mask c = chunk(v, k);
      if (have_best && compare_prefix(k, c) > 0) continue;
      perm[k] = v;
      code[k] = c;
      used |= Mask{1} << v;
      descend(k + 1);
      used &= ~(Mask{1} << v);
      if (vanishes) return;
    }
  }
};

}  // namespace

Labeling canonical_labeling(int vertex_count, std::span<const Edge> edges,
                            std::span<const int> colors) {
  if (vertex_count < 1 || vertex_count > kMaxCanonicalVertices)
    throw std::invalid_argument("canonical_labeling: vertex count out of range");
  Labeling result;
  std::vector<Mask> out(vertex_count, 0), in(vertex_count, 0);
  for (const auto& e : edges) {
    if (out[e.source] >> e.target & 1u) {
      result.vanishes = true;
      result.relabel.resize(vertex_count);
      std::iota(result.relabel.begin(), result.relabel.end(), 0);
      result.sign = 0;
      return result;
    }
    out[e.source] |= Mask{1} << e.target;
    in[e.target] |= Mask{1} << e.source;
  }

  auto refined = refine(vertex_count, out, in, layer_colors(vertex_count, edges, colors));

  Search search;
  search.n = vertex_count;
  search.out = &out;
  search.edges = edges;
  search.colors = refined;
  search.cell_color = refined;
  std::sort(search.cell_color.begin(), search.cell_color.end());
  search.descend(0);

  result.vanishes = search.vanishes;
  result.relabel = std::move(search.best_relabel);
  result.sign = search.vanishes ? 0 : search.best_sign;
  return result;
}

}  // namespace orgc
