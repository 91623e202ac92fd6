#include "orgc/modular.hpp"

#include <algorithm>
#include <utility>

namespace orgc {

namespace {

std::optional<std::uint32_t> reduce_mod_p(const Rational& q) {
  const Integer p(simd::kPrime);
  Integer num = q.get_num() % p;
  Integer den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) return std::nullopt;
  auto n = static_cast<std::uint32_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  return simd::mul_mod(n, simd::inv_mod(d));
}

}  // namespace

std::optional<std::vector<int>> modular_pivot_columns(const SparseMatrix& m, simd::Kernel kernel,
                                                      std::size_t max_cells) {
  const std::size_t cols = m.cols();
  if (cols * std::min<std::size_t>(m.rows(), cols) > max_cells) return std::nullopt;
  // Rows are inserted one at a time into an echelon basis. Each basis vector is
  // normalised to 1 at its lead and vanishes at the leads inserted before it, so a
  // single pass in insertion order reduces a new row.
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<int> lead;
  std::vector<std::uint32_t> v(cols);
  for (const auto& row : m.row_vectors()) {
    if (row.empty()) continue;
    std::fill(v.begin(), v.end(), 0u);
    for (const auto& [c, q] : row) {
      auto x = reduce_mod_p(q);
      if (!x) return std::nullopt;
      v[c] = *x;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::uint32_t a = v[lead[i]];
      if (a != 0) simd::axpy(kernel, v.data(), basis[i].data(), simd::kPrime - a, cols);
    }
    std::size_t k = 0;
    while (k < cols && v[k] == 0) ++k;
    if (k == cols) continue;
    const std::uint32_t inv = simd::inv_mod(v[k]);
    for (auto& x : v) x = simd::mul_mod(x, inv);
    basis.push_back(v);
    lead.push_back(static_cast<int>(k));
    if (basis.size() == cols) break;
  }
  std::sort(lead.begin(), lead.end());
  return lead;
}

std::optional<std::size_t> modular_rank(const SparseMatrix& m, simd::Kernel kernel) {
  auto p = modular_pivot_columns(m, kernel);
  if (!p) return std::nullopt;
  return p->size();
}

}  // namespace orgc
