#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orgc/simd/modp_kernels.hpp"
#include "orgc/sparse_matrix.hpp"

namespace orgc {

// A set of columns of m independent mod 2^31-1 (hence over Q), sorted, of size rank mod p. Returns nullopt when an
// entry's denominator vanishes mod p or the dense working set would exceed max_cells.
std::optional<std::vector<int>> modular_pivot_columns(const SparseMatrix& m,
                                                      simd::Kernel kernel = simd::best_kernel(),
                                                      std::size_t max_cells = std::size_t(1) << 26);

// Rank mod p. Heuristic only; a lower bound for the rational rank.
std::optional<std::size_t> modular_rank(const SparseMatrix& m, simd::Kernel kernel = simd::best_kernel());

}  // namespace orgc
