#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "orgc/sparse_matrix.hpp"

namespace orgc {

enum class PivotStrategy {
  Markowitz,  // minimum (r-1)(c-1) fill-in estimate
  Natural,    // leftmost column first, shortest row among candidates
};

struct EliminationOptions {
  PivotStrategy strategy = PivotStrategy::Markowitz;
  // Runs a mod 2^31-1 elimination first and uses its pivot columns as the exact
  // pivot order. Only affects the order, never the result.
  bool modular_prepass = false;
};

struct Inconsistent {};

using SolveResult = std::variant<std::vector<Rational>, Inconsistent>;

std::size_t rank(const SparseMatrix& m, const EliminationOptions& options = {});

// Throws InputError if b.size() != m.rows().
SolveResult solve(const SparseMatrix& m, const std::vector<Rational>& b, const EliminationOptions& options = {});

// Basis of the right kernel, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m, const EliminationOptions& options = {});

// Reduced row echelon data: pivot columns in the order they were chosen.
struct Echelon {
  std::vector<int> pivot_columns;
  std::vector<SparseVector> pivot_rows;  // row i has pivot_columns[i] as its only pivot entry
};
Echelon reduce(const SparseMatrix& m, const EliminationOptions& options = {});

}  // namespace orgc
