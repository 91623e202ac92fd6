#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "orgc/rational.hpp"

namespace orgc {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Rational value;
};

using SparseVector = std::vector<std::pair<int, Rational>>;  // sorted by index, no zeros

/// Exact-rational sparse matrix stored by columns.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  // Throws InputError on out-of-range indices or duplicate (row, col).
  static SparseMatrix from_entries(int rows, int cols, const std::vector<MatrixEntry>& entries);
  static SparseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;

  // Replaces column c; zero entries are dropped, indices must be distinct.
  void set_column(int c, SparseVector column);
  const SparseVector& column(int c) const { return columns_.at(c); }

  // Entries in (row, col) order.
  std::vector<MatrixEntry> entries() const;
  // Row-major sparse rows.
  std::vector<SparseVector> row_vectors() const;

  SparseMatrix transpose() const;
  std::vector<Rational> multiply(const std::vector<Rational>& x) const;

  // "rows cols nnz" header, then one "row col p/q" line per entry (0-based).
  std::string to_coordinate_text() const;
  static SparseMatrix from_coordinate_text(const std::string& text);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace orgc
