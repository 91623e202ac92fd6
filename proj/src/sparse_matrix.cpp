#include "orgc/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orgc {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  columns_.resize(cols);
}

SparseMatrix SparseMatrix::from_entries(int rows, int cols, const std::vector<MatrixEntry>& entries) {
  SparseMatrix m(rows, cols);
  for (const auto& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw InputError("matrix entry out of range");
    if (is_zero(e.value)) continue;
    m.columns_[e.col].emplace_back(e.row, e.value);
  }
  for (auto& col : m.columns_) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < col.size(); ++i)
      if (col[i].first == col[i - 1].first) throw InputError("duplicate matrix entry");
  }
  return m;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Rational(1));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

void SparseMatrix::set_column(int c, SparseVector column) {
  if (c < 0 || c >= cols_) throw InputError("column out of range");
  std::erase_if(column, [](const auto& e) { return is_zero(e.second); });
  std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column[i].first < 0 || column[i].first >= rows_) throw InputError("row out of range");
    if (i > 0 && column[i].first == column[i - 1].first) throw InputError("duplicate matrix entry");
  }
  columns_[c] = std::move(column);
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
  std::vector<MatrixEntry> out;
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
  return out;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> rows(rows_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) rows[r].emplace_back(c, v);
  return rows;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  t.columns_ = row_vectors();
  return t;
}

std::vector<Rational> SparseMatrix::multiply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw InputError("multiply: dimension mismatch");
  std::vector<Rational> y(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (is_zero(x[c])) continue;
    for (const auto& [r, v] : columns_[c]) y[r] += v * x[c];
  }
  return y;
}

std::string SparseMatrix::to_coordinate_text() const {
  std::ostringstream os;
  os << rows_ << " " << cols_ << " " << nnz() << "\n";
  for (const auto& e : entries()) os << e.row << " " << e.col << " " << to_string(e.value) << "\n";
  return os.str();
}

SparseMatrix SparseMatrix::from_coordinate_text(const std::string& text) {
  std::istringstream is(text);
  long long rows = -1, cols = -1, nnz = -1;
  if (!(is >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
    throw InputError("coordinate text: bad header");
  std::vector<MatrixEntry> entries;
  for (long long i = 0; i < nnz; ++i) {
    int r, c;
    std::string q;
    if (!(is >> r >> c >> q)) throw InputError("coordinate text: truncated entry list");
    entries.push_back({r, c, parse_rational(q)});
  }
  return from_entries(static_cast<int>(rows), static_cast<int>(cols), entries);
}

}  // namespace orgc
