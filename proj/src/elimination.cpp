#include "orgc/elimination.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "orgc/modular.hpp"

namespace orgc {

namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Rational* find_entry(SparseVector& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Sparse Gauss(-Jordan) elimination on rows. Column index `cols` (if present) is a
// right-hand side and never becomes a pivot.
class Eliminator {
 public:
  Eliminator(std::vector<SparseVector> rows, int cols, bool jordan)
      : rows_(std::move(rows)), cols_(cols), jordan_(jordan), active_(rows_.size(), true), col_rows_(cols) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [c, v] : rows_[i])
        if (c < cols_) col_rows_[c].insert(static_cast<int>(i));
  }

  void run(const EliminationOptions& options, const SparseMatrix* source) {
    if (options.modular_prepass && source) {
      if (auto order = modular_pivot_columns(*source)) {
        for (int c : *order) {
          int best = -1;
          for (int r : col_rows_[c])
            if (active_[r] && (best < 0 || length(r) < length(best))) best = r;
          if (best >= 0) pivot(best, c);
        }
      }
    }
    if (options.strategy == PivotStrategy::Natural) {
      for (int c = 0; c < cols_; ++c) {
        int best = -1;
        for (int r : col_rows_[c])
          if (active_[r] && (best < 0 || length(r) < length(best))) best = r;
        if (best >= 0) pivot(best, c);
      }
      return;
    }
    while (true) {
      auto [r, c] = choose_markowitz();
      if (r < 0) break;
      pivot(r, c);
    }
  }

  const std::vector<std::pair<int, int>>& pivots() const { return pivots_; }
  const SparseVector& row(int r) const { return rows_[r]; }
  bool active(int r) const { return active_[r]; }
  std::size_t row_count() const { return rows_.size(); }

 private:
  std::size_t length(int r) const {
    const auto& row = rows_[r];
    return (!row.empty() && row.back().first >= cols_) ? row.size() - 1 : row.size();
  }

  std::pair<int, int> choose_markowitz() const {
    std::size_t min_len = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (active_[r]) {
        std::size_t len = length(static_cast<int>(r));
        if (len > 0) min_len = std::min(min_len, len);
      }
    if (min_len == std::numeric_limits<std::size_t>::max()) return {-1, -1};
    constexpr int kCandidateRows = 8;
    int seen = 0;
    std::pair<int, int> best{-1, -1};
    std::size_t best_cost = std::numeric_limits<std::size_t>::max(), best_bits = 0;
    for (std::size_t r = 0; r < rows_.size() && seen < kCandidateRows; ++r) {
      if (!active_[r]) continue;
      std::size_t len = length(static_cast<int>(r));
      if (len == 0 || len > min_len + 1) continue;
      ++seen;
      for (const auto& [c, v] : rows_[r]) {
        if (c >= cols_) break;
        std::size_t cost = (len - 1) * (col_rows_[c].size() - 1);
        std::size_t bits = bit_size(v);
        if (cost < best_cost || (cost == best_cost && bits < best_bits)) {
          best = {static_cast<int>(r), c};
          best_cost = cost;
          best_bits = bits;
        }
      }
    }
    return best;
  }

  void pivot(int p, int c) {
    active_[p] = false;
    pivots_.emplace_back(p, c);
    SparseVector& prow = rows_[p];
    const Rational inv = 1 / *find_entry(prow, c);
    for (auto& [k, v] : prow) v *= inv;
    std::vector<int> targets;
    for (int r : col_rows_[c])
      if (r != p && (jordan_ || active_[r])) targets.push_back(r);
    for (int r : targets) axpy(r, p, c);
    if (!jordan_)
      for (const auto& [k, v] : prow)
        if (k < cols_) col_rows_[k].erase(p);
  }

  // rows_[r] -= rows_[r][c] * rows_[p]
  void axpy(int r, int p, int c) {
    SparseVector& dst = rows_[r];
    const SparseVector& src = rows_[p];
    const Rational f = *find_entry(dst, c);
    SparseVector out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        out.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        int k = src[j].first;
        out.emplace_back(k, -f * src[j].second);
        if (k < cols_) col_rows_[k].insert(r);
        ++j;
      } else {
        int k = src[j].first;
        Rational v = dst[i].second - f * src[j].second;
        if (is_zero(v)) {
          if (k < cols_) col_rows_[k].erase(r);
        } else {
          out.emplace_back(k, std::move(v));
        }
        ++i, ++j;
      }
    }
    dst = std::move(out);
  }

  std::vector<SparseVector> rows_;
  int cols_;
  bool jordan_;
  std::vector<bool> active_;
  std::vector<std::set<int>> col_rows_;
  std::vector<std::pair<int, int>> pivots_;
};

}  // namespace

std::size_t rank(const SparseMatrix& m, const EliminationOptions& options) {
  // Fewer rows than columns keeps the working set smaller; rank is transpose-invariant.
  if (m.rows() > m.cols()) {
    SparseMatrix t = m.transpose();
    Eliminator e(t.row_vectors(), m.rows(), false);
    e.run(options, &t);
    return e.pivots().size();
  }
  Eliminator e(m.row_vectors(), m.cols(), false);
  e.run(options, &m);
  return e.pivots().size();
}

Echelon reduce(const SparseMatrix& m, const EliminationOptions& options) {
  Eliminator e(m.row_vectors(), m.cols(), true);
  e.run(options, &m);
  Echelon out;
  for (auto [r, c] : e.pivots()) {
    out.pivot_columns.push_back(c);
    out.pivot_rows.push_back(e.row(r));
  }
  return out;
}

SolveResult solve(const SparseMatrix& m, const std::vector<Rational>& b, const EliminationOptions& options) {
  if (static_cast<int>(b.size()) != m.rows()) throw InputError("solve: right-hand side has wrong length");
  auto rows = m.row_vectors();
  for (int r = 0; r < m.rows(); ++r)
    if (!is_zero(b[r])) rows[r].emplace_back(m.cols(), b[r]);
  Eliminator e(std::move(rows), m.cols(), true);
  e.run(options, &m);
  for (std::size_t r = 0; r < e.row_count(); ++r)
    if (e.active(static_cast<int>(r)) && !e.row(static_cast<int>(r)).empty()) return Inconsistent{};
  std::vector<Rational> x(m.cols());
  for (auto [r, c] : e.pivots()) {
    const auto& row = e.row(r);
    if (!row.empty() && row.back().first == m.cols()) x[c] = row.back().second;
  }
  return x;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m, const EliminationOptions& options) {
  Echelon ech = reduce(m, options);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<int> free_index(m.cols(), -1);
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) {
      free_index[c] = static_cast<int>(basis.size());
      basis.emplace_back(m.cols());
      basis.back()[c] = 1;
    }
  for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
    int pc = ech.pivot_columns[i];
    for (const auto& [c, v] : ech.pivot_rows[i])
      if (c != pc) basis[free_index[c]][pc] = -v;
  }
  return basis;
}

}  // namespace orgc
