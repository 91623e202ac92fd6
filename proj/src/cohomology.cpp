#include "orgc/cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "orgc/gclie.hpp"
#include "orgc/parallel.hpp"

namespace orgc {

namespace {

void check_bigrade(int n, int l) {
  if (n < 1 || l < 0) throw InputError("invalid bigrade (" + std::to_string(n) + "," + std::to_string(l) + ")");
}

int index_of(const CanonicalGraph& g, const std::vector<CanonicalGraph>& basis) {
  auto it = std::lower_bound(basis.begin(), basis.end(), g);
  if (it == basis.end() || *it != g) return -1;
  return static_cast<int>(it - basis.begin());
}

// dst -= f * src, both sorted sparse vectors
void sparse_axpy(SparseVector& dst, const Rational& f, const SparseVector& src) {
  SparseVector out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -f * src[j].second);
      ++j;
    } else {
      Rational v = dst[i].second - f * src[j].second;
      if (!is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
      ++i, ++j;
    }
  }
  dst = std::move(out);
}

}  // namespace

std::shared_ptr<const std::vector<CanonicalGraph>> cached_basis(int n, int l) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<CanonicalGraph>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, l}); it != cache.end()) return it->second;
  }
  // Bigrades beyond the complete graph are empty rather than invalid here.
  const bool empty = n > 0 && (l < 0 || l > n * (n - 1) / 2);
  auto basis = std::make_shared<const std::vector<CanonicalGraph>>(empty ? std::vector<CanonicalGraph>{}
                                                                         : enumerate_basis(n, l));
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair(n, l), basis).first->second;
}

std::vector<Rational> coordinates(const GraphVector& v, const std::vector<CanonicalGraph>& basis) {
  std::vector<Rational> x(basis.size());
  for (const auto& [g, c] : v.terms()) {
    int i = index_of(g, basis);
    if (i < 0) throw InputError("graph " + describe(g.graph()) + " is not in the basis");
    x[i] = c;
  }
  return x;
}

GraphVector from_coordinates(const std::vector<Rational>& x, const std::vector<CanonicalGraph>& basis) {
  if (x.size() != basis.size()) throw InputError("coordinate vector has wrong length");
  GraphVector v;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) v.add(basis[i], x[i]);
  return v;
}

SparseMatrix matrix_of_differential(int n, int l) {
  check_bigrade(n, l);
  auto source = cached_basis(n, l);
  auto target = cached_basis(n + 1, l + 1);
  std::vector<SparseVector> columns(source->size());
  parallel_for(source->size(), [&](std::size_t i) {
    GraphVector image = differential(GraphVector((*source)[i]));
    SparseVector col;
    for (const auto& [g, c] : image.terms()) {
      int r = index_of(g, *target);
      if (r < 0) throw std::logic_error("differential left the target basis");
      col.emplace_back(r, c);
    }
    columns[i] = std::move(col);
  });
  SparseMatrix m(static_cast<int>(target->size()), static_cast<int>(source->size()));
  for (std::size_t i = 0; i < columns.size(); ++i) m.set_column(static_cast<int>(i), std::move(columns[i]));
  return m;
}

SparseVector to_sparse(const std::vector<Rational>& x) {
  SparseVector v;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) v.emplace_back(static_cast<int>(i), x[i]);
  return v;
}

SparseVector SpanBuilder::reduced(SparseVector v) const {
  // basis_[j] vanishes at the leads of basis_[i] for i < j, so one pass suffices.
  for (const auto& b : basis_) {
    if (v.empty()) break;
    const int lead = b.front().first;
    auto it = std::lower_bound(v.begin(), v.end(), lead, [](const auto& e, int c) { return e.first < c; });
    if (it == v.end() || it->first != lead) continue;
    Rational f = it->second;
    sparse_axpy(v, f, b);
  }
  return v;
}

bool SpanBuilder::insert(SparseVector v) {
  v = reduced(std::move(v));
  if (v.empty()) return false;
  const Rational inv = 1 / v.front().second;
  for (auto& [i, c] : v) c *= inv;
  basis_.push_back(std::move(v));
  return true;
}

bool SpanBuilder::contains(SparseVector v) const { return reduced(std::move(v)).empty(); }

CohomologyReport cohomology(int n, int l, const EliminationOptions& options) {
  check_bigrade(n, l);
  CohomologyReport report;
  report.n = n;
  report.l = l;
  auto basis = cached_basis(n, l);
  report.dim_basis = basis->size();
  SparseMatrix out = matrix_of_differential(n, l);
  auto kernel = kernel_basis(out, options);
  report.dim_kernel = kernel.size();
  SparseMatrix in;
  if (n >= 2 && l >= 1) {
    in = matrix_of_differential(n - 1, l - 1);
    report.dim_image_incoming = rank(in, options);
  }
  if (report.dim_image_incoming > report.dim_kernel)
    throw std::logic_error("image exceeds kernel: delta does not square to zero");
  report.dim_cohomology = report.dim_kernel - report.dim_image_incoming;
  if (report.dim_cohomology == 0) return report;

  SpanBuilder span;
  for (int c = 0; c < in.cols(); ++c) span.insert(in.column(c));
  for (const auto& k : kernel) {
    if (report.representatives.size() == report.dim_cohomology) break;
    if (span.insert(to_sparse(k))) report.representatives.push_back(from_coordinates(k, *basis));
  }
  if (report.representatives.size() != report.dim_cohomology)
    throw std::logic_error("failed to complete cohomology representatives");
  return report;
}

}  // namespace orgc
