#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "orgc/elimination.hpp"
#include "orgc/graph_vector.hpp"
#include "orgc/sparse_matrix.hpp"

namespace orgc {

// enumerate_basis(n, l), computed once per process.
std::shared_ptr<const std::vector<CanonicalGraph>> cached_basis(int n, int l);

// Throws InputError if some term of v is not in basis.
std::vector<Rational> coordinates(const GraphVector& v, const std::vector<CanonicalGraph>& basis);
GraphVector from_coordinates(const std::vector<Rational>& x, const std::vector<CanonicalGraph>& basis);

// Matrix of delta from basis(n, l) to basis(n+1, l+1). Columns follow the source
// basis order, rows the target basis order. Throws InputError if n < 1 or l < 0.
SparseMatrix matrix_of_differential(int n, int l);

struct CohomologyReport {
  int n = 0;
  int l = 0;
  std::size_t dim_basis = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_image_incoming = 0;
  std::size_t dim_cohomology = 0;
  std::vector<GraphVector> representatives;

  int degree() const { return 2 * (n - 1) - l; }
};

CohomologyReport cohomology(int n, int l, const EliminationOptions& options = {});

// Exact incremental independence test for sparse vectors.
class SpanBuilder {
 public:
  // Returns true (and keeps v) iff v is not in the span of the vectors kept so far.
  bool insert(SparseVector v);
  std::size_t dimension() const { return basis_.size(); }
  bool contains(SparseVector v) const;

 private:
  SparseVector reduced(SparseVector v) const;
  std::vector<SparseVector> basis_;  // each normalised to 1 at its first entry
};

SparseVector to_sparse(const std::vector<Rational>& x);

}  // namespace orgc
