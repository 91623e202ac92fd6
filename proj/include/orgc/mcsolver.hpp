#pragma once

#include <variant>
#include <vector>

#include "orgc/elimination.hpp"
#include "orgc/graph_vector.hpp"

namespace orgc {

struct OrderCheck {
  int order = 0;
  bool is_zero = false;
};

// Whether each residual order 0..up_to of the MC equation vanishes.
std::vector<OrderCheck> verify_mc(const GraphSeries& s, int up_to);

struct ObstructionClass {
  int order = 0;
  GraphVector obstruction;  // delta-closed, not delta-exact
};

using ExtendResult = std::variant<GraphSeries, ObstructionClass>;

// Solves delta X = -1/2 sum_{i+j=order, i,j>=1} [s_i, s_j] and returns s truncated
// below `order` plus hbar^order X. Requires s_0 = edge and the MC equation through
// order-1 (InputError otherwise). A non-closed obstruction throws std::logic_error.
ExtendResult extend_mc(const GraphSeries& s, int order, const EliminationOptions& options = {});

// The obstruction itself, without solving.
GraphVector mc_obstruction(const GraphSeries& s, int order);

// edge + hbar upsilon4 + ... extended through hbar^order, cached per process.
const GraphSeries& ks_series(int order);

}  // namespace orgc
