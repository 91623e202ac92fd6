#pragma once

#include "orgc/graph_vector.hpp"

namespace orgc {

// Sum over all ways of reattaching the edges at vertex v of host to vertices
// of guest. Summand edge order: host edges (reattached) then guest edges.
GraphVector insert(const CanonicalGraph& host, int v, const CanonicalGraph& guest);

// Pre-Lie product: bilinear extension of sum_v insert(host, v, guest).
GraphVector circ(const GraphVector& a, const GraphVector& b);

// [a,b] = a o b - (-1)^{|a||b|} b o a. Throws InputError on inhomogeneous input.
GraphVector bracket(const GraphVector& a, const GraphVector& b);

// delta = [edge, .]
GraphVector differential(const GraphVector& a);

// Order-k component is 1/2 sum_{i+j=k} [s_i, s_j], for k <= max_order.
GraphSeries mc_residual(const GraphSeries& s, int max_order);

// The degree-one cocycle on four vertices spanning H^1.
GraphVector upsilon4();

// The three four-vertex graphs supporting upsilon4, in the order they are
// usually drawn: source with a middle fork, the diamond with a chord, and the
// mirror of the first.
std::vector<OrientedGraph> upsilon4_shapes();

// edge + hbar * upsilon4
GraphSeries ks_seed();

}  // namespace orgc
