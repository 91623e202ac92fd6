#pragma once

#include <vector>

#include "orgc/graph_vector.hpp"
#include "orgc/propad.hpp"

namespace orgc {

// Highest hbar order of the KS element available to delta_diamond.
inline constexpr int kMaxTruncation = 2;

// F(hbar^k g) on a single generator: all attachments of c's labelled legs to the
// vertices of g and all weight decorations summing to c.a - k. Zero if k > c.a.
PropadVector act(int k, const CanonicalGraph& g, const Corolla& c);
PropadVector act(int k, const GraphVector& g, const Corolla& c);

// F(hbar^k g) extended to composites as a derivation: each vertex in turn is
// replaced by g, its half-edges reattached to g's vertices, g's edges placed in
// front of the edge list.
PropadVector derive(int k, const GraphVector& g, const PropadTerm& t);
PropadVector derive(int k, const GraphVector& g, const PropadVector& v);

// F(Upsilon_KS) on a generator, keeping hbar orders k <= trunc.
// Throws InputError for trunc outside [0, kMaxTruncation].
PropadVector delta_diamond(const Corolla& c, int trunc);
PropadVector delta_on_term(const PropadTerm& t, int trunc);
PropadVector delta_on_vector(const PropadVector& v, int trunc);

// Two-corolla splitting sum of the classical differential, built directly from
// subsets of the leg labels.
PropadVector delta_classical(int m, int n);

// Drops terms whose weight fell by more than max_loss from initial_weight.
PropadVector truncate_hbar(const PropadVector& v, int initial_weight, int max_loss);

// Four weight-zero corollas A(2,1), B(2,1), C(1,2), D(1,2) wired A->B, A->C,
// B->C, B->D, C->D with input 1 at A and output 1 at D. Canonical form, with the
// sign of the orientation as drawn (edges in the listed order).
SignedTerm quantizability_composite();

struct SquareCheck {
  Corolla corolla;
  PropadVector residual;  // delta_diamond applied twice, truncated
  bool vanishes() const { return residual.empty(); }
};

// All generators with m+n <= max_arity and a <= max_weight.
std::vector<SquareCheck> check_delta_squared(int max_arity, int max_weight, int trunc);

}  // namespace orgc
