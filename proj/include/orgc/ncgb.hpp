#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orgc/rational.hpp"

namespace orgc::nc {

// Letter codes: x_i is +i (1..n, word degree 1), u_j is -j (1..n-2, word degree 3,
// homological degree -1).
using Word = std::vector<int>;

int word_degree(const Word& w);
int homological_degree(const Word& w);
std::string to_string(const Word& w);

class NcPoly {
 public:
  using Terms = std::map<Word, Rational>;

  NcPoly() = default;
  explicit NcPoly(const Word& w, const Rational& c = 1) { add(w, c); }

  void add(const Word& w, const Rational& c);
  void add(const NcPoly& p, const Rational& c = 1);
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool is_homogeneous() const;

  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  Terms terms_;
};

std::string to_string(const NcPoly& p);

/// Total order on x_1..x_n extended degree-lexicographically to words.
class MonomialOrder {
 public:
  enum class IntraClass { Ascending, Descending };

  // Letters with index divisible by 3 above all others; within each class by
  // index in the given direction.
  static MonomialOrder lemma(int n, IntraClass intra = IntraClass::Ascending);
  // rank[i-1] is the rank of x_i (higher is greater). Throws InputError if it is
  // not a permutation of 0..n-1 or violates the class constraint.
  static MonomialOrder from_ranks(const std::vector<int>& ranks);
  // Any total order, with no class constraint.
  static MonomialOrder unconstrained(const std::vector<int>& ranks);

  int letters() const { return static_cast<int>(rank_.size()); }
  int rank(int letter) const;
  bool less(const Word& a, const Word& b) const;

 private:
  std::vector<int> rank_;
};

// [[x_i, x_{i+2}], x_{i+1}] expanded. Requires 1 <= i <= n-2.
NcPoly expand_relation(int i, int n);
std::vector<NcPoly> relations(int n);

// Throws InputError on the zero polynomial or non-x letters.
Word leading_monomial(const NcPoly& p, const MonomialOrder& ord);

// Coefficients indexed by permutations of {1,2,3} in lexicographic order:
// 123, 132, 213, 231, 312, 321.
using S3Coefficients = std::array<Rational, 6>;
inline constexpr std::array<std::array<int, 3>, 6> kS3 = {
    {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};

// For each first index, at least one of the two coefficients is nonzero.
bool check_condition_lm(const S3Coefficients& c);

// sum_sigma c_sigma x_{i+sigma(1)} x_{i+sigma(2)} x_{i+sigma(3)}, window {i+1,i+2,i+3}.
NcPoly window_relation(int i, const S3Coefficients& c);

struct StrongFreeCertificate {
  bool passed = false;
  std::vector<Word> leading_words;
  bool distinct = false;
  bool no_inclusion = false;
  bool no_overlap = false;
  // every leading word starts with a letter whose index is divisible by 3 and
  // no later letter is
  bool initial_letter_pattern = false;
  std::vector<std::string> witnesses;
};

// Throws InputError on inhomogeneous or zero relations.
StrongFreeCertificate strongly_free_check(int n, const std::vector<NcPoly>& relations, const MonomialOrder& ord);

// Number of words in x_1..x_n of each length 0..max_degree containing no
// leading word as a subword.
std::vector<Integer> normal_word_counts(int n, const std::vector<Word>& leading_words, int max_degree);

// Normal-word counts for A_n under the lemma order. Throws InputError if the
// relations are not strongly free.
std::vector<Integer> hilbert(int n, int max_degree);

// Coefficients of 1 / (1 - n t + (n-2) t^3).
std::vector<Integer> hilbert_formula(int n, int max_degree);

// d(x_i) = 0, d(u_j) = expand_relation(j), graded Leibniz with sign (-1) per u passed.
NcPoly dg_differential(const NcPoly& p, int n);

struct DgCohomologyEntry {
  int word_degree = 0;
  int homological_degree = 0;
  std::size_t dim_chains = 0;
  std::size_t dim_cohomology = 0;
};

struct DgCohomology {
  int n = 0;
  int max_degree = 0;
  std::vector<DgCohomologyEntry> entries;  // every bidegree with chains

  bool concentrated_in_degree_zero() const;
  std::vector<std::size_t> degree_zero_dimensions() const;  // indexed by word degree
};

// Brute-force cohomology of the dg algebra on x's and u's. Throws ResourceError
// if some bidegree has more than max_words words.
DgCohomology dg_cohomology(int n, int max_degree, std::size_t max_words = 2'000'000);

}  // namespace orgc::nc
