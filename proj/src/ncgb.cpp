#include "orgc/ncgb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orgc/elimination.hpp"
#include "orgc/parallel.hpp"

namespace orgc::nc {

int word_degree(const Word& w) {
  int d = 0;
  for (int c : w) d += c > 0 ? 1 : 3;
  return d;
}

int homological_degree(const Word& w) {
  return -static_cast<int>(std::count_if(w.begin(), w.end(), [](int c) { return c < 0; }));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int c : w) s += (c > 0 ? "x" + std::to_string(c) : "u" + std::to_string(-c));
  return s;
}

void NcPoly::add(const Word& w, const Rational& c) {
  if (is_zero(c)) return;
  for (int letter : w)
    if (letter == 0) throw InputError("letter code 0 is not a letter");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

void NcPoly::add(const NcPoly& p, const Rational& c) {
  for (const auto& [w, x] : p.terms_) add(w, x * c);
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = word_degree(terms_.begin()->first);
  const int h = homological_degree(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) != d || homological_degree(w) != h) return false;
  return true;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

std::string to_string(const NcPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) os << orgc::to_string(a) << "*";
    os << to_string(w);
  }
  return os.str();
}

MonomialOrder MonomialOrder::lemma(int n, IntraClass intra) {
  if (n < 1) throw InputError("need at least one letter");
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  auto key = [&](int i) {
    int idx = intra == IntraClass::Ascending ? i : -i;
    return std::pair(i % 3 == 0, idx);
  };
  std::sort(letters.begin(), letters.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<int> ranks(n);
  for (int r = 0; r < n; ++r) ranks[letters[r] - 1] = r;
  return from_ranks(ranks);
}

MonomialOrder MonomialOrder::unconstrained(const std::vector<int>& ranks) {
  std::vector<int> check = ranks;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != static_cast<int>(i)) throw InputError("letter ranks must be a permutation");
  MonomialOrder o;
  o.rank_ = ranks;
  return o;
}

MonomialOrder MonomialOrder::from_ranks(const std::vector<int>& ranks) {
  MonomialOrder o = unconstrained(ranks);
  const int n = static_cast<int>(ranks.size());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a % 3 == 0 && b % 3 != 0 && ranks[a - 1] < ranks[b - 1])
        throw InputError("order violates the class constraint: x" + std::to_string(a) + " < x" +
                         std::to_string(b));
  return o;
}

int MonomialOrder::rank(int letter) const {
  if (letter < 1 || letter > letters()) throw InputError("letter outside the order's alphabet");
  return rank_[letter - 1];
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
  return false;
}

NcPoly expand_relation(int i, int n) {
  if (i < 1 || i > n - 2) throw InputError("relation index out of range");
  NcPoly p;
  p.add({i, i + 2, i + 1}, 1);
  p.add({i + 2, i, i + 1}, -1);
  p.add({i + 1, i, i + 2}, -1);
  p.add({i + 1, i + 2, i}, 1);
  return p;
}

std::vector<NcPoly> relations(int n) {
  std::vector<NcPoly> out;
  for (int i = 1; i <= n - 2; ++i) out.push_back(expand_relation(i, n));
  return out;
}

Word leading_monomial(const NcPoly& p, const MonomialOrder& ord) {
  if (p.empty()) throw InputError("leading monomial of zero");
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms()) {
    for (int letter : w)
      if (letter < 0) throw InputError("monomial order is defined on x letters only");
    if (!best || ord.less(*best, w)) best = &w;
  }
  return *best;
}

bool check_condition_lm(const S3Coefficients& c) {
  for (int first = 0; first < 3; ++first)
    if (is_zero(c[2 * first]) && is_zero(c[2 * first + 1])) return false;
  return true;
}

NcPoly window_relation(int i, const S3Coefficients& c) {
  if (i < 0) throw InputError("window start must be nonnegative");
  NcPoly p;
  for (std::size_t s = 0; s < kS3.size(); ++s) p.add({i + kS3[s][0], i + kS3[s][1], i + kS3[s][2]}, c[s]);
  return p;
}

namespace {

bool contains_subword(const Word& haystack, const Word& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

}  // namespace

StrongFreeCertificate strongly_free_check(int n, const std::vector<NcPoly>& rels, const MonomialOrder& ord) {
  if (ord.letters() != n) throw InputError("order alphabet size differs from n");
  StrongFreeCertificate cert;
  for (const auto& r : rels) {
    if (r.empty()) throw InputError("zero relation");
    if (!r.is_homogeneous()) throw InputError("inhomogeneous relation: " + to_string(r));
    cert.leading_words.push_back(leading_monomial(r, ord));
  }
  const auto& lw = cert.leading_words;
  cert.distinct = true;
  cert.no_inclusion = true;
  cert.no_overlap = true;
  for (std::size_t a = 0; a < lw.size(); ++a)
    for (std::size_t b = 0; b < lw.size(); ++b) {
      if (a < b && lw[a] == lw[b]) {
        cert.distinct = false;
        cert.witnesses.push_back("repeated leading word " + to_string(lw[a]));
      }
      if (a != b && lw[a] != lw[b] && contains_subword(lw[b], lw[a])) {
        cert.no_inclusion = false;
        cert.witnesses.push_back(to_string(lw[a]) + " is a subword of " + to_string(lw[b]));
      }
      const std::size_t shortest = std::min(lw[a].size(), lw[b].size());
      for (std::size_t k = 1; k < shortest; ++k)
        if (std::equal(lw[a].end() - k, lw[a].end(), lw[b].begin())) {
          cert.no_overlap = false;
          cert.witnesses.push_back("suffix of " + to_string(lw[a]) + " overlaps prefix of " + to_string(lw[b]) +
                                   " in " + to_string(Word(lw[b].begin(), lw[b].begin() + k)));
        }
    }
  cert.initial_letter_pattern = std::all_of(lw.begin(), lw.end(), [](const Word& w) {
    if (w.empty() || w[0] % 3 != 0) return false;
    return std::none_of(w.begin() + 1, w.end(), [](int c) { return c % 3 == 0; });
  });
  cert.passed = cert.distinct && cert.no_inclusion && cert.no_overlap;
  return cert;
}

std::vector<Integer> normal_word_counts(int n, const std::vector<Word>& leading_words, int max_degree) {
  if (n < 1) throw InputError("need at least one letter");
  if (max_degree < 0) throw InputError("negative degree");
  std::size_t longest = 1;
  for (const auto& w : leading_words) {
    if (w.empty()) return std::vector<Integer>(max_degree + 1, 0);
    for (int c : w)
      if (c < 1 || c > n) throw InputError("leading word outside the alphabet");
    longest = std::max(longest, w.size());
  }
  // State: the last (longest - 1) letters of a normal word.
  std::map<Word, Integer> states{{Word{}, 1}};
  std::vector<Integer> counts{1};
  for (int d = 1; d <= max_degree; ++d) {
    std::map<Word, Integer> next;
    Integer total = 0;
    for (const auto& [tail, count] : states)
      for (int c = 1; c <= n; ++c) {
        Word w = tail;
        w.push_back(c);
        bool bad = false;
        for (const auto& lead : leading_words)
          if (lead.size() <= w.size() && std::equal(lead.begin(), lead.end(), w.end() - lead.size())) {
            bad = true;
            break;
          }
        if (bad) continue;
        if (w.size() > longest - 1) w.erase(w.begin(), w.begin() + (w.size() - (longest - 1)));
        next[w] += count;
        total += count;
      }
    states = std::move(next);
    counts.push_back(total);
  }
  return counts;
}

std::vector<Integer> hilbert(int n, int max_degree) {
  if (n < 3) throw InputError("A_n needs n >= 3");
  auto ord = MonomialOrder::lemma(n);
  auto cert = strongly_free_check(n, relations(n), ord);
  if (!cert.passed) throw InputError("relations are not strongly free under the lemma order");
  return normal_word_counts(n, cert.leading_words, max_degree);
}

std::vector<Integer> hilbert_formula(int n, int max_degree) {
  std::vector<Integer> a;
  for (int k = 0; k <= max_degree; ++k) {
    Integer v = k == 0 ? Integer(1) : Integer(n) * a[k - 1];
    if (k >= 3) v -= Integer(n - 2) * a[k - 3];
    a.push_back(v);
  }
  return a;
}

NcPoly dg_differential(const NcPoly& p, int n) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    int sign = 1;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos] > 0) {
        if (w[pos] > n) throw InputError("letter outside the alphabet");
        continue;
      }
      const int j = -w[pos];
      if (j > n - 2) throw InputError("letter outside the alphabet");
      const NcPoly rel = expand_relation(j, n);
      for (const auto& [r, rc] : rel.terms()) {
        Word v(w.begin(), w.begin() + pos);
        v.insert(v.end(), r.begin(), r.end());
        v.insert(v.end(), w.begin() + pos + 1, w.end());
        out.add(v, c * rc * sign);
      }
      sign = -sign;
    }
  }
  return out;
}

namespace {

// Words of exact word degree D with exactly j u-letters, lexicographically sorted.
std::vector<Word> bidegree_words(int n, int degree, int j, std::size_t max_words) {
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self, int deg_left, int u_left) -> void {
    if (deg_left == 0) {
      if (u_left == 0) {
        if (out.size() >= max_words) throw ResourceError("dg_cohomology: word basis exceeds the configured bound");
        out.push_back(w);
      }
      return;
    }
    if (deg_left < 3 * u_left) return;
    if (u_left > 0 && deg_left >= 3)
      for (int k = n - 2; k >= 1; --k) {  // codes -k ascend as k descends
        w.push_back(-k);
        self(self, deg_left - 3, u_left - 1);
        w.pop_back();
      }
    if (deg_left - 1 >= 3 * u_left)
      for (int i = 1; i <= n; ++i) {
        w.push_back(i);
        self(self, deg_left - 1, u_left);
        w.pop_back();
      }
  };
  rec(rec, degree, j);
  return out;
}

SparseMatrix differential_matrix(int n, const std::vector<Word>& source, const std::vector<Word>& target) {
  SparseMatrix m(static_cast<int>(target.size()), static_cast<int>(source.size()));
  std::vector<SparseVector> cols(source.size());
  parallel_for(source.size(), [&](std::size_t c) {
    NcPoly d = dg_differential(NcPoly(source[c]), n);
    for (const auto& [w, x] : d.terms()) {
      auto it = std::lower_bound(target.begin(), target.end(), w);
      if (it == target.end() || *it != w) throw std::logic_error("dg differential left its bidegree");
      cols[c].emplace_back(static_cast<int>(it - target.begin()), x);
    }
  });
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(static_cast<int>(c), std::move(cols[c]));
  return m;
}

}  // namespace

bool DgCohomology::concentrated_in_degree_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.homological_degree == 0 || e.dim_cohomology == 0; });
}

std::vector<std::size_t> DgCohomology::degree_zero_dimensions() const {
  std::vector<std::size_t> out(max_degree + 1, 0);
  for (const auto& e : entries)
    if (e.homological_degree == 0) out[e.word_degree] = e.dim_cohomology;
  return out;
}

DgCohomology dg_cohomology(int n, int max_degree, std::size_t max_words) {
  if (n < 3) throw InputError("A_n needs n >= 3");
  if (max_degree < 0) throw InputError("negative degree");
  DgCohomology result;
  result.n = n;
  result.max_degree = max_degree;
  for (int d = 0; d <= max_degree; ++d) {
    const int max_u = d / 3;
    std::vector<std::vector<Word>> words(max_u + 1);
    for (int j = 0; j <= max_u; ++j) words[j] = bidegree_words(n, d, j, max_words);
    // rank_out[j]: rank of d from j u's to j-1 u's
    std::vector<std::size_t> rank_out(max_u + 2, 0);
    for (int j = 1; j <= max_u; ++j) rank_out[j] = rank(differential_matrix(n, words[j], words[j - 1]));
    for (int j = 0; j <= max_u; ++j) {
      const std::size_t dim = words[j].size();
      const std::size_t h = dim - rank_out[j] - rank_out[j + 1];
      result.entries.push_back({d, -j, dim, h});
    }
  }
  return result;
}

}  // namespace orgc::nc
