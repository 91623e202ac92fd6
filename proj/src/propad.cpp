#include "orgc/propad.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace orgc {

namespace {

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  return sign;
}

void check_labels(const PropadTerm& t) {
  std::vector<int> seen_out(t.output_count + 1, 0), seen_in(t.input_count + 1, 0);
  for (const auto& v : t.vertices) {
    if (v.weight < 0) throw InputError("negative corolla weight");
    for (int o : v.outputs) {
      if (o < 1 || o > t.output_count || seen_out[o]++) throw InputError("bad output labels in " + describe(t));
    }
    for (int i : v.inputs) {
      if (i < 1 || i > t.input_count || seen_in[i]++) throw InputError("bad input labels in " + describe(t));
    }
  }
  for (int o = 1; o <= t.output_count; ++o)
    if (!seen_out[o]) throw InputError("missing output label in " + describe(t));
  for (int i = 1; i <= t.input_count; ++i)
    if (!seen_in[i]) throw InputError("missing input label in " + describe(t));
  const int n = static_cast<int>(t.vertices.size());
  if (n < 1 || n > kMaxCanonicalVertices) throw InputError("term vertex count out of range");
  for (const auto& e : t.edges)
    if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n || e.source == e.target)
      throw InputError("bad internal edge in " + describe(t));
  if (!is_acyclic(n, t.edges)) throw InputError("term has a directed cycle: " + describe(t));
  if (!is_connected(n, t.edges)) throw InputError("term is disconnected: " + describe(t));
}

}  // namespace

void require_valid(const Corolla& c) {
  if (!c.valid())
    throw InputError("invalid corolla (" + std::to_string(c.m) + "," + std::to_string(c.n) + "," +
                     std::to_string(c.a) + "): need m,n >= 1, a >= 0, m+n+a >= 3");
}

Corolla PropadTerm::corolla(int v) const {
  const auto& x = vertices.at(v);
  Corolla c{static_cast<int>(x.outputs.size()), static_cast<int>(x.inputs.size()), x.weight};
  for (const auto& e : edges) {
    if (e.source == v) ++c.m;
    if (e.target == v) ++c.n;
  }
  return c;
}

bool PropadTerm::all_valid() const {
  std::vector<Corolla> c(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    c[v] = {static_cast<int>(vertices[v].outputs.size()), static_cast<int>(vertices[v].inputs.size()),
            vertices[v].weight};
  for (const auto& e : edges) ++c[e.source].m, ++c[e.target].n;
  return std::all_of(c.begin(), c.end(), [](const Corolla& x) { return x.valid(); });
}

int PropadTerm::degree() const {
  return 2 * static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) - output_count;
}

int PropadTerm::total_weight() const {
  int w = 0;
  for (const auto& v : vertices) w += v.weight;
  return w;
}

namespace {

std::optional<SignedTerm> canonicalize_unchecked(const PropadTerm& t) {
  const int n = static_cast<int>(t.vertices.size());
  std::vector<int> colors = dense_ranks(t.vertices);
  Labeling lab = canonical_labeling(n, t.edges, colors);
  if (lab.vanishes) return std::nullopt;
  PropadTerm out;
  out.output_count = t.output_count;
  out.input_count = t.input_count;
  out.vertices.resize(n);
  for (int v = 0; v < n; ++v) out.vertices[lab.relabel[v]] = t.vertices[v];
  for (const auto& e : t.edges) out.edges.push_back({lab.relabel[e.source], lab.relabel[e.target]});
  std::sort(out.edges.begin(), out.edges.end());
  return SignedTerm{std::move(out), lab.sign};
}

}  // namespace

std::optional<SignedTerm> canonicalize(const PropadTerm& t) {
  check_labels(t);
  return canonicalize_unchecked(t);
}

PropadTerm corolla_term(const Corolla& c) {
  PropadTerm t;
  t.output_count = c.m;
  t.input_count = c.n;
  PropadVertex v;
  v.weight = c.a;
  v.outputs.resize(c.m);
  v.inputs.resize(c.n);
  std::iota(v.outputs.begin(), v.outputs.end(), 1);
  std::iota(v.inputs.begin(), v.inputs.end(), 1);
  t.vertices.push_back(std::move(v));
  return t;
}

SignedTerm relabel_outputs(const PropadTerm& t, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != t.output_count) throw InputError("relabel_outputs: wrong length");
  std::vector<int> p(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) p[i] = sigma[i] - 1;
  std::vector<int> check = p;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != static_cast<int>(i)) throw InputError("relabel_outputs: not a permutation");
  PropadTerm out = t;
  for (auto& v : out.vertices) {
    for (int& o : v.outputs) o = sigma[o - 1];
    std::sort(v.outputs.begin(), v.outputs.end());
  }
  // Old orientation lists legs 1..M; in the new labels that list reads sigma(1..M).
  return {std::move(out), permutation_sign(p)};
}

SignedTerm relabel_inputs(const PropadTerm& t, const std::vector<int>& tau) {
  if (static_cast<int>(tau.size()) != t.input_count) throw InputError("relabel_inputs: wrong length");
  PropadTerm out = t;
  for (auto& v : out.vertices) {
    for (int& i : v.inputs) i = tau.at(i - 1);
    std::sort(v.inputs.begin(), v.inputs.end());
  }
  return {std::move(out), 1};
}

std::string describe(const PropadTerm& t) {
  std::ostringstream os;
  os << "{";
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    const auto& x = t.vertices[v];
    os << (v ? " " : "") << "v" << v << "[w" << x.weight << " out";
    for (int o : x.outputs) os << " " << o;
    os << " in";
    for (int i : x.inputs) os << " " << i;
    os << "]";
  }
  os << ";";
  for (const auto& e : t.edges) os << " " << e.source << "->" << e.target;
  os << "}";
  return os.str();
}

void PropadVector::add(const PropadTerm& t, const Rational& c) {
  if (is_zero(c) || !t.all_valid()) return;
  auto s = canonicalize(t);
  if (!s) return;
  add_canonical(s->term, s->sign > 0 ? c : Rational(-c));
}

void PropadVector::add_trusted(const PropadTerm& t, const Rational& c) {
  if (is_zero(c) || !t.all_valid()) return;
  auto s = canonicalize_unchecked(t);
  if (!s) return;
  add_canonical(s->term, s->sign > 0 ? c : Rational(-c));
}

void PropadVector::add_canonical(const PropadTerm& t, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

void PropadVector::add(const PropadVector& v, const Rational& c) {
  if (is_zero(c)) return;
  for (const auto& [t, x] : v.terms_) add_canonical(t, x * c);
}

Rational PropadVector::coefficient(const PropadTerm& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

PropadVector& PropadVector::operator*=(const Rational& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, x] : terms_) x *= c;
  return *this;
}

}  // namespace orgc
