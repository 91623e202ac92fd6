#include "orgc/tpoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "orgc/holieb.hpp"
#include "orgc/mcsolver.hpp"

namespace orgc {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

// Sign of psi_A * psi_B rewritten in increasing order; 0 if they share an index.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    const std::uint32_t bit = rest & -rest;
    swaps += popcount(a & ~(bit | (bit - 1)));  // letters of a above this letter of b
  }
  return swaps % 2 ? -1 : 1;
}

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxPolyDimension)
    throw InputError("polyvector dimension must be in [0, " + std::to_string(kMaxPolyDimension) + "]");
}

int common_dim(const std::vector<PolyVector>& inputs) {
  if (inputs.empty()) throw InputError("no inputs");
  const int d = inputs[0].dim();
  for (const auto& p : inputs)
    if (p.dim() != d) throw InputError("polyvector dimension mismatch");
  return d;
}

using Tensor = std::vector<PolyMonomial>;

}  // namespace

int PolyMonomial::psi_count() const { return popcount(psi); }

int PolyMonomial::x_degree() const { return std::accumulate(x.begin(), x.end(), 0); }

PolyVector::PolyVector(int dim) : dim_(dim) { check_dim(dim); }

PolyVector PolyVector::monomial(int dim, const std::vector<int>& exponents, const std::vector<int>& psi,
                                const Rational& c) {
  PolyVector p(dim);
  if (static_cast<int>(exponents.size()) != dim) throw InputError("exponent vector has wrong length");
  for (int e : exponents)
    if (e < 0) throw InputError("negative exponent");
  PolyMonomial m{exponents, 0};
  int sign = 1;
  for (int a : psi) {
    if (a < 1 || a > dim) throw InputError("psi index out of range");
    const std::uint32_t bit = 1u << (a - 1);
    const int s = merge_sign(m.psi, bit);
    if (s == 0) return p;
    sign *= s;
    m.psi |= bit;
  }
  p.add(m, sign > 0 ? c : Rational(-c));
  return p;
}

PolyVector PolyVector::x(int dim, int i) {
  std::vector<int> e(dim, 0);
  if (i < 1 || i > dim) throw InputError("x index out of range");
  e[i - 1] = 1;
  return monomial(dim, e, {});
}

PolyVector PolyVector::psi(int dim, int a) { return monomial(dim, std::vector<int>(dim, 0), {a}); }

void PolyVector::add(const PolyMonomial& m, const Rational& c) {
  if (is_zero(c)) return;
  if (static_cast<int>(m.x.size()) != dim_ || (dim_ < 32 && (m.psi >> dim_) != 0))
    throw InputError("monomial does not match the polyvector dimension");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

void PolyVector::add(const PolyVector& p, const Rational& c) {
  if (p.dim_ != dim_) throw InputError("polyvector dimension mismatch");
  for (const auto& [m, x] : p.terms_) add(m, x * c);
}

PolyVector PolyVector::psi_component(int k) const {
  PolyVector out(dim_);
  for (const auto& [m, c] : terms_)
    if (m.psi_count() == k) out.terms_.emplace(m, c);
  return out;
}

std::vector<int> PolyVector::psi_counts() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_) out.push_back(m.psi_count());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> PolyVector::psi_count() const {
  auto c = psi_counts();
  if (c.size() != 1) return std::nullopt;
  return c[0];
}

bool PolyVector::x_homogeneous_of_degree(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.x_degree() == d; });
}

PolyVector& PolyVector::operator*=(const Rational& c) {
  if (is_zero(c)) terms_.clear();
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

PolyVector wedge(const PolyVector& a, const PolyVector& b) {
  if (a.dim() != b.dim()) throw InputError("polyvector dimension mismatch");
  PolyVector out(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = merge_sign(ma.psi, mb.psi);
      if (s == 0) continue;
      PolyMonomial m{ma.x, ma.psi | mb.psi};
      for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] += mb.x[i];
      out.add(m, s > 0 ? ca * cb : Rational(-(ca * cb)));
    }
  return out;
}

std::string to_string(const PolyVector& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    os << (first ? "" : " + ") << "(" << to_string(c) << ")";
    first = false;
    for (std::size_t i = 0; i < m.x.size(); ++i)
      if (m.x[i]) os << "*x" << i + 1 << (m.x[i] > 1 ? "^" + std::to_string(m.x[i]) : "");
    for (int a = 0; a < p.dim(); ++a)
      if (m.psi >> a & 1) os << "*psi" << a + 1;
  }
  return os.str();
}

PolyVector graph_apply(const OrientedGraph& g, const std::vector<PolyVector>& inputs) {
  const int d = common_dim(inputs);
  const int p = g.vertex_count;
  if (static_cast<int>(inputs.size()) != p) throw InputError("graph_apply: arity mismatch");
  for (const auto& e : g.edges)
    if (e.source < 0 || e.source >= p || e.target < 0 || e.target >= p)
      throw InputError("graph_apply: edge endpoint out of range");

  // Only monomials that can absorb every contraction at their slot matter.
  std::vector<int> out_deg(p, 0), in_deg(p, 0);
  for (const auto& e : g.edges) ++out_deg[e.source], ++in_deg[e.target];

  std::map<Tensor, Rational> state;
  {
    std::vector<std::vector<std::pair<const PolyMonomial*, const Rational*>>> usable(p);
    for (int v = 0; v < p; ++v)
      for (const auto& [m, c] : inputs[v].terms())
        if (m.psi_count() >= out_deg[v] && m.x_degree() >= in_deg[v]) usable[v].emplace_back(&m, &c);
    Tensor t(p);
    auto rec = [&](auto&& self, int v, const Rational& c) -> void {
      if (v == p) {
        state[t] += c;
        return;
      }
      for (const auto& [m, mc] : usable[v]) {
        t[v] = *m;
        self(self, v + 1, c * *mc);
      }
    };
    rec(rec, 0, Rational(1));
  }

  for (auto e = g.edges.rbegin(); e != g.edges.rend(); ++e) {
    std::map<Tensor, Rational> next;
    for (const auto& [t, c] : state) {
      int before = 0;
      for (int v = 0; v < e->source; ++v) before += t[v].psi_count();
      for (int a = 0; a < d; ++a) {
        const std::uint32_t bit = 1u << a;
        if (!(t[e->source].psi & bit) || t[e->target].x[a] == 0) continue;
        Tensor u = t;
        const int below = popcount(u[e->source].psi & (bit - 1));
        u[e->source].psi &= ~bit;
        const int exponent = u[e->target].x[a]--;
        Rational x = c * exponent;
        if ((before + below) % 2) x = -x;
        next[u] += x;
      }
    }
    std::erase_if(next, [](const auto& kv) { return is_zero(kv.second); });
    state = std::move(next);
  }

  PolyVector out(d);
  for (const auto& [t, c] : state) {
    PolyMonomial m{std::vector<int>(d, 0), 0};
    int sign = 1;
    for (const auto& f : t) {
      const int s = merge_sign(m.psi, f.psi);
      if (s == 0) {
        sign = 0;
        break;
      }
      sign *= s;
      m.psi |= f.psi;
      for (int a = 0; a < d; ++a) m.x[a] += f.x[a];
    }
    if (sign != 0) out.add(m, sign > 0 ? c : Rational(-c));
  }
  return out;
}

PolyVector graph_act(const OrientedGraph& g, const std::vector<PolyVector>& inputs) {
  const int d = common_dim(inputs);
  const int p = g.vertex_count;
  if (static_cast<int>(inputs.size()) != p) throw InputError("graph_act: arity mismatch");

  // Expand multilinearly into psi-homogeneous parts.
  std::vector<std::vector<PolyVector>> parts(p);
  for (int i = 0; i < p; ++i)
    for (int k : inputs[i].psi_counts()) parts[i].push_back(inputs[i].psi_component(k));

  PolyVector out(d);
  std::vector<int> choice(p, 0);
  while (true) {
    bool any_empty = false;
    for (int i = 0; i < p; ++i) any_empty |= parts[i].empty();
    if (any_empty) break;

    std::vector<const PolyVector*> chosen(p);
    std::vector<int> parity(p), id(p);
    for (int i = 0; i < p; ++i) {
      chosen[i] = &parts[i][choice[i]];
      parity[i] = *chosen[i]->psi_count() % 2;
      id[i] = i;
      for (int j = 0; j < i; ++j)
        if (*chosen[j] == *chosen[i]) {
          id[i] = id[j];
          break;
        }
    }
    std::map<std::vector<int>, PolyVector> memo;
    std::vector<int> sigma(p);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      // vertex v receives input sigma[v]; Koszul sign of that reordering
      int sign = 1;
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
          if (sigma[a] > sigma[b] && parity[sigma[a]] && parity[sigma[b]]) sign = -sign;
      std::vector<int> key(p);
      for (int v = 0; v < p; ++v) key[v] = id[sigma[v]];
      auto it = memo.find(key);
      if (it == memo.end()) {
        std::vector<PolyVector> arranged;
        for (int v = 0; v < p; ++v) arranged.push_back(*chosen[sigma[v]]);
        it = memo.emplace(key, graph_apply(g, arranged)).first;
      }
      out.add(it->second, sign);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    int i = 0;
    while (i < p && ++choice[i] == static_cast<int>(parts[i].size())) choice[i++] = 0;
    if (i == p) break;
  }
  return out;
}

PolyVector graph_act(const CanonicalGraph& g, const std::vector<PolyVector>& inputs) {
  return graph_act(g.graph(), inputs);
}

PolyVector schouten(const PolyVector& a, const PolyVector& b) {
  if (a.dim() != b.dim()) throw InputError("polyvector dimension mismatch");
  PolyVector out(a.dim());
  for (int k : a.psi_counts()) {
    PolyVector ak = a.psi_component(k);
    PolyVector part = graph_act(edge_graph(), {ak, b});
    out.add(part, (k - 1) % 2 ? -1 : 1);
  }
  return out;
}

PolyVector ks_bracket(const GraphVector& g, const std::vector<PolyVector>& inputs) {
  const int d = common_dim(inputs);
  PolyVector out(d);
  for (const auto& [graph, c] : g.terms()) {
    if (graph.vertex_count() != static_cast<int>(inputs.size()))
      throw InputError("ks_bracket: arity mismatch with graph " + describe(graph.graph()));
    out.add(graph_act(graph, inputs), c);
  }
  return out;
}

PolySeries quantizable_residual(const PolySeries& p, int K, const ResidualOptions& options) {
  if (K < 0) throw InputError("negative truncation");
  if (K > kMaxTruncation)
    throw InputError("truncation insufficient: the KS element is available through hbar^" +
                     std::to_string(kMaxTruncation));
  int dim = -1;
  for (const auto& [a, v] : p) {
    if (a < 0) throw InputError("negative hbar order");
    if (dim >= 0 && v.dim() != dim) throw InputError("polyvector dimension mismatch");
    dim = v.dim();
  }
  PolySeries out;
  if (dim < 0) return out;

  auto prefactor = [&](int n) {
    if (n - 1 < static_cast<int>(options.prefactors.size())) return options.prefactors[n - 1];
    Integer f = 1;
    for (int i = 2; i <= 2 * n; ++i) f *= i;
    return Rational(1, f);
  };
  auto component = [&](int a) -> const PolyVector* {
    auto it = p.find(a);
    return it == p.end() || it->second.empty() ? nullptr : &it->second;
  };

  for (int j = 0; j <= K; ++j) {
    PolyVector total(dim);
    for (int n = 1; n - 1 <= j; ++n) {
      const int budget = j - (n - 1);
      const int arity = 2 * n;
      std::vector<int> orders(arity, 0);
      auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == arity - 1) {
          orders[i] = left;
          std::vector<PolyVector> in;
          for (int a : orders) {
            const PolyVector* v = component(a);
            if (!v) return;
            in.push_back(*v);
          }
          PolyVector b = n == 1 ? schouten(in[0], in[1]) : ks_bracket(ks_series(n - 1).at(n - 1), in);
          total.add(b, prefactor(n));
          return;
        }
        for (int x = 0; x <= left; ++x) {
          orders[i] = x;
          self(self, i + 1, left - x);
        }
      };
      rec(rec, 0, budget);
    }
    if (!total.empty()) out.emplace(j, std::move(total));
  }
  return out;
}

namespace {

void check_shape(const PolyVector& v, int psi, int degree, const char* name) {
  for (const auto& [m, c] : v.terms())
    if (m.psi_count() != psi || m.x_degree() != degree)
      throw InputError(std::string(name) + " must have psi-count " + std::to_string(psi) +
                       " and coefficients of degree " + std::to_string(degree));
}

}  // namespace

BialgebraReport check_odd_bialgebra(const PolyVector& xi, const PolyVector& phi) {
  if (xi.dim() != phi.dim()) throw InputError("polyvector dimension mismatch");
  check_shape(xi, 1, 2, "xi");
  check_shape(phi, 2, 1, "Phi");
  PolyVector s = xi + phi;
  BialgebraReport r;
  r.square = graph_apply(edge_graph().graph(), {s, s});
  r.co_jacobi = r.square.psi_component(1);
  r.compatibility = r.square.psi_component(2);
  r.jacobi = r.square.psi_component(3);
  return r;
}

OrientedGraph quantizability_wiring() {
  // vertices: 0, 1 cobrackets (xi), 2, 3 brackets (Phi); an edge u->v takes a
  // psi from u and differentiates v, i.e. an output of v feeds an input of u.
  return OrientedGraph{4, {{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}}};
}

OrientedGraph involutivity_wiring() { return OrientedGraph{2, {{1, 0}, {1, 0}}}; }

QuantizabilityReport check_quantizable(const PolyVector& xi, const PolyVector& phi) {
  if (xi.dim() != phi.dim()) throw InputError("polyvector dimension mismatch");
  check_shape(xi, 1, 2, "xi");
  check_shape(phi, 2, 1, "Phi");
  return {graph_apply(quantizability_wiring(), {xi, xi, phi, phi})};
}

PolyVector involutivity_composite(const PolyVector& xi, const PolyVector& phi) {
  if (xi.dim() != phi.dim()) throw InputError("polyvector dimension mismatch");
  check_shape(xi, 1, 2, "xi");
  check_shape(phi, 2, 1, "Phi");
  return graph_apply(involutivity_wiring(), {xi, phi});
}

}  // namespace orgc
