#include "orgc/graph_vector.hpp"

namespace orgc {

void GraphVector::add(const CanonicalGraph& g, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

void GraphVector::add(const OrientedGraph& g, const Rational& c) {
  if (is_zero(c)) return;
  if (auto sg = canonicalize(g)) add(sg->graph, sg->sign * c);
}

void GraphVector::add(const GraphVector& other, const Rational& c) {
  if (is_zero(c)) return;
  for (const auto& [g, q] : other.terms_) add(g, c * q);
}

Rational GraphVector::coefficient(const CanonicalGraph& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GraphVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  for (const auto& [g, q] : terms_)
    if (g.degree() != d) throw InputError("graph vector is not homogeneous");
  return d;
}

bool GraphVector::is_homogeneous() const {
  try {
    degree();
    return true;
  } catch (const InputError&) {
    return false;
  }
}

GraphVector& GraphVector::operator*=(const Rational& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, q] : terms_) q *= c;
  return *this;
}

GraphVector combine(const std::vector<Rational>& scalars, const std::vector<GraphVector>& vectors) {
  if (scalars.size() != vectors.size()) throw InputError("combine: length mismatch");
  GraphVector out;
  for (std::size_t i = 0; i < scalars.size(); ++i) out.add(vectors[i], scalars[i]);
  return out;
}

void GraphSeries::set(int order, GraphVector v) {
  if (order < 0) throw InputError("negative hbar order");
  if (v.empty())
    orders_.erase(order);
  else
    orders_[order] = std::move(v);
}

void GraphSeries::add(int order, const GraphVector& v, const Rational& c) {
  GraphVector sum = at(order);
  sum.add(v, c);
  set(order, std::move(sum));
}

const GraphVector& GraphSeries::at(int order) const {
  static const GraphVector zero;
  auto it = orders_.find(order);
  return it == orders_.end() ? zero : it->second;
}

}  // namespace orgc
