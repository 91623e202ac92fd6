#include "orgc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace orgc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(to_int(x, what));
  return out;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw InputError("coefficient must be a string \"p/q\" or an integer");
}

Json to_json(const OrientedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.source, e.target});
  return Json{{"vertices", g.vertex_count}, {"edges", edges}};
}

OrientedGraph graph_from_json(const Json& j) {
  OrientedGraph g;
  g.vertex_count = to_int(field(j, "vertices"), "vertices");
  if (g.vertex_count < 1) throw InputError("a graph needs at least one vertex");
  for (const auto& e : array(field(j, "edges"), "edges")) {
    auto uv = int_list(e, "edge");
    if (uv.size() != 2) throw InputError("an edge is a pair [u, v]");
    if (uv[0] < 0 || uv[0] >= g.vertex_count || uv[1] < 0 || uv[1] >= g.vertex_count)
      throw InputError("edge endpoint out of range");
    g.edges.push_back({uv[0], uv[1]});
  }
  return g;
}

Json to_json(const GraphVector& v) {
  Json out = Json::array();
  for (const auto& [g, c] : v.terms()) out.push_back({{"graph", to_json(g.graph())}, {"coeff", rational_to_json(c)}});
  return out;
}

GraphVector graph_vector_from_json(const Json& j) {
  GraphVector v;
  for (const auto& t : array(j, "graph vector")) v.add(graph_from_json(field(t, "graph")), rational_from_json(field(t, "coeff")));
  return v;
}

Json to_json(const GraphSeries& s) {
  Json out = Json::array();
  for (const auto& [k, v] : s.orders())
    for (const auto& [g, c] : v.terms())
      out.push_back({{"hbar", k}, {"graph", to_json(g.graph())}, {"coeff", rational_to_json(c)}});
  return out;
}

GraphSeries graph_series_from_json(const Json& j) {
  GraphSeries s;
  for (const auto& t : array(j, "graph series")) {
    const int k = t.is_object() && t.contains("hbar") ? to_int(t.at("hbar"), "hbar") : 0;
    if (k < 0) throw InputError("negative hbar order");
    GraphVector v;
    v.add(graph_from_json(field(t, "graph")), rational_from_json(field(t, "coeff")));
    s.add(k, v);
  }
  return s;
}

Json to_json(const Corolla& c) { return Json{{"m", c.m}, {"n", c.n}, {"a", c.a}}; }

Json to_json(const PropadTerm& t) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    const Corolla c = t.corolla(static_cast<int>(v));
    Json x = to_json(c);
    x["outputs"] = t.vertices[v].outputs;
    x["inputs"] = t.vertices[v].inputs;
    vertices.push_back(x);
  }
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back({e.source, e.target});
  return Json{{"vertices", vertices}, {"edges", edges}, {"outputs", t.output_count}, {"inputs", t.input_count}};
}

PropadTerm propad_term_from_json(const Json& j) {
  PropadTerm t;
  for (const auto& x : array(field(j, "vertices"), "vertices")) {
    PropadVertex v;
    v.weight = to_int(field(x, "a"), "a");
    v.outputs = int_list(field(x, "outputs"), "outputs");
    v.inputs = int_list(field(x, "inputs"), "inputs");
    std::sort(v.outputs.begin(), v.outputs.end());
    std::sort(v.inputs.begin(), v.inputs.end());
    t.vertices.push_back(v);
  }
  const int n = static_cast<int>(t.vertices.size());
  if (n == 0) throw InputError("a term needs at least one corolla");
  for (const auto& e : array(field(j, "edges"), "edges")) {
    auto uv = int_list(e, "edge");
    if (uv.size() != 2 || uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
      throw InputError("malformed edge");
    t.edges.push_back({uv[0], uv[1]});
  }
  t.output_count = 0;
  t.input_count = 0;
  for (const auto& v : t.vertices) {
    t.output_count += static_cast<int>(v.outputs.size());
    t.input_count += static_cast<int>(v.inputs.size());
  }
  if (j.contains("outputs") && to_int(j.at("outputs"), "outputs") != t.output_count)
    throw InputError("declared output count disagrees with the vertex labels");
  if (j.contains("inputs") && to_int(j.at("inputs"), "inputs") != t.input_count)
    throw InputError("declared input count disagrees with the vertex labels");
  // Optional m/n decorations must agree with the wiring.
  const auto& xs = j.at("vertices");
  for (int v = 0; v < n; ++v) {
    const Corolla c = t.corolla(v);
    if (xs[v].contains("m") && to_int(xs[v].at("m"), "m") != c.m)
      throw InputError("vertex " + std::to_string(v) + ": m disagrees with its legs");
    if (xs[v].contains("n") && to_int(xs[v].at("n"), "n") != c.n)
      throw InputError("vertex " + std::to_string(v) + ": n disagrees with its legs");
  }
  return t;
}

Json to_json(const PropadVector& v) {
  Json out = Json::array();
  for (const auto& [t, c] : v.terms()) out.push_back({{"term", to_json(t)}, {"coeff", rational_to_json(c)}});
  return out;
}

PropadVector propad_vector_from_json(const Json& j) {
  PropadVector v;
  for (const auto& t : array(j, "propad vector"))
    v.add(propad_term_from_json(field(t, "term")), rational_from_json(field(t, "coeff")));
  return v;
}

Json to_json(const PolyVector& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json psi = Json::array();
    for (int a = 0; a < p.dim(); ++a)
      if (m.psi >> a & 1) psi.push_back(a + 1);
    terms.push_back({{"x", m.x}, {"psi", psi}, {"coeff", rational_to_json(c)}});
  }
  return Json{{"dim", p.dim()}, {"terms", terms}};
}

PolyVector poly_from_json(const Json& j) {
  const int d = to_int(field(j, "dim"), "dim");
  PolyVector p(d);
  for (const auto& t : array(field(j, "terms"), "terms"))
    p.add(PolyVector::monomial(d, int_list(field(t, "x"), "x"), int_list(field(t, "psi"), "psi"),
                               rational_from_json(field(t, "coeff"))));
  return p;
}

Json to_json(const PolySeries& s) {
  Json out = Json::array();
  for (const auto& [a, p] : s) out.push_back({{"hbar", a}, {"poly", to_json(p)}});
  return out;
}

PolySeries poly_series_from_json(const Json& j) {
  PolySeries s;
  if (j.is_object()) {
    s.emplace(0, poly_from_json(j));
    return s;
  }
  for (const auto& b : array(j, "poly series")) {
    const int a = to_int(field(b, "hbar"), "hbar");
    if (a < 0) throw InputError("negative hbar order");
    PolyVector p = poly_from_json(field(b, "poly"));
    auto [it, inserted] = s.try_emplace(a, p);
    if (!inserted) it->second.add(p);
  }
  return s;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace orgc
