#pragma once

#include <string>

#include "json.hpp"
#include "orgc/graph_vector.hpp"
#include "orgc/propad.hpp"
#include "orgc/tpoly.hpp"

namespace orgc {

// Insertion-ordered so that output key order is fixed by the writer.
using Json = nlohmann::ordered_json;

// All readers throw InputError on malformed input.

Json rational_to_json(const Rational& q);  // "p/q"
Rational rational_from_json(const Json& j);  // "p/q", "p" or an integer

// {"vertices": n, "edges": [[u, v], ...]}, 0-based
Json to_json(const OrientedGraph& g);
OrientedGraph graph_from_json(const Json& j);

// [{"graph": {...}, "coeff": "p/q"}, ...]
Json to_json(const GraphVector& v);
GraphVector graph_vector_from_json(const Json& j);

// [{"hbar": k, "graph": {...}, "coeff": "p/q"}, ...]; a missing "hbar" means 0.
Json to_json(const GraphSeries& s);
GraphSeries graph_series_from_json(const Json& j);

// {"vertices": [{"m", "n", "a", "outputs", "inputs"}], "edges": [[u, v]],
//  "outputs": M, "inputs": N}
Json to_json(const PropadTerm& t);
PropadTerm propad_term_from_json(const Json& j);
Json to_json(const Corolla& c);

// [{"term": {...}, "coeff": "p/q"}, ...]
Json to_json(const PropadVector& v);
PropadVector propad_vector_from_json(const Json& j);

// {"dim": d, "terms": [{"x": [...], "psi": [...], "coeff": "p/q"}]}, psi 1-based
Json to_json(const PolyVector& p);
PolyVector poly_from_json(const Json& j);

// [{"hbar": a, "poly": {...}}, ...]; a bare PolyVector object is order 0.
Json to_json(const PolySeries& s);
PolySeries poly_series_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace orgc
