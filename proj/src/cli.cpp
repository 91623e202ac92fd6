#include "orgc/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <thread>
#include <optional>

#include "CLI11.hpp"
#include "orgc/cohomology.hpp"
#include "orgc/gclie.hpp"
#include "orgc/holieb.hpp"
#include "orgc/json_io.hpp"
#include "orgc/mcsolver.hpp"
#include "orgc/ncgb.hpp"
#include "orgc/parallel.hpp"
#include "orgc/tpoly.hpp"

namespace orgc {

namespace {

struct Outcome {
  int code = kExitOk;
  Json body;
};

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

Json nc_poly_json(const nc::NcPoly& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"word", nc::to_string(w)}, {"coeff", rational_to_json(c)}});
  return out;
}

// Human-readable rendering of any output document.
void render(const Json& j, std::ostream& os, int indent, const std::string& key) {
  const std::string pad(indent, ' ');
  const std::string head = key.empty() ? "" : key + ": ";
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    const int inner = key.empty() ? indent : indent + 2;
    for (const auto& [k, v] : j.items()) render(v, os, inner, k);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) {
      return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); }));
    });
    if (flat) {
      os << pad << head;
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      os << (j.empty() ? "(none)" : "") << "\n";
      return;
    }
    const bool table = !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) {
      return x.is_object() && x.contains("coeff");
    });
    os << pad << (key.empty() ? "items" : key) << ": " << j.size() << " entries\n";
    if (table) {
      // one row per term: coefficient, then the rest compactly
      for (const auto& x : j) {
        Json rest = x;
        rest.erase("coeff");
        os << pad << "  " << std::setw(12) << x["coeff"].get<std::string>() << "  " << rest.dump() << "\n";
      }
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) render(j[i], os, indent + 2, "[" + std::to_string(i) + "]");
    return;
  }
  os << pad << head << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

Json residual_orders_json(const GraphSeries& s, int up_to) {
  const GraphSeries r = mc_residual(s, up_to);
  Json orders = Json::array();
  for (int k = 0; k <= up_to; ++k) {
    const GraphVector& v = r.at(k);
    Json o{{"hbar", k}, {"zero", v.empty()}};
    if (!v.empty()) o["residual"] = to_json(v);
    orders.push_back(o);
  }
  return orders;
}

Json square_check_json(const SquareCheck& c) {
  Json o{{"corolla", to_json(c.corolla)}, {"vanishes", c.vanishes()}};
  if (!c.vanishes()) o["residual"] = to_json(c.residual);
  return o;
}

Json cohomology_json(const CohomologyReport& r) {
  Json reps = Json::array();
  for (const auto& v : r.representatives) reps.push_back(to_json(v));
  return Json{{"dim", r.dim_cohomology},     {"vertices", r.n},
              {"edges", r.l},                {"degree", r.degree()},
              {"dim_basis", r.dim_basis},    {"dim_kernel", r.dim_kernel},
              {"dim_image", r.dim_image_incoming}, {"representatives", reps}};
}

PolyVector poly_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("input needs a '") + key + "' polyvector");
  return poly_from_json(j.at(key));
}

Json bialgebra_json(const BialgebraReport& r) {
  return Json{{"passed", r.passed()},
              {"co_jacobi", to_json(r.co_jacobi)},
              {"compatibility", to_json(r.compatibility)},
              {"jacobi", to_json(r.jacobi)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on oriented graph complexes and related algebras", "orgc"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");

  bool pretty = false;
  unsigned threads = 0;
  std::string pivot = "markowitz";
  bool prepass = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
  app.add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  app.add_option("--pivot", pivot, "Exact elimination pivoting")->check(CLI::IsMember({"markowitz", "natural"}));
  app.add_flag("--modular-prepass", prepass, "Order exact pivots by a modular elimination");

  std::function<Outcome()> action;
  auto elim = [&] {
    EliminationOptions o;
    o.strategy = pivot == "natural" ? PivotStrategy::Natural : PivotStrategy::Markowitz;
    o.modular_prepass = prepass;
    return o;
  };

  // gc
  auto* gc = app.add_subcommand("gc", "Oriented graph complex");
  gc->require_subcommand(1);
  int vertices = 0, edges = 0;
  std::string in_path, a_path, b_path, out_path;
  {
    auto* s = gc->add_subcommand("enumerate", "Canonical basis of a bigrade");
    s->add_option("--vertices", vertices)->required();
    s->add_option("--edges", edges)->required();
    s->callback([&] {
      action = [&] {
        if (vertices < 1 || edges < 0) throw InputError("need vertices >= 1 and edges >= 0");
        auto basis = cached_basis(vertices, edges);
        Json graphs = Json::array();
        for (const auto& g : *basis) graphs.push_back(to_json(g.graph()));
        return Outcome{kExitOk, Json{{"vertices", vertices}, {"edges", edges}, {"degree", 2 * (vertices - 1) - edges},
                                     {"count", basis->size()}, {"graphs", graphs}}};
      };
    });
  }
  {
    auto* s = gc->add_subcommand("diff", "Differential of a graph vector");
    s->add_option("--in", in_path)->required();
    s->callback([&] {
      action = [&] {
        return Outcome{kExitOk, Json{{"result", to_json(differential(graph_vector_from_json(read_json_file(in_path))))}}};
      };
    });
  }
  {
    auto* s = gc->add_subcommand("bracket", "Lie bracket of two graph vectors");
    s->add_option("--a", a_path)->required();
    s->add_option("--b", b_path)->required();
    s->callback([&] {
      action = [&] {
        auto a = graph_vector_from_json(read_json_file(a_path));
        auto b = graph_vector_from_json(read_json_file(b_path));
        return Outcome{kExitOk, Json{{"result", to_json(bracket(a, b))}}};
      };
    });
  }
  {
    auto* s = gc->add_subcommand("cohomology", "Cohomology at a bigrade");
    s->add_option("--vertices", vertices)->required();
    s->add_option("--edges", edges)->required();
    s->callback([&] {
      action = [&] {
        if (vertices < 1 || edges < 0) throw InputError("need vertices >= 1 and edges >= 0");
        return Outcome{kExitOk, cohomology_json(cohomology(vertices, edges, elim()))};
      };
    });
  }

  // mc
  auto* mc = app.add_subcommand("mc", "Maurer-Cartan series");
  mc->require_subcommand(1);
  int order = 1;
  {
    auto* s = mc->add_subcommand("verify", "Check the MC equation through an hbar order");
    s->add_option("--order", order)->required();
    s->add_option("--in", in_path)->required();
    s->callback([&] {
      action = [&] {
        if (order < 0) throw InputError("negative order");
        const GraphSeries series = graph_series_from_json(read_json_file(in_path));
        Json orders = residual_orders_json(series, order);
        bool all = true;
        for (const auto& o : orders) all = all && o["zero"].get<bool>();
        return Outcome{all ? kExitOk : kExitPropertyFails, Json{{"order", order}, {"all_zero", all}, {"orders", orders}}};
      };
    });
  }
  {
    auto* s = mc->add_subcommand("extend", "Solve for the next order of an MC series");
    s->add_option("--order", order)->required();
    s->add_option("--in", in_path)->required();
    s->add_option("--out", out_path, "Also write the extended series here");
    s->callback([&] {
      action = [&] {
        const GraphSeries series = graph_series_from_json(read_json_file(in_path));
        auto r = extend_mc(series, order, elim());
        if (auto* ob = std::get_if<ObstructionClass>(&r))
          return Outcome{kExitPropertyFails,
                         Json{{"extended", false}, {"order", ob->order}, {"obstruction", to_json(ob->obstruction)}}};
        const Json body = to_json(std::get<GraphSeries>(r));
        if (!out_path.empty()) {
          std::ofstream f(out_path);
          if (!f) throw InputError("cannot write '" + out_path + "'");
          f << body.dump() << "\n";
        }
        return Outcome{kExitOk, body};
      };
    });
  }
  {
    auto* s = mc->add_subcommand("ks", "The KS series edge + hbar Upsilon4 + ... through an order");
    s->add_option("--order", order)->required();
    s->callback([&] {
      action = [&] {
        if (order < 0 || order > kMaxTruncation)
          throw InputError("order must be in [0, " + std::to_string(kMaxTruncation) + "]");
        return Outcome{kExitOk, to_json(ks_series(order))};
      };
    });
  }

  // holieb
  auto* hl = app.add_subcommand("holieb", "Deformed differential on the involutive bialgebra properad");
  hl->require_subcommand(1);
  int m = 1, n = 1, a = 0, trunc = 1, max_arity = 4, max_weight = 1;
  {
    auto* s = hl->add_subcommand("delta", "Differential of a generating corolla");
    s->add_option("--m", m)->required();
    s->add_option("--n", n)->required();
    s->add_option("--a", a)->required();
    s->add_option("--trunc", trunc)->required();
    s->callback([&] {
      action = [&] {
        const Corolla c{m, n, a};
        return Outcome{kExitOk, Json{{"corolla", to_json(c)}, {"trunc", trunc}, {"result", to_json(delta_diamond(c, trunc))}}};
      };
    });
  }
  {
    auto* s = hl->add_subcommand("d2-check", "Check that the differential squares to zero");
    s->add_option("--max-arity", max_arity)->required();
    s->add_option("--max-weight", max_weight)->required();
    s->add_option("--trunc", trunc)->required();
    s->callback([&] {
      action = [&] {
        if (max_arity < 2 || max_weight < 0) throw InputError("need max-arity >= 2 and max-weight >= 0");
        Json checks = Json::array();
        bool all = true;
        for (const auto& c : check_delta_squared(max_arity, max_weight, trunc)) {
          checks.push_back(square_check_json(c));
          all = all && c.vanishes();
        }
        return Outcome{all ? kExitOk : kExitPropertyFails,
                       Json{{"trunc", trunc}, {"all_vanish", all}, {"checks", checks}}};
      };
    });
  }

  // ncgb
  auto* nb = app.add_subcommand("ncgb", "Cubic algebras A_n");
  nb->require_subcommand(1);
  int letters = 3, max_degree = 3;
  std::size_t max_words = 2'000'000;
  auto add_n = [&](CLI::App* s) { s->add_option("--n", letters)->required(); };
  auto check_n = [&] {
    if (letters < 3) throw InputError("n must be at least 3");
  };
  {
    auto* s = nb->add_subcommand("relations", "Relations and their leading words");
    add_n(s);
    s->callback([&] {
      action = [&] {
        check_n();
        const auto ord = nc::MonomialOrder::lemma(letters);
        Json rels = Json::array();
        int i = 1;
        for (const auto& r : nc::relations(letters))
          rels.push_back({{"index", i++}, {"leading", nc::to_string(nc::leading_monomial(r, ord))}, {"terms", nc_poly_json(r)}});
        return Outcome{kExitOk, Json{{"n", letters}, {"relations", rels}}};
      };
    });
  }
  {
    auto* s = nb->add_subcommand("strongly-free", "Overlap certificate for the leading words");
    add_n(s);
    s->callback([&] {
      action = [&] {
        check_n();
        auto c = nc::strongly_free_check(letters, nc::relations(letters), nc::MonomialOrder::lemma(letters));
        Json words = Json::array();
        for (const auto& w : c.leading_words) words.push_back(nc::to_string(w));
        return Outcome{c.passed ? kExitOk : kExitPropertyFails,
                       Json{{"n", letters},
                            {"passed", c.passed},
                            {"leading_words", words},
                            {"distinct", c.distinct},
                            {"no_inclusion", c.no_inclusion},
                            {"no_overlap", c.no_overlap},
                            {"initial_letter_pattern", c.initial_letter_pattern},
                            {"witnesses", c.witnesses}}};
      };
    });
  }
  {
    auto* s = nb->add_subcommand("hilbert", "Normal-word counts by degree");
    add_n(s);
    s->add_option("--max-degree", max_degree)->required();
    s->callback([&] {
      action = [&] {
        check_n();
        if (max_degree < 0) throw InputError("negative max-degree");
        return Outcome{kExitOk, integers_json(nc::hilbert(letters, max_degree))};
      };
    });
  }
  {
    auto* s = nb->add_subcommand("dg-cohomology", "Brute-force cohomology of the dg model");
    add_n(s);
    s->add_option("--max-degree", max_degree)->required();
    s->add_option("--max-words", max_words, "Resource bound per bidegree");
    s->callback([&] {
      action = [&] {
        check_n();
        if (max_degree < 0) throw InputError("negative max-degree");
        const auto r = nc::dg_cohomology(letters, max_degree, max_words);
        const auto h = nc::hilbert(letters, max_degree);
        const auto zero = r.degree_zero_dimensions();
        bool match = zero.size() == h.size();
        for (std::size_t i = 0; match && i < h.size(); ++i) match = Integer(static_cast<unsigned long>(zero[i])) == h[i];
        Json entries = Json::array();
        for (const auto& e : r.entries)
          entries.push_back({{"word_degree", e.word_degree}, {"homological_degree", e.homological_degree},
                             {"chains", e.dim_chains}, {"cohomology", e.dim_cohomology}});
        const bool ok = r.concentrated_in_degree_zero() && match;
        return Outcome{ok ? kExitOk : kExitPropertyFails,
                       Json{{"n", letters},
                            {"max_degree", max_degree},
                            {"concentrated_in_degree_zero", r.concentrated_in_degree_zero()},
                            {"degree_zero", zero},
                            {"hilbert", integers_json(h)},
                            {"matches_hilbert", match},
                            {"entries", entries}}};
      };
    });
  }

  // tpoly
  auto* tp = app.add_subcommand("tpoly", "Polyvector fields");
  tp->require_subcommand(1);
  int hbar_order = 0;
  {
    auto* s = tp->add_subcommand("schouten", "Schouten bracket; input {\"a\": P, \"b\": P}");
    s->add_option("--in", in_path)->required();
    s->callback([&] {
      action = [&] {
        const Json j = read_json_file(in_path);
        return Outcome{kExitOk, Json{{"result", to_json(schouten(poly_field(j, "a"), poly_field(j, "b")))}}};
      };
    });
  }
  {
    auto* s = tp->add_subcommand("graph-act", "Graph action; input {\"graph\": G, \"inputs\": [P, ...]}");
    s->add_option("--in", in_path)->required();
    s->callback([&] {
      action = [&] {
        const Json j = read_json_file(in_path);
        if (!j.is_object() || !j.contains("graph") || !j.contains("inputs") || !j.at("inputs").is_array())
          throw InputError("input needs 'graph' and an 'inputs' array");
        std::vector<PolyVector> inputs;
        for (const auto& p : j.at("inputs")) inputs.push_back(poly_from_json(p));
        return Outcome{kExitOk, Json{{"result", to_json(graph_act(graph_from_json(j.at("graph")), inputs))}}};
      };
    });
  }
  {
    auto* s = tp->add_subcommand("residual", "Generalized MC residual; input a poly series");
    s->add_option("--in", in_path)->required();
    s->add_option("--order", hbar_order, "Highest hbar order kept")->required();
    s->callback([&] {
      action = [&] {
        const Json j = read_json_file(in_path);
        ResidualOptions opts;
        PolySeries series;
        if (j.is_object() && j.contains("series")) {
          series = poly_series_from_json(j.at("series"));
          if (j.contains("prefactors")) {
            if (!j.at("prefactors").is_array()) throw InputError("'prefactors' must be an array");
            for (const auto& q : j.at("prefactors")) opts.prefactors.push_back(rational_from_json(q));
          }
        } else {
          series = poly_series_from_json(j);
        }
        const PolySeries r = quantizable_residual(series, hbar_order, opts);
        Json orders = Json::array();
        for (int k = 0; k <= hbar_order; ++k) {
          auto it = r.find(k);
          const PolyVector zero(series.empty() ? 0 : series.begin()->second.dim());
          orders.push_back({{"hbar", k}, {"poly", to_json(it == r.end() ? zero : it->second)}});
        }
        return Outcome{kExitOk, Json{{"order", hbar_order}, {"all_zero", r.empty()}, {"residual", orders}}};
      };
    });
  }
  {
    auto* s = tp->add_subcommand("check-bialgebra", "Odd Lie bialgebra check; input {\"xi\": P, \"phi\": P}");
    s->add_option("--in", in_path)->required();
    s->callback([&] {
      action = [&] {
        const Json j = read_json_file(in_path);
        auto r = check_odd_bialgebra(poly_field(j, "xi"), poly_field(j, "phi"));
        return Outcome{r.passed() ? kExitOk : kExitPropertyFails, bialgebra_json(r)};
      };
    });
  }
  {
    auto* s = tp->add_subcommand("check-quantizable", "Quantizability composite; input {\"xi\": P, \"phi\": P}");
    s->add_option("--in", in_path)->required();
    s->callback([&] {
      action = [&] {
        const Json j = read_json_file(in_path);
        const PolyVector xi = poly_field(j, "xi"), phi = poly_field(j, "phi");
        auto b = check_odd_bialgebra(xi, phi);
        if (!b.passed()) throw InputError("not an odd Lie bialgebra: " + bialgebra_json(b).dump());
        auto q = check_quantizable(xi, phi);
        return Outcome{q.vanishes() ? kExitOk : kExitPropertyFails,
                       Json{{"quantizable", q.vanishes()},
                            {"composite", to_json(q.composite)},
                            {"involutivity", to_json(involutivity_composite(xi, phi))}}};
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* where = &app;
    for (auto* s = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); s;
         s = s->get_subcommands().empty() ? nullptr : s->get_subcommands().front())
      where = s;
    err << where->help();
    return kExitInputError;
  }

  set_thread_count(threads ? threads : std::max(1u, std::thread::hardware_concurrency()));
  try {
    Outcome o = action();
    if (pretty)
      render(o.body, out, 0, "");
    else
      out << o.body.dump() << "\n";
    return o.code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "resource bound exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "resource bound exceeded: out of memory\n";
    return kExitResource;
  }
}

}  // namespace orgc
