#include "core/jsonio.hpp"

#include <algorithm>
#include <sstream>

#include "core/artinian.hpp"
#include "core/errors.hpp"
#include "core/hilbert.hpp"

namespace scroll {

namespace {

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string("expected an integer for ") + what);
  return j.get<int>();
}

std::vector<Interval> parse_pairs(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Interval> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw ParseError(std::string(what) + " entries must be pairs");
    out.push_back({require_int(item[0], what), require_int(item[1], what)});
  }
  return out;
}

}  // namespace

ClosedGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  if (!j.contains("n")) throw ParseError("graph JSON needs \"n\"");
  int n = require_int(j.at("n"), "n");
  bool has_cliques = j.contains("cliques");
  bool has_edges = j.contains("edges");
  if (has_cliques == has_edges)
    throw ParseError("graph JSON needs exactly one of \"cliques\" or \"edges\"");
  if (has_cliques) return make_closed_graph(n, parse_pairs(j.at("cliques"), "cliques"));
  EdgeList e;
  e.n = n;
  for (auto [a, b] : parse_pairs(j.at("edges"), "edges")) {
    if (a == b) throw ValidationError("loops are not allowed");
    e.edges.insert({std::min(a, b), std::max(a, b)});
  }
  return cliques_from_edges(e);
}

ClosedGraph graph_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  return graph_from_json(j);
}

json graph_to_json(const ClosedGraph& g) {
  json cliques = json::array();
  for (const auto& [a, b] : g.flat_cliques()) cliques.push_back({a, b});
  return json{{"n", g.n}, {"cliques", cliques}};
}

json hvector_to_json(const HVector& h) { return json(h.h); }

json betti_to_json(const BettiTable& t) {
  json entries = json::object();
  for (const auto& [ij, v] : t.entries)
    entries[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
  return entries;
}

std::string betti_to_text(const BettiTable& t) {
  int imax = 0, smax = 0;
  for (const auto& [ij, v] : t.entries) {
    imax = std::max(imax, ij.first);
    smax = std::max(smax, ij.second - ij.first);
  }
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= imax; ++i) os << " " << i << "\t";
  os << "\n";
  for (int s = 0; s <= smax; ++s) {
    os << s << ":    ";
    for (int i = 0; i <= imax; ++i) {
      long long v = t.at(i, i + s);
      if (v == 0)
        os << " .\t";
      else
        os << " " << v << "\t";
    }
    os << "\n";
  }
  return os.str();
}

json groebner_to_json(const PolyRing& ring, const GroebnerBasis& gb) {
  json gens = json::array();
  for (const auto& g : gb.gens) gens.push_back(to_string(ring, g));
  return json{{"nvars", ring.nvars()},
              {"var_ids", ring.var_ids()},
              {"generators", gens},
              {"quadratic", is_quadratic(gb)}};
}

json ideal_to_json(const IdealPresentation& p) {
  json gens = json::array();
  for (const auto& g : p.gens) gens.push_back(to_string(p.ring, g));
  return json{{"nvars", p.ring.nvars()},
              {"var_ids", p.ring.var_ids()},
              {"generators", gens},
              {"provenance",
               p.provenance == IdealPresentation::Provenance::full
                   ? "full"
                   : "artinian-reduced"}};
}

IdealPresentation ideal_from_json(std::int64_t prime, const json& j) {
  if (!j.is_object()) throw ParseError("ideal JSON must be an object");
  if (!j.contains("generators") || !j.at("generators").is_array())
    throw ParseError("ideal JSON needs a \"generators\" array");
  std::vector<int> ids;
  if (j.contains("var_ids")) {
    for (const auto& v : j.at("var_ids")) ids.push_back(require_int(v, "var_ids"));
  } else if (j.contains("nvars")) {
    int k = require_int(j.at("nvars"), "nvars");
    for (int i = 1; i <= k; ++i) ids.push_back(i);
  } else {
    throw ParseError("ideal JSON needs \"nvars\" or \"var_ids\"");
  }
  PolyRing ring(prime, ids);
  std::vector<Polynomial> gens;
  for (const auto& text : j.at("generators")) {
    if (!text.is_string()) throw ParseError("generators must be strings");
    Polynomial f = parse_polynomial(ring, text.get<std::string>());
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return IdealPresentation{std::move(ring), std::move(gens),
                           IdealPresentation::Provenance::full};
}

json report_to_json(const VerificationReport& r) {
  json j{{"suite", r.statement},      {"n_max", r.n_max},
         {"prime", r.prime},          {"instances", r.instances},
         {"passes", r.passes},        {"all_pass", r.all_pass()},
         {"wall_ms", r.wall_ms},      {"notes", r.notes}};
  if (r.counterexample)
    j["counterexample"] = json{{"graph", graph_to_json(r.counterexample->graph)},
                               {"details", r.counterexample->details}};
  else
    j["counterexample"] = nullptr;
  return j;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.statement;
  if (r.n_max > 0) os << " (n_max=" << r.n_max << ")";
  if (r.prime > 0) os << " prime=" << r.prime;
  os << ": " << r.passes << "/" << r.instances << " "
     << (r.all_pass() ? "PASS" : "FAIL") << " [" << static_cast<long long>(r.wall_ms)
     << " ms]";
  if (r.counterexample)
    os << "\n  counterexample: " << r.counterexample->details;
  for (const auto& note : r.notes) os << "\n  note: " << note;
  return os.str();
}

json analyze(std::int64_t prime, const ClosedGraph& g, const AnalyzeOptions& opts) {
  json out;
  out["graph"] = graph_to_json(g);
  out["components"] = g.component_count();
  out["edge_count"] = edges_from_cliques(g).edges.size();
  out["r"] = g.clique_count();

  IdealPresentation full = build_ideal(prime, g);
  json gens = json::array();
  for (const auto& f : full.gens) gens.push_back(to_string(full.ring, f));
  out["generators"] = gens;

  GroebnerBasis gb = buchberger(full.ring, full.gens);
  out["groebner"] = json{{"size", gb.gens.size()},
                         {"quadratic", is_quadratic(gb)},
                         {"initial_matches_predicted",
                          initial_ideal(full.ring, gb) == predicted_initial(g)}};

  auto [h, dim] = hilbert_series(g);
  out["h"] = hvector_to_json(h);
  out["krull_dim"] = dim;
  int reg = h.degree();
  out["reg"] = reg;
  out["max_regularity"] = has_max_regularity(g);
  if (g.connected()) {
    auto w = witness_monomial(g);
    if (w) {
      PolyRing reduced(prime, surviving_variable_ids(g));
      out["witness"] = to_string(reduced, *w);
    } else {
      out["witness"] = nullptr;
    }
  } else {
    out["witness"] = nullptr;
  }

  bool socle_verdict = is_gorenstein_socle(prime, g);
  json gorenstein{{"criterion", is_gorenstein_criterion(g)},
                  {"socle", socle_verdict}};
  if (opts.with_betti) gorenstein["betti"] = gorenstein_by_betti(prime, g);
  out["gorenstein"] = gorenstein;

  if (opts.with_betti) {
    BettiTable t = betti_of_graph(prime, g);
    out["betti"] = betti_to_json(t);
    out["reg_from_betti"] = regularity_from_table(t);
  }
  out["prime"] = prime;
  return out;
}

json enumerate_rows(int n, bool connected_only, bool gorenstein_only) {
  std::vector<ClosedGraph> graphs =
      connected_only ? enumerate_connected(n) : enumerate_all(n);
  if (connected_only)
    std::sort(graphs.begin(), graphs.end(), flat_lex_less);
  json rows = json::array();
  for (const auto& g : graphs) {
    bool gor = is_gorenstein_criterion(g);
    if (gorenstein_only && !gor) continue;
    json cliques = json::array();
    for (const auto& [a, b] : g.flat_cliques()) cliques.push_back({a, b});
    rows.push_back(json{{"n", g.n},
                        {"cliques", cliques},
                        {"r", g.clique_count()},
                        {"reg", regularity(g)},
                        {"max_reg", has_max_regularity(g)},
                        {"gorenstein", gor}});
  }
  return rows;
}

}  // namespace scroll
