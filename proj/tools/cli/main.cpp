// Command-line front end for the scroll shared library. Talks to the
// library through the C API only; JSON re-shaping for csv/text output is
// done locally.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scroll/scroll.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

struct CtxGuard {
  scroll_ctx* ctx = nullptr;
  ~CtxGuard() { scroll_ctx_free(ctx); }
};

struct GraphGuard {
  scroll_graph* g = nullptr;
  ~GraphGuard() { scroll_graph_free(g); }
};

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { scroll_string_free(s); }
};

int status_to_exit(scroll_status s) {
  switch (s) {
    case SCROLL_OK:
      return kExitOk;
    case SCROLL_ERR_PARSE:
      return kExitUsage;
    case SCROLL_ERR_VALIDATION:
      return kExitValidation;
    default:
      return kExitInternal;
  }
}

[[nodiscard]] int fail(scroll_status s) {
  std::cerr << "error: " << scroll_last_error() << "\n";
  return status_to_exit(s);
}

// --graph accepts inline JSON or @path-to-file.
std::optional<std::string> load_argument(const std::string& arg, std::string& err) {
  if (arg.empty()) {
    err = "empty argument";
    return std::nullopt;
  }
  if (arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) {
    err = "cannot open file " + arg.substr(1);
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload << "\n";
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitInternal;
  }
  out << payload << "\n";
  return kExitOk;
}

std::string cliques_brief(const json& cliques) {
  std::string s;
  for (const auto& c : cliques) {
    if (!s.empty()) s += " ";
    s += "[" + std::to_string(c[0].get<int>()) + "," +
         std::to_string(c[1].get<int>()) + "]";
  }
  return s;
}

std::string analyze_text(const json& r) {
  std::ostringstream os;
  os << "graph: n=" << r["graph"]["n"] << " cliques "
     << cliques_brief(r["graph"]["cliques"]) << "\n";
  os << "components: " << r["components"] << ", edges: " << r["edge_count"]
     << ", r: " << r["r"] << "\n";
  os << "groebner: " << r["groebner"]["size"] << " elements, quadratic="
     << r["groebner"]["quadratic"] << ", initial matches prediction: "
     << r["groebner"]["initial_matches_predicted"] << "\n";
  os << "h-vector: " << r["h"].dump() << ", reg=" << r["reg"]
     << ", max regularity: " << r["max_regularity"] << "\n";
  os << "witness: " << r["witness"].dump() << "\n";
  os << "gorenstein: criterion=" << r["gorenstein"]["criterion"]
     << " socle=" << r["gorenstein"]["socle"];
  if (r["gorenstein"].contains("betti"))
    os << " betti=" << r["gorenstein"]["betti"];
  os << "\n";
  if (r.contains("betti")) os << "betti table (rows j-i, cols i):\n";
  return os.str();
}

std::string rows_to_csv(const json& rows) {
  std::ostringstream os;
  os << "n;cliques;r;reg;max_reg;gorenstein\n";
  for (const auto& row : rows) {
    os << row["n"] << ";\"" << cliques_brief(row["cliques"]) << "\";" << row["r"]
       << ";" << row["reg"] << ";" << (row["max_reg"].get<bool>() ? 1 : 0) << ";"
       << (row["gorenstein"].get<bool>() ? 1 : 0) << "\n";
  }
  std::string s = os.str();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string verify_text(const json& out) {
  std::ostringstream os;
  for (const auto& r : out["reports"]) {
    os << "suite " << r["suite"].get<std::string>();
    if (r["n_max"].get<int>() > 0) os << " (n_max=" << r["n_max"] << ")";
    if (r["prime"].get<long long>() > 0) os << " prime=" << r["prime"];
    os << ": " << r["passes"] << "/" << r["instances"]
       << " " << (r["all_pass"].get<bool>() ? "PASS" : "FAIL") << " ["
       << static_cast<long long>(r["wall_ms"].get<double>()) << " ms]\n";
    if (!r["counterexample"].is_null())
      os << "  counterexample: " << r["counterexample"]["details"].get<std::string>()
         << "\n";
    for (const auto& note : r["notes"])
      os << "  note: " << note.get<std::string>() << "\n";
  }
  os << (out["all_pass"].get<bool>() ? "ALL PASS" : "FAILURES FOUND");
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of scroll binomial edge ideals of closed graphs"};
  app.require_subcommand(1);

  long long prime = 0;  // 0 = library default
  std::string format = "json";
  std::string out_path;
  app.add_option("--prime", prime, "prime field characteristic (default 32003)");
  app.add_option("--format", format, "output format: json, text, or csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  std::string graph_arg, ideal_arg, method = "both", suite = "all";
  int n = 0, n_max = 0;
  bool artinian = false, with_betti = false, monomial_side = false;
  bool connected_only = false, gorenstein_only = false;

  CLI::App* analyze = app.add_subcommand("analyze", "full report for one graph");
  analyze->add_option("--graph", graph_arg, "graph JSON or @file")->required();
  analyze->add_flag("--betti", with_betti, "include the Betti table");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "all closed graphs on [n] with invariants");
  enumerate->add_option("--n", n, "vertex count")->required();
  enumerate->add_flag("--connected-only", connected_only, "connected graphs only");
  enumerate->add_flag("--gorenstein-only", gorenstein_only, "Gorenstein rows only");

  CLI::App* hilbert = app.add_subcommand("hilbert", "h-vector and regularity");
  hilbert->add_option("--graph", graph_arg, "graph JSON or @file")->required();

  CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers");
  betti->add_option("--graph", graph_arg, "graph JSON or @file")->required();
  betti->add_flag("--monomial-side", monomial_side,
                  "use the predicted initial ideal instead of the binomials");

  CLI::App* gorenstein = app.add_subcommand("gorenstein", "Gorenstein deciders");
  gorenstein->add_option("--graph", graph_arg, "graph JSON or @file")->required();
  gorenstein->add_option("--method", method, "socle, criterion, betti, or both")
      ->check(CLI::IsMember({"socle", "criterion", "betti", "both"}));

  CLI::App* groebner = app.add_subcommand("groebner", "reduced Groebner basis");
  groebner->add_option("--ideal", ideal_arg, "ideal JSON or @file");
  groebner->add_option("--graph", graph_arg, "graph JSON or @file");
  groebner->add_flag("--artinian", artinian, "reduce modulo the regular variables");

  CLI::App* ideal = app.add_subcommand("ideal", "edge-ideal generators");
  ideal->add_option("--graph", graph_arg, "graph JSON or @file")->required();
  ideal->add_flag("--artinian", artinian, "reduce modulo the regular variables");

  CLI::App* verify = app.add_subcommand(
      "verify", "exhaustive statement checks against independent oracles");
  verify->add_option("--suite", suite,
                     "maxreg, gorenstein, betti, structural, fixtures, or all")
      ->check(CLI::IsMember(
          {"maxreg", "gorenstein", "betti", "structural", "fixtures", "all"}));
  verify->add_option("--n-max", n_max, "sweep bound (default per suite)");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CtxGuard ctx;
  if (scroll_status s = scroll_ctx_new(prime, &ctx.ctx)) return fail(s);

  GraphGuard graph;
  if (!graph_arg.empty()) {
    std::string err;
    auto text = load_argument(graph_arg, err);
    if (!text) {
      std::cerr << "error: " << err << "\n";
      return kExitUsage;
    }
    if (scroll_status s = scroll_graph_parse(text->c_str(), &graph.g))
      return fail(s);
  }

  StringGuard result;
  if (*analyze) {
    if (scroll_status s =
            scroll_analyze(ctx.ctx, graph.g, with_betti ? 1 : 0, &result.s))
      return fail(s);
    if (format == "text") return emit(analyze_text(json::parse(result.s)), out_path);
    return emit(result.s, out_path);
  }

  if (*enumerate) {
    if (n < 2) {
      std::cerr << "error: --n must be at least 2\n";
      return kExitUsage;
    }
    if (scroll_status s = scroll_enumerate(ctx.ctx, n, connected_only ? 1 : 0,
                                           gorenstein_only ? 1 : 0, &result.s))
      return fail(s);
    if (format == "csv") return emit(rows_to_csv(json::parse(result.s)), out_path);
    return emit(result.s, out_path);
  }

  if (*hilbert) {
    if (scroll_status s = scroll_hilbert(ctx.ctx, graph.g, &result.s))
      return fail(s);
    return emit(result.s, out_path);
  }

  if (*betti) {
    if (scroll_status s =
            scroll_betti(ctx.ctx, graph.g, monomial_side ? 1 : 0, &result.s))
      return fail(s);
    json r = json::parse(result.s);
    if (format == "text") return emit(r["text"].get<std::string>(), out_path);
    return emit(result.s, out_path);
  }

  if (*gorenstein) {
    if (scroll_status s =
            scroll_gorenstein(ctx.ctx, graph.g, method.c_str(), &result.s))
      return fail(s);
    json r = json::parse(result.s);
    int code = emit(result.s, out_path);
    if (code != kExitOk) return code;
    return r["agreement"].get<bool>() ? kExitOk : kExitCounterexample;
  }

  if (*groebner) {
    if (graph_arg.empty() == ideal_arg.empty()) {
      std::cerr << "error: groebner needs exactly one of --ideal or --graph\n";
      return kExitUsage;
    }
    scroll_status s;
    if (!ideal_arg.empty()) {
      std::string err;
      auto text = load_argument(ideal_arg, err);
      if (!text) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
      }
      s = scroll_groebner(ctx.ctx, text->c_str(), &result.s);
    } else {
      s = scroll_groebner_graph(ctx.ctx, graph.g, artinian ? 1 : 0, &result.s);
    }
    if (s) return fail(s);
    return emit(result.s, out_path);
  }

  if (*ideal) {
    if (scroll_status s =
            scroll_ideal(ctx.ctx, graph.g, artinian ? 1 : 0, &result.s))
      return fail(s);
    return emit(result.s, out_path);
  }

  if (*verify) {
    if (n_max != 0 && n_max < 2) {
      std::cerr << "error: --n-max must be at least 2\n";
      return kExitUsage;
    }
    int all_pass = 0;
    if (scroll_status s =
            scroll_verify(ctx.ctx, suite.c_str(), n_max, &result.s, &all_pass))
      return fail(s);
    json r = json::parse(result.s);
    int code = format == "text" ? emit(verify_text(r), out_path)
                                : emit(result.s, out_path);
    if (code != kExitOk) return code;
    return all_pass ? kExitOk : kExitCounterexample;
  }

  return kExitUsage;
}
