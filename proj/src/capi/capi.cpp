#include "scroll/scroll.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/artinian.hpp"
#include "core/betti.hpp"
#include "core/errors.hpp"
#include "core/jsonio.hpp"
#include "core/verify.hpp"

namespace {

constexpr long long kDefaultPrime = 32003;

thread_local std::string tls_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
scroll_status guarded(Fn&& fn) {
  try {
    fn();
    return SCROLL_OK;
  } catch (const scroll::ParseError& e) {
    tls_error = e.what();
    return SCROLL_ERR_PARSE;
  } catch (const scroll::ValidationError& e) {
    tls_error = e.what();
    return SCROLL_ERR_VALIDATION;
  } catch (const std::exception& e) {
    tls_error = e.what();
    return SCROLL_ERR_INTERNAL;
  } catch (...) {
    tls_error = "unknown error";
    return SCROLL_ERR_INTERNAL;
  }
}

scroll_status require(bool ok, const char* message) {
  if (ok) return SCROLL_OK;
  tls_error = message;
  return SCROLL_ERR_PARSE;
}

}  // namespace

struct scroll_ctx {
  long long prime;
};

struct scroll_graph {
  scroll::ClosedGraph g;
};

extern "C" {

const char* scroll_version(void) { return "1.0.0"; }

const char* scroll_last_error(void) { return tls_error.c_str(); }

void scroll_string_free(char* s) { std::free(s); }

scroll_status scroll_ctx_new(long long prime, scroll_ctx** out) {
  if (scroll_status s = require(out != nullptr, "out pointer is NULL")) return s;
  long long p = prime <= 0 ? kDefaultPrime : prime;
  return guarded([&] {
    (void)scroll::Fp(p);  // validates primality
    *out = new scroll_ctx{p};
  });
}

void scroll_ctx_free(scroll_ctx* ctx) { delete ctx; }

long long scroll_ctx_prime(const scroll_ctx* ctx) {
  return ctx == nullptr ? 0 : ctx->prime;
}

scroll_status scroll_graph_parse(const char* json, scroll_graph** out) {
  if (scroll_status s = require(json != nullptr && out != nullptr,
                                "NULL argument to scroll_graph_parse"))
    return s;
  return guarded([&] { *out = new scroll_graph{scroll::graph_from_json_text(json)}; });
}

void scroll_graph_free(scroll_graph* g) { delete g; }

scroll_status scroll_graph_to_json(const scroll_graph* g, char** out_json) {
  if (scroll_status s =
          require(g != nullptr && out_json != nullptr, "NULL argument"))
    return s;
  return guarded([&] { *out_json = dup_string(scroll::graph_to_json(g->g).dump()); });
}

int scroll_graph_vertex_count(const scroll_graph* g) {
  return g == nullptr ? 0 : g->g.n;
}

scroll_status scroll_analyze(const scroll_ctx* ctx, const scroll_graph* g,
                             int with_betti, char** out_json) {
  if (scroll_status s = require(ctx != nullptr && g != nullptr && out_json != nullptr,
                                "NULL argument to scroll_analyze"))
    return s;
  return guarded([&] {
    scroll::AnalyzeOptions opts{with_betti != 0};
    *out_json = dup_string(scroll::analyze(ctx->prime, g->g, opts).dump());
  });
}

scroll_status scroll_ideal(const scroll_ctx* ctx, const scroll_graph* g,
                           int artinian, char** out_json) {
  if (scroll_status s = require(ctx != nullptr && g != nullptr && out_json != nullptr,
                                "NULL argument to scroll_ideal"))
    return s;
  return guarded([&] {
    scroll::IdealPresentation p = scroll::build_ideal(ctx->prime, g->g);
    if (artinian != 0) p = scroll::artinian_reduce(p, g->g);
    *out_json = dup_string(scroll::ideal_to_json(p).dump());
  });
}

scroll_status scroll_groebner_graph(const scroll_ctx* ctx, const scroll_graph* g,
                                    int artinian, char** out_json) {
  if (scroll_status s = require(ctx != nullptr && g != nullptr && out_json != nullptr,
                                "NULL argument to scroll_groebner_graph"))
    return s;
  return guarded([&] {
    scroll::IdealPresentation p = scroll::build_ideal(ctx->prime, g->g);
    if (artinian != 0) p = scroll::artinian_reduce(p, g->g);
    scroll::GroebnerBasis gb = scroll::buchberger(p.ring, p.gens);
    *out_json = dup_string(scroll::groebner_to_json(p.ring, gb).dump());
  });
}

scroll_status scroll_groebner(const scroll_ctx* ctx, const char* ideal_json,
                              char** out_json) {
  if (scroll_status s = require(ctx != nullptr && ideal_json != nullptr &&
                                    out_json != nullptr,
                                "NULL argument to scroll_groebner"))
    return s;
  return guarded([&] {
    scroll::json j;
    try {
      j = scroll::json::parse(ideal_json);
    } catch (const scroll::json::parse_error& e) {
      throw scroll::ParseError(std::string("invalid JSON: ") + e.what());
    }
    scroll::IdealPresentation p = scroll::ideal_from_json(ctx->prime, j);
    scroll::GroebnerBasis gb = scroll::buchberger(p.ring, p.gens);
    *out_json = dup_string(scroll::groebner_to_json(p.ring, gb).dump());
  });
}

scroll_status scroll_hilbert(const scroll_ctx* ctx, const scroll_graph* g,
                             char** out_json) {
  if (scroll_status s = require(ctx != nullptr && g != nullptr && out_json != nullptr,
                                "NULL argument to scroll_hilbert"))
    return s;
  return guarded([&] {
    auto [h, dim] = scroll::hilbert_series(g->g);
    scroll::json out{{"h", scroll::hvector_to_json(h)},
                     {"krull_dim", dim},
                     {"reg", h.degree()},
                     {"r", g->g.clique_count()},
                     {"max_reg", scroll::has_max_regularity(g->g)}};
    if (g->g.connected()) {
      auto w = scroll::witness_monomial(g->g);
      if (w) {
        scroll::PolyRing reduced(ctx->prime, scroll::surviving_variable_ids(g->g));
        out["witness"] = scroll::to_string(reduced, *w);
      } else {
        out["witness"] = nullptr;
      }
    } else {
      out["witness"] = nullptr;
    }
    *out_json = dup_string(out.dump());
  });
}

scroll_status scroll_betti(const scroll_ctx* ctx, const scroll_graph* g,
                           int monomial_side, char** out_json) {
  if (scroll_status s = require(ctx != nullptr && g != nullptr && out_json != nullptr,
                                "NULL argument to scroll_betti"))
    return s;
  return guarded([&] {
    scroll::BettiTable t;
    if (monomial_side != 0) {
      scroll::PolyRing reduced(ctx->prime, scroll::surviving_variable_ids(g->g));
      t = scroll::koszul_betti(scroll::monomial_presentation(
          ctx->prime, reduced, scroll::predicted_initial_reduced(g->g),
          scroll::IdealPresentation::Provenance::artinian));
    } else {
      t = scroll::betti_of_graph(ctx->prime, g->g);
    }
    scroll::json out{{"table", scroll::betti_to_json(t)},
                     {"text", scroll::betti_to_text(t)},
                     {"polynomial", scroll::betti_polynomial_text(t)},
                     {"reg", scroll::regularity_from_table(t)},
                     {"side", monomial_side != 0 ? "monomial" : "binomial"}};
    *out_json = dup_string(out.dump());
  });
}

scroll_status scroll_gorenstein(const scroll_ctx* ctx, const scroll_graph* g,
                                const char* method, char** out_json) {
  if (scroll_status s = require(ctx != nullptr && g != nullptr && out_json != nullptr,
                                "NULL argument to scroll_gorenstein"))
    return s;
  return guarded([&] {
    std::string m = method == nullptr ? "both" : method;
    scroll::json out{{"method", m}};
    bool have_socle = false, have_criterion = false, have_betti = false;
    bool by_socle = false, by_criterion = false, by_betti = false;
    if (m == "socle" || m == "both") {
      by_socle = scroll::is_gorenstein_socle(ctx->prime, g->g);
      have_socle = true;
      out["socle"] = by_socle;
    }
    if (m == "criterion" || m == "both") {
      by_criterion = scroll::is_gorenstein_criterion(g->g);
      have_criterion = true;
      out["criterion"] = by_criterion;
    }
    if (m == "betti") {
      by_betti = scroll::gorenstein_by_betti(ctx->prime, g->g);
      have_betti = true;
      out["betti"] = by_betti;
    }
    if (!have_socle && !have_criterion && !have_betti)
      throw scroll::ParseError("unknown method: " + m +
                               " (expected socle, criterion, betti, or both)");
    bool verdict = have_socle ? by_socle : (have_criterion ? by_criterion : by_betti);
    out["gorenstein"] = verdict;
    bool agree = true;
    if (have_socle && have_criterion && by_socle != by_criterion) agree = false;
    out["agreement"] = agree;
    if (!agree) out["counterexample"] = scroll::graph_to_json(g->g);
    *out_json = dup_string(out.dump());
  });
}

scroll_status scroll_enumerate(const scroll_ctx* ctx, int n, int connected_only,
                               int gorenstein_only, char** out_json) {
  if (scroll_status s = require(ctx != nullptr && out_json != nullptr,
                                "NULL argument to scroll_enumerate"))
    return s;
  return guarded([&] {
    *out_json = dup_string(
        scroll::enumerate_rows(n, connected_only != 0, gorenstein_only != 0).dump());
  });
}

scroll_status scroll_verify(const scroll_ctx* ctx, const char* suite, int n_max,
                            char** out_json, int* out_all_pass) {
  if (scroll_status s = require(ctx != nullptr && suite != nullptr &&
                                    out_json != nullptr,
                                "NULL argument to scroll_verify"))
    return s;
  return guarded([&] {
    std::vector<scroll::VerificationReport> reports;
    std::string name = suite;
    if (name == "all")
      reports = scroll::run_all_suites(n_max, ctx->prime);
    else
      reports.push_back(scroll::run_suite(name, n_max, ctx->prime));
    bool all_pass = true;
    scroll::json arr = scroll::json::array();
    for (const auto& r : reports) {
      all_pass = all_pass && r.all_pass();
      arr.push_back(scroll::report_to_json(r));
    }
    scroll::json out{{"reports", arr}, {"all_pass", all_pass}};
    if (out_all_pass != nullptr) *out_all_pass = all_pass ? 1 : 0;
    *out_json = dup_string(out.dump());
  });
}

}  // extern "C"
