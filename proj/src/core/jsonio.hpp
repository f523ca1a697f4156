#ifndef SCROLL_CORE_JSONIO_HPP
#define SCROLL_CORE_JSONIO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "core/betti.hpp"
#include "core/graphs.hpp"
#include "core/groebner.hpp"
#include "core/ideals.hpp"
#include "core/verify.hpp"

namespace scroll {

using nlohmann::json;

/// Accepts {"n": N, "cliques": [[a,b],...]} or {"n": N, "edges": [[i,j],...]};
/// exactly one of the two keys must be present.
ClosedGraph graph_from_json(const json& j);
ClosedGraph graph_from_json_text(const std::string& text);
json graph_to_json(const ClosedGraph& g);

json hvector_to_json(const HVector& h);
json betti_to_json(const BettiTable& t);
std::string betti_to_text(const BettiTable& t);
json groebner_to_json(const PolyRing& ring, const GroebnerBasis& gb);
json ideal_to_json(const IdealPresentation& p);
json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

/// {"nvars": k, "var_ids": [...], "generators": ["...", ...]}; var_ids
/// default to 1..k.
IdealPresentation ideal_from_json(std::int64_t prime, const json& j);

struct AnalyzeOptions {
  bool with_betti = false;
};

/// Full per-graph report: cliques, edge count, generators, basis stats,
/// initial-ideal agreement, Hilbert data, Gorenstein verdicts, and the
/// Betti table on request.
json analyze(std::int64_t prime, const ClosedGraph& g, const AnalyzeOptions& opts);

/// One row per enumerated graph with the headline invariants.
json enumerate_rows(int n, bool connected_only, bool gorenstein_only);

}  // namespace scroll

#endif
