#include "core/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "core/artinian.hpp"
#include "core/betti.hpp"
#include "core/errors.hpp"
#include "core/hilbert.hpp"
#include "core/ideals.hpp"

namespace scroll {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

unsigned worker_count(unsigned jobs, size_t task_count) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned n = jobs == 0 ? hw : jobs;
  if (n > task_count) n = static_cast<unsigned>(task_count);
  return n == 0 ? 1 : n;
}

// Runs check(g) over all graphs on a bounded pool; a nonempty string is a
// failure description. Results are merged by enumeration index, so the
// first recorded counterexample is minimal regardless of thread count.
template <class Fn>
void sweep(const std::vector<ClosedGraph>& graphs, Fn&& check,
           VerificationReport& report, unsigned jobs) {
  std::vector<std::string> results(graphs.size());
  unsigned workers = worker_count(jobs, graphs.size());
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= graphs.size()) break;
        try {
          results[i] = check(graphs[i]);
        } catch (const std::exception& e) {
          results[i] = std::string("exception: ") + e.what();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < graphs.size(); ++i) {
    ++report.instances;
    if (results[i].empty())
      ++report.passes;
    else if (!report.counterexample)
      report.counterexample = Counterexample{graphs[i], results[i]};
  }
}

std::vector<ClosedGraph> all_graphs_up_to(int n_max) {
  std::vector<ClosedGraph> graphs;
  for (int n = 2; n <= n_max; ++n) {
    auto batch = enumerate_all(n);
    graphs.insert(graphs.end(), batch.begin(), batch.end());
  }
  return graphs;
}

std::string cliques_text(const ClosedGraph& g) {
  std::ostringstream os;
  os << "n=" << g.n << " cliques";
  for (const auto& [a, b] : g.flat_cliques()) os << " [" << a << "," << b << "]";
  return os.str();
}

}  // namespace

ClosedGraph fixture_n14() {
  return make_closed_graph(
      14, {{1, 5}, {2, 6}, {3, 8}, {4, 9}, {6, 10}, {7, 12}, {8, 13}, {10, 14}});
}

ClosedGraph fixture_n15() {
  return make_closed_graph(
      15, {{1, 4}, {2, 5}, {5, 9}, {6, 10}, {7, 12}, {8, 13}, {10, 14}, {14, 15}});
}

ClosedGraph fixture_n22() {
  return make_closed_graph(
      22, {{1, 5}, {2, 9}, {6, 14}, {10, 17}, {15, 21}, {18, 22}});
}

VerificationReport verify_maxreg(int n_max, unsigned jobs) {
  if (n_max < 2) throw ValidationError("maxreg sweep needs n_max >= 2");
  auto start = Clock::now();
  VerificationReport report{.statement = "maxreg", .n_max = n_max, .prime = 0};
  std::vector<ClosedGraph> graphs = all_graphs_up_to(n_max);
  graphs.push_back(fixture_n14());
  graphs.push_back(fixture_n15());
  graphs.push_back(fixture_n22());
  std::atomic<long long> additive{0};
  sweep(
      graphs,
      [&](const ClosedGraph& g) -> std::string {
        int reg = regularity(g);
        int r = g.clique_count();
        bool criterion = has_max_regularity(g);
        int comp_sum = 0;
        for (const auto& comp : g.components)
          comp_sum += regularity(component_graph(comp));
        if (reg == comp_sum) ++additive;
        if ((reg == r) != criterion) {
          std::ostringstream os;
          os << cliques_text(g) << ": reg=" << reg << " r=" << r
             << " triple-intersection-criterion=" << (criterion ? "true" : "false");
          return os.str();
        }
        if (criterion) {
          auto check_witness = [&](const ClosedGraph& conn) -> bool {
            auto w = witness_monomial(conn);
            return w.has_value() && w->degree() == conn.clique_count();
          };
          for (const auto& comp : g.components)
            if (!check_witness(component_graph(comp)))
              return cliques_text(g) + ": witness monomial missing or of wrong degree";
        }
        return {};
      },
      report, jobs);
  report.notes.push_back("regularity additive over components in " +
                         std::to_string(additive.load()) + "/" +
                         std::to_string(report.instances) +
                         " instances (observed, not asserted)");
  report.wall_ms = ms_since(start);
  return report;
}

VerificationReport verify_gorenstein(int n_max, std::int64_t prime, unsigned jobs) {
  if (n_max < 2) throw ValidationError("gorenstein sweep needs n_max >= 2");
  auto start = Clock::now();
  VerificationReport report{.statement = "gorenstein", .n_max = n_max, .prime = prime};
  sweep(
      all_graphs_up_to(n_max),
      [&](const ClosedGraph& g) -> std::string {
        bool by_socle = is_gorenstein_socle(prime, g);
        bool by_criterion = is_gorenstein_criterion(g);
        if (by_socle != by_criterion) {
          std::ostringstream os;
          os << cliques_text(g) << ": socle says " << (by_socle ? "true" : "false")
             << ", clique criterion says " << (by_criterion ? "true" : "false");
          return os.str();
        }
        if (by_socle) {
          if (regularity(g) != g.clique_count())
            return cliques_text(g) + ": Gorenstein without maximal regularity";
          if (!h_symmetric(h_vector(g)))
            return cliques_text(g) + ": Gorenstein with asymmetric h-vector";
        }
        return {};
      },
      report, jobs);
  report.wall_ms = ms_since(start);
  return report;
}

VerificationReport verify_betti_prop(int n_max, std::int64_t prime, unsigned jobs) {
  if (n_max < 2) throw ValidationError("betti sweep needs n_max >= 2");
  auto start = Clock::now();
  VerificationReport report{.statement = "betti", .n_max = n_max, .prime = prime};
  std::vector<ClosedGraph> applicable;
  for (auto& g : all_graphs_up_to(n_max)) {
    if (!g.connected()) {
      applicable.push_back(std::move(g));
      continue;
    }
    const auto& cliques = g.components.front().cliques;
    bool chain = true;
    for (size_t i = 0; i + 1 < cliques.size(); ++i)
      if (cliques[i + 1].first != cliques[i].second) chain = false;
    if (chain) applicable.push_back(std::move(g));
  }
  sweep(
      applicable,
      [&](const ClosedGraph& g) -> std::string {
        if (g.connected() && !verify_betti_equality(prime, g))
          return cliques_text(g) + ": Betti tables differ from the initial-ideal side";
        if (!product_formula_check(prime, g))
          return cliques_text(g) + ": Betti polynomial does not factor";
        return {};
      },
      report, jobs);
  report.wall_ms = ms_since(start);
  return report;
}

VerificationReport verify_structural(int n_max, std::int64_t prime, unsigned jobs) {
  if (n_max < 2) throw ValidationError("structural sweep needs n_max >= 2");
  auto start = Clock::now();
  VerificationReport report{.statement = "structural", .n_max = n_max, .prime = prime};
  sweep(
      all_graphs_up_to(n_max),
      [&](const ClosedGraph& g) -> std::string {
        IdealPresentation full = build_ideal(prime, g);
        GroebnerBasis gb = buchberger(full.ring, full.gens);
        if (!is_quadratic(gb))
          return cliques_text(g) + ": reduced basis is not quadratic";
        if (!(initial_ideal(full.ring, gb) == predicted_initial(g)))
          return cliques_text(g) + ": initial ideal differs from the block formula";
        // the killed variables must be regular, one after another
        std::vector<Polynomial> current = full.gens;
        GroebnerBasis current_gb = gb;
        for (int id : killed_variable_ids(g)) {
          int pos = full.ring.position_of_id(id);
          if (!colon_by_variable_equals(full.ring, current_gb, pos, 2 * g.n))
            return cliques_text(g) + ": x" + std::to_string(id) +
                   " is not a regular element at its reduction step";
          current.push_back(poly_variable(full.ring, pos));
          current_gb = buchberger(full.ring, current);
        }
        // standard-monomial count of the Artinian reduction
        IdealPresentation reduced = artinian_reduce(full, g);
        GroebnerBasis rgb = buchberger(reduced.ring, reduced.gens);
        HVector h = h_vector(g);
        long long expected = 0;
        for (long long hd : h.h) expected += hd;
        long long got =
            static_cast<long long>(quotient_basis(reduced.ring, rgb).size());
        if (got != expected) {
          std::ostringstream os;
          os << cliques_text(g) << ": quotient dimension " << got
             << " != sum of h-vector " << expected;
          return os.str();
        }
        return {};
      },
      report, jobs);
  report.wall_ms = ms_since(start);
  return report;
}

namespace {

struct FixtureCheck {
  std::string name;
  bool pass;
  std::string details;
};

void run_fixture(const ClosedGraph& g, const std::string& tag,
                 const std::vector<FixtureCheck>& checks,
                 VerificationReport& report) {
  for (const auto& c : checks) {
    ++report.instances;
    if (c.pass)
      ++report.passes;
    else if (!report.counterexample)
      report.counterexample = Counterexample{g, tag + "/" + c.name + ": " + c.details};
  }
}

}  // namespace

VerificationReport verify_fixtures(std::int64_t prime) {
  auto start = Clock::now();
  VerificationReport report{.statement = "fixtures", .n_max = 0, .prime = prime};

  {
    // n=14: socle contains the top standard monomial and a second element
    ClosedGraph g = fixture_n14();
    IdealPresentation reduced = artinian_reduce(build_ideal(prime, g), g);
    const PolyRing& ring = reduced.ring;
    GroebnerBasis gb = buchberger(ring, reduced.gens);
    ArtinianQuotient q = make_quotient(ring, gb);
    int reg = regularity(g);
    HVector h = h_vector(g);
    auto std4 = standard_monomials(g, 4);
    Monomial w = parse_monomial(ring, "x2*x6*x10*x14");
    Polynomial f = poly_mul(ring, parse_polynomial(ring, "x3*x9 - x2*x10"),
                            parse_polynomial(ring, "x14"));
    bool f_not_in_ideal = !normal_form(ring, f, gb).is_zero();
    bool f_in_socle = true;
    for (int pos = 0; pos < ring.nvars(); ++pos)
      if (!normal_form(ring, poly_mul(ring, poly_variable(ring, pos), f), gb)
               .is_zero())
        f_in_socle = false;
    SocleBasis soc = socle(q);
    bool span_ok = in_span(ring.fp(), soc.vectors, coordinates(q, f)) &&
                   in_span(ring.fp(), soc.vectors,
                           coordinates(q, poly_of_monomial(ring, w)));
    std::vector<FixtureCheck> checks = {
        {"regularity-is-4", reg == 4 && h.h.back() == 1,
         "reg=" + std::to_string(reg)},
        {"unique-top-standard-monomial",
         std4.size() == 1 && std4.front() == w, "degree-4 count=" +
         std::to_string(std4.size())},
        {"socle-element-outside-ideal", f_not_in_ideal, "normal form vanished"},
        {"socle-membership", f_in_socle, "some x_l * f is not in the ideal"},
        {"socle-spans-both-classes", span_ok, "class missing from socle span"},
        {"socle-dimension-at-least-2", soc.dim() >= 2,
         "socle dim=" + std::to_string(soc.dim())},
        {"not-gorenstein",
         !is_gorenstein_socle(prime, g) && !is_gorenstein_criterion(g), ""},
    };
    run_fixture(g, "n14", checks, report);
    report.notes.push_back("n14: socle dimension " + std::to_string(soc.dim()) +
                           ", regularity " + std::to_string(reg));
  }

  {
    // n=15: explicit socle binomial of sub-maximal degree
    ClosedGraph g = fixture_n15();
    IdealPresentation reduced = artinian_reduce(build_ideal(prime, g), g);
    const PolyRing& ring = reduced.ring;
    GroebnerBasis gb = buchberger(ring, reduced.gens);
    int reg = regularity(g);
    HVector h = h_vector(g);
    auto top = standard_monomials(g, reg);
    Monomial expected_top = parse_monomial(ring, "x2*x5*x6*x10*x14*x15");
    Polynomial f =
        poly_mul(ring, parse_polynomial(ring, "x2*x5"),
                 poly_mul(ring, parse_polynomial(ring, "x7*x13 - x6*x14"),
                          parse_polynomial(ring, "x15")));
    bool f_not_in_ideal = !normal_form(ring, f, gb).is_zero();
    bool f_in_socle = true;
    for (int pos = 0; pos < ring.nvars(); ++pos)
      if (!normal_form(ring, poly_mul(ring, poly_variable(ring, pos), f), gb)
               .is_zero())
        f_in_socle = false;
    std::vector<FixtureCheck> checks = {
        {"top-h-entry-is-1", h.h.back() == 1,
         "h_top=" + std::to_string(h.h.back())},
        {"unique-top-standard-monomial",
         top.size() == 1 && top.front() == expected_top,
         "top count=" + std::to_string(top.size())},
        {"socle-element-outside-ideal", f_not_in_ideal, "normal form vanished"},
        {"socle-membership", f_in_socle, "some x_l * f is not in the ideal"},
        {"not-gorenstein",
         !is_gorenstein_socle(prime, g) && !is_gorenstein_criterion(g), ""},
    };
    run_fixture(g, "n15", checks, report);
    report.notes.push_back(
        "n15: top standard monomial has degree " + std::to_string(reg) +
        " (six variable factors; the oracle, not a label, fixes the degree)");
  }

  {
    // n=22: multiplying by x11 escapes the ideal, so f is not in the socle
    ClosedGraph g = fixture_n22();
    IdealPresentation reduced = artinian_reduce(build_ideal(prime, g), g);
    const PolyRing& ring = reduced.ring;
    GroebnerBasis gb = buchberger(ring, reduced.gens);
    Polynomial f = parse_polynomial(
        ring,
        "x2*x6*x10*x15 + x2*x6*x11*x21 + x2*x6*x12*x21 + x2*x6*x13*x21 + "
        "x2*x6*x14*x21");
    Polynomial x11f =
        poly_mul(ring, poly_variable(ring, ring.position_of_id(11)), f);
    bool f_standard = normal_form(ring, f, gb) == f;
    bool escapes = !normal_form(ring, x11f, gb).is_zero();
    std::vector<FixtureCheck> checks = {
        {"candidate-outside-ideal", f_standard, "f reduced unexpectedly"},
        {"x11-multiple-outside-ideal", escapes, "x11 * f reduced to zero"},
    };
    run_fixture(g, "n22", checks, report);
  }

  report.wall_ms = ms_since(start);
  return report;
}

int default_n_max(const std::string& suite) {
  if (suite == "maxreg") return 10;
  if (suite == "gorenstein") return 9;
  if (suite == "betti") return 6;
  if (suite == "structural") return 8;
  if (suite == "fixtures") return 0;
  throw ParseError("unknown suite: " + suite);
}

VerificationReport run_suite(const std::string& suite, int n_max, std::int64_t prime,
                             unsigned jobs) {
  int bound = n_max > 0 ? n_max : default_n_max(suite);
  if (suite == "maxreg") return verify_maxreg(bound, jobs);
  if (suite == "gorenstein") return verify_gorenstein(bound, prime, jobs);
  if (suite == "betti") return verify_betti_prop(bound, prime, jobs);
  if (suite == "structural") return verify_structural(bound, prime, jobs);
  if (suite == "fixtures") return verify_fixtures(prime);
  throw ParseError("unknown suite: " + suite);
}

std::vector<VerificationReport> run_all_suites(int n_max, std::int64_t prime,
                                               unsigned jobs) {
  std::vector<VerificationReport> out;
  for (const char* s : {"maxreg", "gorenstein", "betti", "structural", "fixtures"})
    out.push_back(run_suite(s, n_max, prime, jobs));
  return out;
}

}  // namespace scroll
