// Command-line front end: every subcommand prints JSON lines on stdout
// (one object per result row) and a timing record on stderr. Counts are
// decimal strings. Identical invocations produce byte-identical stdout,
// for any worker count.

#include <unistd.h>

#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "paley/acceptance.hpp"
#include "paley/census.hpp"
#include "paley/error.hpp"
#include "paley/ffield.hpp"
#include "paley/mds.hpp"
#include "paley/parity.hpp"
#include "paley/random_model.hpp"
#include "paley/rng.hpp"
#include "paley/serialize.hpp"
#include "paley/version.hpp"

using nlohmann::json;
using namespace paley;

namespace {

struct GlobalOptions {
  uint64_t budget = 0;  // 0 = module defaults
  unsigned workers = 1;

  Budget make_budget() const {
    Budget b;
    if (budget > 0) {
      b.subset_steps = budget;
      b.ak_terms = budget;
    }
    return b;
  }
};

json manifest(const std::string& subcommand, json params,
              std::optional<uint64_t> seed = {}) {
  json m{{"subcommand", subcommand},
         {"params", std::move(params)},
         {"version", kVersion}};
  if (seed) m["seed"] = *seed;
  return m;
}

void emit(const json& row) { std::cout << row.dump() << "\n"; }

mpq_class parse_ratio(const std::string& text) {
  mpq_class p;
  try {
    p = mpq_class(text, 10);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ParseError,
         "expected a fraction NUM/DEN, got '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(p.get_mpq_t())) == 0)
    fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  p.canonicalize();
  return p;
}

void run_weil_trials(const FiniteField& f, uint32_t deg, uint64_t trials,
                     uint64_t seed, const json& params) {
  if (deg < 2) fail(ErrorKind::DomainError, "--deg must be at least 2");
  if (deg >= f.q()) fail(ErrorKind::DomainError, "--deg must be below q");
  bool all_ok = true;
  for (uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    std::set<uint32_t> roots;
    while (roots.size() < deg) roots.insert(uint32_t(rng.below(f.q())));
    const std::vector<uint32_t> w(roots.begin(), roots.end());
    const uint32_t n = 1 + 2 * uint32_t(rng.below(3));  // odd power <= 5
    const WeilReport rep = weil_check(f, w, n);
    all_ok = all_ok && rep.ok;
    json row = weil_json(f, w, n, rep);
    row["trial"] = t;
    row["manifest"] = manifest("weil", params, seed);
    emit(row);
  }
  emit(json{{"trials", trials},
            {"all_ok", all_ok},
            {"manifest", manifest("weil", params, seed)}});
  if (!all_ok) fail(ErrorKind::DomainError, "a character-sum bound failed");
}

int run(int argc, char** argv) {
  CLI::App app{
      "Degree-parity censuses of Paley graphs and tournaments, and the "
      "MDS self-dual codes built from their parity-constrained subsets"};
  app.require_subcommand(1);
  GlobalOptions global;
  if (const char* env = std::getenv("PALEYTOOL_BUDGET"))
    global.budget = std::strtoull(env, nullptr, 10);
  app.add_option("--budget", global.budget,
                 "Override the enumeration caps (subset steps and "
                 "character-sum terms); defaults from PALEYTOOL_BUDGET");
  app.add_option("--workers", global.workers,
                 "Worker threads for census, code search and sampling")
      ->check(CLI::Range(1u, 256u));

  auto* sc_field = app.add_subcommand(
      "field-info", "Describe F_q: characteristic, degree, modulus, square "
                    "count and the sign of -1");
  uint64_t fi_q = 0;
  uint32_t fi_p = 0, fi_e = 1;
  std::vector<uint32_t> fi_mod;
  sc_field->add_option("--q", fi_q, "Field order (factored automatically)");
  sc_field->add_option("--p", fi_p, "Characteristic (alternative to --q)");
  sc_field->add_option("--e", fi_e, "Extension degree");
  sc_field->add_option("--modulus", fi_mod,
                       "Modulus coefficients, low to high");
  sc_field->callback([&] {
    const FiniteField f =
        fi_q > 0 ? FiniteField::from_order(fi_q)
                 : FiniteField::make(
                       fi_p, fi_e,
                       fi_mod.empty() ? std::optional<std::vector<uint32_t>>{}
                                      : std::optional(fi_mod));
    emit(json{{"q", f.q()},
              {"field", field_descriptor(f)},
              {"kind", f.q() % 4 == 1 ? "graph" : "tournament"},
              {"nonzero_squares", (f.q() - 1) / 2},
              {"eta_minus_one", f.eta(f.neg(1))},
              {"manifest", manifest("field-info", json{{"q", f.q()}})}});
  });

  auto* sc_paley = app.add_subcommand(
      "paley", "Build the Paley graph (q = 1 mod 4) or tournament "
               "(q = 3 mod 4); --edges exports one 'u v' pair per line");
  uint64_t pa_q = 0;
  bool pa_edges = false;
  sc_paley->add_option("--q", pa_q, "Field order")->required();
  sc_paley->add_flag("--edges", pa_edges,
                     "Print the edge/arc list instead of the JSON summary");
  sc_paley->callback([&] {
    const PaleyStructure p(FiniteField::from_order(pa_q));
    if (pa_edges) {
      p.write_edge_list(std::cout);
      return;
    }
    emit(json{{"q", p.order()},
              {"kind", to_string(p.kind())},
              {"degree", (p.order() - 1) / 2},
              {"field", field_descriptor(p.field())},
              {"manifest", manifest("paley", json{{"q", p.order()}})}});
  });

  auto* sc_coeven = app.add_subcommand(
      "coeven", "Count subsets inducing all-even subgraphs on both sides "
                "of their partition, via the GF(2) rank of the "
                "odd-extension parity system (--brute for the 2^q scan)");
  uint64_t ce_q = 0;
  bool ce_brute = false;
  sc_coeven->add_option("--q", ce_q, "Field order (must be 1 mod 4)")
      ->required();
  sc_coeven->add_flag("--brute", ce_brute,
                      "Independent exhaustive scan, q <= 24");
  sc_coeven->callback([&] {
    const FiniteField f = FiniteField::from_order(ce_q);
    const SimpleGraph g = SimpleGraph::from_paley(PaleyStructure(f));
    const json params{{"q", f.q()}, {"brute", ce_brute}};
    CoevenCount cc;
    std::string method;
    if (ce_brute) {
      const uint64_t count = brute_force_coeven(g);
      cc = CoevenCount{mpz_class(static_cast<unsigned long>(count)),
                       std::size_t(std::countr_zero(count))};
      method = "brute";
    } else {
      cc = count_coeven(g);
      method = "rank";
    }
    json row = coeven_json(f, cc, method);
    row["manifest"] = manifest("coeven", params);
    emit(row);
  });

  auto* sc_census = app.add_subcommand(
      "census", "Exact or sampled counts of induced sub(di)graphs with all "
                "(out-)degrees even / odd, one JSON row per order r");
  uint64_t cs_q = 0, cs_samples = 100000, cs_seed = 0;
  uint32_t cs_rmin = 1, cs_rmax = 0;
  std::string cs_mode = "exhaustive";
  sc_census->add_option("--q", cs_q, "Field order")->required();
  sc_census->add_option("--r-min", cs_rmin, "Smallest order");
  sc_census->add_option("--r-max", cs_rmax, "Largest order")->required();
  sc_census->add_option("--mode", cs_mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  sc_census->add_option("--samples", cs_samples,
                        "Draws per order in sample mode");
  sc_census->add_option("--seed", cs_seed, "Sampling seed");
  sc_census->callback([&] {
    const PaleyStructure p(FiniteField::from_order(cs_q));
    const CensusMode mode = cs_mode == "exhaustive" ? CensusMode::exhaustive
                                                    : CensusMode::sampled;
    const CensusReport rep =
        run_census(p, cs_rmin, cs_rmax, mode, cs_samples, cs_seed,
                   global.make_budget(), global.workers);
    const json params{{"q", cs_q},
                      {"r_min", cs_rmin},
                      {"r_max", cs_rmax},
                      {"mode", cs_mode},
                      {"samples", mode == CensusMode::sampled ? cs_samples : 0}};
    for (const CensusRow& row : rep.rows) {
      json j = census_row_json(p.field(), rep, row);
      j["manifest"] = manifest("census", params, cs_seed);
      emit(j);
    }
  });

  auto* sc_bound = app.add_subcommand(
      "bound", "Exact binomial lower bound for the number of even induced "
               "subgraphs with order in [theta/2, theta]");
  uint64_t bd_n = 0, bd_theta = 0;
  sc_bound->add_option("--n", bd_n, "Vertex count")->required();
  sc_bound->add_option("--theta", bd_theta, "Window top")->required();
  sc_bound->callback([&] {
    json row = bound_json(giant_lower_bound(bd_n, bd_theta));
    row["manifest"] = manifest("bound", json{{"n", bd_n}, {"theta", bd_theta}});
    emit(row);
  });

  auto* sc_weil = app.add_subcommand(
      "weil", "Randomized checks of the quadratic-character sum bound "
              "|sum eta(f(c)^n)| <= (deg-1) sqrt(q), by direct summation");
  uint64_t wl_q = 0, wl_trials = 100, wl_seed = 0;
  uint32_t wl_deg = 2;
  sc_weil->add_option("--q", wl_q, "Field order")->required();
  sc_weil->add_option("--deg", wl_deg, "Number of distinct roots (>= 2)");
  sc_weil->add_option("--trials", wl_trials, "Random cases");
  sc_weil->add_option("--seed", wl_seed, "Seed");
  sc_weil->callback([&] {
    const FiniteField f = FiniteField::from_order(wl_q);
    run_weil_trials(f, wl_deg, wl_trials, wl_seed,
                    json{{"q", wl_q}, {"deg", wl_deg}, {"trials", wl_trials}});
  });

  auto* sc_mds = app.add_subcommand(
      "mds", "Self-dual code construction from parity-constrained "
             "evaluation sets");
  sc_mds->require_subcommand(1);
  auto* sc_search = sc_mds->add_subcommand(
      "search", "Stream one JSON record per feasible evaluation set of size "
                "n (odd n gives the extended, length n+1 code)");
  uint64_t ms_q = 0, ms_limit = UINT64_MAX;
  uint32_t ms_n = 0;
  std::string ms_gen_out;
  sc_search->add_option("--q", ms_q, "Field order")->required();
  sc_search->add_option("--n", ms_n, "Evaluation set size")->required();
  sc_search->add_option("--limit", ms_limit, "Cap on streamed records");
  sc_search->add_option("--gen-out", ms_gen_out,
                        "Also write generators as text blocks ('q n k' "
                        "header, then k rows of element indices)");
  sc_search->callback([&] {
    const FiniteField f = FiniteField::from_order(ms_q);
    const Budget budget = global.make_budget();
    const OmegaEnumeration omega = enumerate_omega(
        f, ms_n, budget.subset_steps, ms_limit, global.workers);
    const json params{{"q", ms_q}, {"n", ms_n}, {"limit", ms_limit}};
    std::ofstream gen_out;
    if (!ms_gen_out.empty()) {
      gen_out.open(ms_gen_out);
      if (!gen_out) fail(ErrorKind::DomainError, "cannot open " + ms_gen_out);
    }
    for (const auto& alphas : omega.sets) {
      const GrsCode code = construct_self_dual(f, alphas);
      const bool sd = verify_self_dual(f, code);
      const bool mds = verify_mds(f, code);
      json row = grs_code_json(f, code, sd, mds, code.length() / 2 + 1);
      row["manifest"] = manifest("mds search", params);
      emit(row);
      if (gen_out.is_open()) {
        write_generator_text(gen_out, code);
        gen_out << "\n";
      }
    }
    emit(json{{"q", ms_q},
              {"n", ms_n},
              {"count", to_string(omega.count)},
              {"emitted", omega.sets.size()},
              {"truncated", omega.list_truncated},
              {"manifest", manifest("mds search", params)}});
  });
  auto* sc_verify = sc_mds->add_subcommand(
      "verify", "Re-verify serialized code records (JSON lines); exits "
                "nonzero on any failure");
  std::string mv_file;
  sc_verify->add_option("--file", mv_file, "JSON-lines file of code records")
      ->required();
  sc_verify->callback([&] {
    std::ifstream in(mv_file);
    if (!in) fail(ErrorKind::DomainError, "cannot open " + mv_file);
    const json params{{"file", mv_file}};
    std::string line;
    uint64_t index = 0;
    bool all_ok = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded())
        fail(ErrorKind::ParseError,
             "line " + std::to_string(index) + " is not valid JSON");
      if (!j.contains("alphas")) continue;  // summary rows pass through
      const GrsCode code = grs_code_from_json(j);
      const FiniteField f = FiniteField::from_order(code.q);
      // generator rows must match the declared evaluation data
      std::vector<uint32_t> expect(code.generator.size(), 0);
      for (uint32_t i = 0; i < code.n_eval; ++i) {
        uint32_t power = 1;
        for (uint32_t r = 0; r < code.k; ++r) {
          expect[std::size_t(r) * code.length() + i] = f.mul(code.v[i], power);
          power = f.mul(power, code.alphas[i]);
        }
      }
      if (code.extended)
        expect[std::size_t(code.k - 1) * code.length() + code.n_eval] = 1;
      const bool consistent = expect == code.generator;
      const bool sd = verify_self_dual(f, code);
      const bool mds = verify_mds(f, code);
      const bool ok = consistent && sd && mds;
      all_ok = all_ok && ok;
      emit(json{{"index", index},
                {"generator_consistent", consistent},
                {"self_dual", sd},
                {"mds", mds},
                {"ok", ok},
                {"manifest", manifest("mds verify", params)}});
      ++index;
    }
    if (!all_ok) fail(ErrorKind::DomainError, "a code record failed");
  });

  auto* sc_pairs = app.add_subcommand(
      "coeven-pairs", "Count even-cardinality proper subsets with the "
                      "all-squares delta condition on both sides "
                      "(2^((q-1)/2) - 1 when q = 1 mod 8, else none)");
  uint64_t cp_q = 0, cp_cap = 16;
  sc_pairs->add_option("--q", cp_q, "Field order")->required();
  sc_pairs->add_option("--witness-cap", cp_cap, "Witness list cap");
  sc_pairs->callback([&] {
    const FiniteField f = FiniteField::from_order(cp_q);
    json row = coeven_pairs_json(f, coeven_pair_census(f, cp_cap));
    row["manifest"] =
        manifest("coeven-pairs", json{{"q", cp_q}, {"witness_cap", cp_cap}});
    emit(row);
  });

  auto* sc_random = app.add_subcommand(
      "random-expect", "Exact expected counts of all-even order-r induced "
                       "sub(di)graphs in the binomial random models, with "
                       "optional Monte Carlo verification");
  uint64_t re_trials = 0, re_seed = 0;
  uint32_t re_n = 0, re_r = 0;
  std::string re_kind = "graph", re_p;
  sc_random->add_option("--kind", re_kind, "graph or digraph")
      ->check(CLI::IsMember({"graph", "digraph"}));
  sc_random->add_option("--n", re_n, "Vertices")->required();
  sc_random->add_option("--p", re_p, "Edge probability NUM/DEN")->required();
  sc_random->add_option("--r", re_r, "Induced order")->required();
  sc_random->add_option("--trials", re_trials,
                        "Monte Carlo trials (0 = closed form only)");
  sc_random->add_option("--seed", re_seed, "Sampling seed");
  sc_random->callback([&] {
    const mpq_class p = parse_ratio(re_p);
    const bool digraph = re_kind == "digraph";
    const json params{{"kind", re_kind},
                      {"n", re_n},
                      {"r", re_r},
                      {"p", re_p},
                      {"trials", re_trials}};
    RandomModelReport rep;
    if (re_trials > 0) {
      rep = monte_carlo(re_n, p, re_r, re_trials, re_seed, digraph,
                        global.make_budget(), global.workers);
    } else {
      rep.n = re_n;
      rep.r = re_r;
      rep.digraph = digraph;
      rep.p = p;
      rep.closed_form = digraph ? expected_digraph(re_n, p, re_r)
                                : expected_graph(re_n, p, re_r);
    }
    json row = random_model_json(rep);
    row["manifest"] = manifest("random-expect", params, re_seed);
    emit(row);
  });

  auto* sc_all = app.add_subcommand(
      "verify-all", "Run the full acceptance suite and print one pass/fail "
                    "line per criterion");
  sc_all->callback([&] {
    AcceptanceOptions options;
    options.workers = global.workers;
    char buf[4096];
    const ssize_t len = readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (len > 0) options.cli_path.assign(buf, std::size_t(len));
    bool all = true;
    for (const CriterionResult& res : run_acceptance(options)) {
      all = all && res.pass;
      emit(json{{"criterion", res.id},
                {"name", res.name},
                {"pass", res.pass},
                {"details", res.details}});
    }
    if (!all) fail(ErrorKind::DomainError, "acceptance criteria failed");
  });

  // let --budget / --workers appear after the subcommand as well
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested :
         sub->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    json err{{"error_kind", "UsageError"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  // Timing lives on stderr so stdout stays byte-identical across runs.
  json timing{{"subcommand", app.get_subcommands().front()->get_name()},
              {"wall_time_ms", elapsed.count()},
              {"version", kVersion}};
  std::cerr << timing.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    json err{{"error_kind", to_string(e.kind())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error_kind", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
