#include "paley/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "paley/census.hpp"
#include "paley/error.hpp"
#include "paley/ffield.hpp"
#include "paley/mds.hpp"
#include "paley/parity.hpp"
#include "paley/random_model.hpp"
#include "paley/rng.hpp"

namespace paley {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct Check {
  bool pass = true;
  std::ostringstream details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (details.tellp() > 0) details << "; ";
      details << what;
    }
  }
};

CriterionResult result(int id, const std::string& name, const Check& check,
                       const std::string& summary) {
  CriterionResult res;
  res.id = id;
  res.name = name;
  res.pass = check.pass;
  res.details = check.pass ? summary : check.details.str();
  return res;
}

SimpleGraph paley_host(uint32_t q) {
  return SimpleGraph::from_paley(PaleyStructure(FiniteField::from_order(q)));
}

// 1. Co-even totals: 2 when q = 5 mod 8, 2^((q+1)/2) when q = 1 mod 8,
// each via the rank method in under a second; the 2^q scan agrees on the
// small cases.
CriterionResult criterion_coeven_counts() {
  Check c;
  for (uint32_t q : {5u, 13u, 29u, 37u}) {
    const auto start = Clock::now();
    const CoevenCount cc = count_coeven(paley_host(q));
    c.require(cc.count == 2, "count(" + std::to_string(q) + ") != 2");
    c.require(ms_since(start) < 1000.0,
              "rank method too slow for q = " + std::to_string(q));
  }
  for (uint32_t q : {9u, 17u, 25u, 41u}) {
    const auto start = Clock::now();
    const CoevenCount cc = count_coeven(paley_host(q));
    c.require(cc.count == mpz_class(1) << ((q + 1) / 2),
              "count(" + std::to_string(q) + ") != 2^((q+1)/2)");
    c.require(ms_since(start) < 1000.0,
              "rank method too slow for q = " + std::to_string(q));
  }
  for (uint32_t q : {5u, 9u, 13u, 17u}) {
    const uint64_t brute = brute_force_coeven(paley_host(q));
    c.require(count_coeven(paley_host(q)).count ==
                  mpz_class(static_cast<unsigned long>(brute)),
              "scan disagrees for q = " + std::to_string(q));
  }
  return result(1, "coeven-count-law", c,
                "2 resp. 2^((q+1)/2) for eight fields; 2^q scan agrees on four");
}

// 2. Adjacency 2-rank: (q-1)/2 when q = 1 mod 8, q-1 when q = 5 mod 8.
CriterionResult criterion_two_rank() {
  Check c;
  for (uint32_t q : {9u, 17u, 25u, 41u})
    c.require(paley_host(q).adjacency().rank() == (q - 1) / 2,
              "rank(" + std::to_string(q) + ") != (q-1)/2");
  for (uint32_t q : {5u, 13u, 29u, 37u})
    c.require(paley_host(q).adjacency().rank() == q - 1,
              "rank(" + std::to_string(q) + ") != q-1");
  return result(2, "adjacency-2-rank-law", c, "eight fields, exact");
}

// 3. The character-sum reconstruction of the even census is exact.
CriterionResult criterion_reconstruction() {
  Check c;
  for (uint32_t q : {13u, 17u}) {
    const PaleyStructure p(FiniteField::from_order(q));
    for (uint32_t r = 1; r <= 4; ++r) {
      const ParityCounts counts =
          exhaustive_parity_census(p.adjacency(), r, uint64_t(1) << 30);
      const mpz_class via_sums = reconstruct_Nr(p.field(), r);
      c.require(via_sums == mpz_class(long(counts.even)),
                "mismatch at q = " + std::to_string(q) +
                    ", r = " + std::to_string(r));
    }
  }
  return result(3, "character-sum-reconstruction", c,
                "q in {13, 17}, r in 1..4, exact equality");
}

// 4. Sampled census of the q = 10009 graph at r = 5: the even fraction
// sits within 10% relative of 2^(1-5) = 0.0625 and within 4 standard
// errors of it.
CriterionResult criterion_sampled_large_field(unsigned workers) {
  Check c;
  const PaleyStructure p(FiniteField::from_order(10009));
  const uint64_t samples = 1000000;
  const ParityCounts counts =
      sampled_parity_census(p.adjacency(), 5, samples, 20250, workers);
  const double frac = double(counts.even) / double(samples);
  const double target = 0.0625;
  const double se = std::sqrt(target * (1 - target) / double(samples));
  std::ostringstream obs;
  obs << "fraction " << frac << " vs " << target << " (se " << se << ")";
  c.require(std::abs(frac - target) <= 0.10 * target,
            "outside 10% relative: " + obs.str());
  c.require(std::abs(frac - target) <= 4 * se, "outside 4 se: " + obs.str());
  return result(4, "large-field-sampled-census", c, obs.str());
}

// 5. Tournament orders excluded by the degree-sum parity argument are
// empty, exhaustively for q in {7, 11} and r <= 7.
CriterionResult criterion_tournament_exclusions() {
  Check c;
  for (uint32_t q : {7u, 11u}) {
    const PaleyStructure pt(FiniteField::from_order(q));
    const Gf2Matrix cols = pt.adjacency().transposed();
    for (uint32_t r = 1; r <= 7; ++r) {
      const ParityCounts counts =
          exhaustive_parity_census(cols, r, uint64_t(1) << 30);
      if (r % 4 == 2 || r % 4 == 3)
        c.require(counts.even == 0, "even count at r = " + std::to_string(r));
      if (r % 4 == 1 || r % 4 == 2)
        c.require(counts.odd == 0, "odd count at r = " + std::to_string(r));
    }
  }
  return result(5, "tournament-parity-exclusions", c,
                "q in {7, 11}, r <= 7, all excluded orders empty");
}

// 6. Every feasible evaluation set yields a code with G G^T = 0,
// dim = length/2 and distance length/2 + 1 by codeword enumeration, and
// the family sizes match the parity censuses.
CriterionResult criterion_self_dual_end_to_end() {
  Check c;
  uint64_t built = 0;
  const std::vector<std::pair<uint32_t, uint32_t>> cases = {
      {13, 3}, {13, 4}, {13, 6}, {17, 4}};
  for (const auto& [q, n] : cases) {
    const FiniteField f = FiniteField::from_order(q);
    const PaleyStructure p(FiniteField::from_order(q));
    const OmegaEnumeration omega = enumerate_omega(f, n);
    const ParityCounts counts =
        exhaustive_parity_census(p.adjacency(), n, uint64_t(1) << 30);
    const uint64_t expect =
        n % 2 == 0 ? counts.even + counts.odd : counts.even;
    c.require(omega.count == mpz_class(long(expect)),
              "family size mismatch at q = " + std::to_string(q) +
                  ", n = " + std::to_string(n));
    for (const auto& alphas : omega.sets) {
      const GrsCode code = construct_self_dual(f, alphas);
      ++built;
      const bool sd = verify_self_dual(f, code);
      const bool mds = verify_mds(f, code, MdsStrategy::codewords);
      c.require(sd && mds && code.k == code.length() / 2,
                "verification failed at q = " + std::to_string(q) +
                    ", n = " + std::to_string(n));
      if (!(sd && mds)) break;
    }
  }
  return result(6, "self-dual-mds-end-to-end", c,
                std::to_string(built) + " codes constructed and verified");
}

// 7. The two-sided family count: 255 at q = 17 and 15 at q = 9 by
// exhaustive scans, zero at q in {13, 29}.
CriterionResult criterion_pair_family() {
  Check c;
  const CoevenPairCensus q17 = coeven_pair_census(FiniteField::from_order(17));
  c.require(q17.count == 255 && q17.method == "scan", "q = 17 scan != 255");
  const CoevenPairCensus q9 = coeven_pair_census(FiniteField::from_order(9));
  c.require(q9.count == 15 && q9.method == "scan", "q = 9 scan != 15");
  c.require(coeven_pair_census(FiniteField::from_order(13)).count == 0,
            "q = 13 not empty");
  c.require(coeven_pair_census(FiniteField::from_order(29)).count == 0,
            "q = 29 not empty");
  return result(7, "complementary-pair-family", c,
                "255 @ 17, 15 @ 9 (scans), 0 @ {13, 29}");
}

// 8. Random-model expectations: exact rationals, Monte Carlo agreement
// within 3 standard errors for p in {1/2, 3/10} and both kinds, and the
// indicator sum stays inside [1.9, 2.1] for p = 0.3, r in [30, 200].
CriterionResult criterion_random_models(unsigned workers) {
  Check c;
  mpq_class half(1, 2), p3(3, 10);
  p3.canonicalize();
  c.require(expected_graph(12, half, 4) == mpq_class(495, 8),
            "graph expectation != 495/8");
  c.require(expected_digraph(12, half, 4) == mpq_class(495, 16),
            "digraph expectation != 495/16");

  uint64_t seed = 88;
  for (const mpq_class& p : {half, p3}) {
    for (bool digraph : {false, true}) {
      const RandomModelReport rep =
          monte_carlo(12, p, 4, 200000, seed++, digraph, {}, workers);
      std::ostringstream what;
      what << (digraph ? "digraph" : "graph") << " p = " << p.get_str()
           << ": mean " << rep.mc_mean << " vs " << rep.closed_form.get_d()
           << " (se " << rep.mc_stderr << ")";
      c.require(std::abs(rep.mc_mean - rep.closed_form.get_d()) <=
                    3 * rep.mc_stderr,
                what.str());
    }
  }

  const mpq_class lo(19, 10), hi(21, 10);
  for (uint32_t r = 30; r <= 200; ++r) {
    const mpq_class sum = parity_indicator_sum(p3, r);
    c.require(sum >= lo && sum <= hi,
              "indicator sum escapes [1.9, 2.1] at r = " + std::to_string(r));
  }
  return result(8, "random-model-expectations", c,
                "exact closed forms; four Monte Carlo runs within 3 se; "
                "indicator sum bounded on r in [30, 200]");
}

// 9. Twenty random 12-vertex graphs: the number of even induced
// subgraphs with order in [3, 6] and the collected primary parts both
// reach the exact bound value 11.
CriterionResult criterion_giant_window() {
  Check c;
  const BoundReport bound = giant_lower_bound(12, 6);
  c.require(bound.bound_value == 11, "bound(12, 6) != 11");
  for (uint64_t g = 0; g < 20; ++g) {
    const SimpleGraph graph = SimpleGraph::random(12, 1, 2, 4242, g);
    uint64_t window = 0;
    for (uint32_t r = 3; r <= 6; ++r)
      window +=
          exhaustive_parity_census(graph.adjacency(), r, uint64_t(1) << 30)
              .even;
    c.require(window >= 11, "window count " + std::to_string(window) +
                                " < 11 at graph " + std::to_string(g));
    const std::size_t parts = theta_set(graph, 6).size();
    c.require(parts >= 11, "theta-set size " + std::to_string(parts) +
                               " < 11 at graph " + std::to_string(g));
  }
  return result(9, "giant-window-lower-bound", c,
                "20 random graphs, both counts >= 11");
}

// 10. 1000 randomized character-sum bound checks with q <= 101,
// 2 <= |W| <= 6 and odd powers up to 5, by direct summation.
CriterionResult criterion_character_bound() {
  Check c;
  const std::vector<uint32_t> qs = {3,  5,  7,  9,  11, 13, 17, 19, 23, 25,
                                    27, 29, 31, 37, 41, 43, 47, 49, 53, 59,
                                    61, 67, 71, 73, 79, 81, 83, 89, 97, 101};
  std::vector<FiniteField> fields;
  for (uint32_t q : qs) fields.push_back(FiniteField::from_order(q));
  uint64_t checked = 0;
  for (uint64_t i = 0; i < 1000; ++i) {
    CounterRng rng(31337, i);
    const FiniteField& f = fields[rng.below(fields.size())];
    const uint32_t deg =
        2 + uint32_t(rng.below(std::min<uint64_t>(5, f.q() - 1)));
    std::set<uint32_t> roots;
    while (roots.size() < deg) roots.insert(uint32_t(rng.below(f.q())));
    const std::vector<uint32_t> w(roots.begin(), roots.end());
    const uint32_t n = 1 + 2 * uint32_t(rng.below(3));
    const WeilReport rep = weil_check(f, w, n);
    ++checked;
    c.require(rep.ok, "bound violated at case " + std::to_string(i));
    if (!rep.ok) break;
  }
  return result(10, "character-sum-bound", c,
                std::to_string(checked) +
                    " randomized cases, all within (deg-1) sqrt(q)");
}

std::string run_cli(const std::string& cli, const std::string& args,
                    int& exit_code) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  exit_code = pclose(pipe);
  return out;
}

// 11. Byte-identical stdout across reruns and across worker counts.
CriterionResult criterion_determinism(const std::string& cli) {
  Check c;
  if (cli.empty()) {
    c.require(false, "no CLI path supplied");
    return result(11, "determinism", c, "");
  }
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"census --q 17 --r-min 1 --r-max 4",
       "census --q 17 --r-min 1 --r-max 4"},
      {"--workers 1 census --q 17 --r-min 2 --r-max 4",
       "--workers 8 census --q 17 --r-min 2 --r-max 4"},
      {"--workers 1 census --q 101 --r-min 3 --r-max 3 --mode sample "
       "--samples 50000 --seed 7",
       "--workers 8 census --q 101 --r-min 3 --r-max 3 --mode sample "
       "--samples 50000 --seed 7"},
      {"--workers 1 random-expect --kind graph --n 12 --p 1/2 --r 4 "
       "--trials 50000 --seed 5",
       "--workers 8 random-expect --kind graph --n 12 --p 1/2 --r 4 "
       "--trials 50000 --seed 5"},
      {"mds search --q 13 --n 4", "--workers 8 mds search --q 13 --n 4"},
      {"coeven --q 17", "coeven --q 17"},
      {"coeven-pairs --q 17", "coeven-pairs --q 17"},
  };
  for (const auto& [lhs, rhs] : pairs) {
    int code_a = 0, code_b = 0;
    const std::string a = run_cli(cli, lhs, code_a);
    const std::string b = run_cli(cli, rhs, code_b);
    c.require(code_a == 0 && code_b == 0, "nonzero exit for: " + lhs);
    c.require(!a.empty(), "empty output for: " + lhs);
    c.require(a == b,
              "output mismatch between '" + lhs + "' and '" + rhs + "'");
  }
  return result(11, "determinism", c,
                std::to_string(pairs.size()) +
                    " invocation pairs, byte-identical stdout");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_coeven_counts());
  out.push_back(criterion_two_rank());
  out.push_back(criterion_reconstruction());
  out.push_back(criterion_sampled_large_field(options.workers));
  out.push_back(criterion_tournament_exclusions());
  out.push_back(criterion_self_dual_end_to_end());
  out.push_back(criterion_pair_family());
  out.push_back(criterion_random_models(options.workers));
  out.push_back(criterion_giant_window());
  out.push_back(criterion_character_bound());
  out.push_back(criterion_determinism(options.cli_path));
  return out;
}

}  // namespace paley
