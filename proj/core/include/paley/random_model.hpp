#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "paley/census.hpp"

namespace paley {

// Exact expected number of all-even induced subgraphs of order r in
// G(n, p): 2^-r C(n, r) sum_k C(r, k) (1-2p)^{k(r-k)}.
mpq_class expected_graph(uint32_t n, const mpq_class& p, uint32_t r);

// Digraph model (every ordered pair an arc independently with
// probability p): 2^-r C(n, r) (1 + (1-2p)^{r-1})^r.
mpq_class expected_digraph(uint32_t n, const mpq_class& p, uint32_t r);

// The inner sum of expected_graph on its own; exactly 2 at p = 1/2 and
// 2 + o(1) as r grows for any fixed p in (0, 1).
mpq_class parity_indicator_sum(const mpq_class& p, uint32_t r);

struct RandomModelReport {
  uint32_t n = 0, r = 0;
  bool digraph = false;
  mpq_class p;
  mpq_class closed_form;
  uint64_t trials = 0;
  uint64_t seed = 0;
  double mc_mean = 0;
  double mc_stderr = 0;
  bool two_level = false;       // subsets sampled inside each trial
  uint64_t subset_samples = 0;  // per-trial subset draws in two-level mode
};

// Mean count of all-even order-r induced sub(di)graphs over `trials`
// sampled graphs. Exact per-trial counts via the census subset walk when
// C(n, r) <= 10^6, otherwise a two-level estimate sampling subsets
// within each trial. Deterministic in (seed, trial index) for any worker
// count.
RandomModelReport monte_carlo(uint32_t n, const mpq_class& p, uint32_t r,
                              uint64_t trials, uint64_t seed, bool digraph,
                              const Budget& budget = {}, unsigned workers = 1);

}  // namespace paley
