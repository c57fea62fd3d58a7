#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "paley/paley_graph.hpp"
#include "paley/parity.hpp"

namespace paley {

struct Budget {
  uint64_t subset_steps = 200'000'000;  // exhaustive enumeration cap
  uint64_t ak_terms = 10'000'000;       // character-sum term cap
};

struct ParityCounts {
  uint64_t even = 0, odd = 0, mixed = 0;
  uint64_t total() const { return even + odd + mixed; }
  ParityCounts& operator+=(const ParityCounts& o) {
    even += o.even;
    odd += o.odd;
    mixed += o.mixed;
    return *this;
  }
};

// min(C(n, k), cap), computed without overflow.
uint64_t binom_u64(uint64_t n, uint64_t k, uint64_t cap = UINT64_MAX);
mpz_class binom_mpz(uint64_t n, uint64_t k);

// r-combinations in colexicographic order: {a_0 < ... < a_{r-1}} has
// rank sum_i C(a_i, i+1).
std::vector<uint32_t> colex_unrank(uint64_t rank, uint32_t r);
// Advances to the successor within [0, n); false after the last one.
bool colex_next(std::span<uint32_t> idx, uint32_t n);

// Exact parity census over all r-subsets, walked in colexicographic
// order with incremental parity updates. parity_rows must be the
// adjacency matrix for undirected graphs and its transpose for digraphs
// (the running parity vector accumulates columns of the adjacency, which
// yields out-degree parities). Workers split the colex rank range.
ParityCounts exhaustive_parity_census(const Gf2Matrix& parity_rows, uint32_t r,
                                      uint64_t budget_steps, unsigned workers = 1);

// Classification hits over `samples` uniform r-subsets, draw i depending
// only on (seed, i). Works on the plain adjacency for both kinds.
ParityCounts sampled_parity_census(const Gf2Matrix& adj, uint32_t r,
                                   uint64_t samples, uint64_t seed,
                                   unsigned workers = 1);

enum class CensusMode { exhaustive, sampled };

struct CensusRow {
  uint32_t r = 0;
  CensusMode mode = CensusMode::exhaustive;
  ParityCounts counts;  // exact counts, or raw hits in sampled mode
  mpz_class total;      // C(q, r)
  uint64_t samples = 0;
  bool truncated = false;  // sampled rows are estimates, not full counts
};

struct CensusReport {
  uint32_t q = 0;
  PaleyKind kind = PaleyKind::graph;
  CensusMode mode = CensusMode::exhaustive;
  uint64_t samples = 0;
  uint64_t seed = 0;
  std::vector<CensusRow> rows;
};

CensusReport run_census(const PaleyStructure& p, uint32_t r_min, uint32_t r_max,
                        CensusMode mode, uint64_t samples, uint64_t seed,
                        const Budget& budget = {}, unsigned workers = 1);

// Signed sum over all k-subsets U of F_q \ W of the product of eta over
// f_W(u) = prod_{w in W} (u - w); f is 1 when W is empty.
mpz_class character_sum_A(const FiniteField& f, std::span<const uint32_t> w_set,
                          uint32_t k, uint64_t budget_terms = 10'000'000);

// Number of all-even r-subsets recovered purely from character sums:
// 2^-r * sum_k (-1)^{k(r-k)} sum_{|W|=r-k} A_k(W). Enforced to q <= 17,
// r <= 5; must match the adjacency-based exhaustive count.
mpz_class reconstruct_Nr(const FiniteField& f, uint32_t r,
                         uint64_t budget_terms = 10'000'000);

struct WeilReport {
  uint64_t lhs = 0;   // |sum_c eta(f_W(c)^n)|
  double bound = 0;   // (|W|-1) sqrt(q)
  bool ok = false;    // exact comparison lhs^2 <= (|W|-1)^2 q
};

// Direct summation of the quadratic-character sum of f_W(x)^n for odd n,
// checked against the (|W|-1) sqrt(q) bound. Requires |W| >= 2.
WeilReport weil_check(const FiniteField& f, std::span<const uint32_t> w_set,
                      uint32_t n_power);

struct BoundReport {
  uint64_t n = 0, theta = 0;
  mpq_class bound_value;    // C(n, n-theta) / C(n - ceil(theta/2), n-theta)
  double entropy_rhs = 0;   // 2^((H(alpha/2) - alpha) n), alpha = theta/n
};

// Lower bound for the number of even induced subgraphs with order in
// [theta/2, theta] of any n-vertex graph.
BoundReport giant_lower_bound(uint64_t n, uint64_t theta);

double binary_entropy(double x);  // DomainError outside (0, 1)

// All distinct primary parts: for every theta-subset W of V(G), every
// co-even part of G[W] with size >= theta/2. n <= 14 enforced. The
// result size is >= giant_lower_bound(n, theta).
std::vector<BitVec> theta_set(const SimpleGraph& g, uint32_t theta,
                              uint64_t budget_steps = 200'000'000);

}  // namespace paley
