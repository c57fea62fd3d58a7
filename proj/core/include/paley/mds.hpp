#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "paley/ffield.hpp"

namespace paley {

// Product over j != i of (alpha_i - alpha_j); nonzero by distinctness.
uint32_t grs_delta(const FiniteField& f, std::span<const uint32_t> alphas,
                   std::size_t i);

enum class Feasibility {
  even_length_ok,  // n even and all eta(delta_i) equal
  odd_length_ok,   // n odd and eta(-delta_i) = +1 for all i
  infeasible,
};

const char* to_string(Feasibility fs);

// EmptySet on an empty evaluation set.
Feasibility feasibility(const FiniteField& f, std::span<const uint32_t> alphas);

// Scaled polynomial-evaluation code: row j of the generator is
// (v_i alpha_i^j)_i for j = 0..k-1. The extended variant appends the
// leading-coefficient column (1 in row k-1, 0 elsewhere).
struct GrsCode {
  uint32_t q = 0;
  uint32_t n_eval = 0;  // number of evaluation points
  uint32_t k = 0;
  bool extended = false;
  uint32_t lambda = 1;  // scale used for the weight vector
  std::vector<uint32_t> alphas;
  std::vector<uint32_t> v;
  std::vector<uint32_t> generator;  // k * length(), row-major

  uint32_t length() const { return n_eval + (extended ? 1 : 0); }
  uint32_t gen(uint32_t row, uint32_t col) const {
    return generator[std::size_t(row) * length() + col];
  }
};

// Self-dual code on the given evaluation set: k = n/2 for even n, else
// the extended code with k = (n+1)/2. The weight vector is
// v_i = sqrt(lambda / delta_i) (even n, lambda = 1 or the smallest
// nonsquare) or v_i = sqrt(lambda / -delta_i) with lambda running over
// F_q^* in canonical order until the generator verifies (odd n). The
// result is always verified before return.
GrsCode construct_self_dual(const FiniteField& f,
                            std::span<const uint32_t> alphas);

// True iff G G^T = 0 over F_q and rank(G) = k = length/2.
bool verify_self_dual(const FiniteField& f, const GrsCode& code);

enum class MdsStrategy { automatic, codewords, columns };

// True iff the minimum distance equals length - k + 1. The automatic
// strategy enumerates codewords when q^k <= 10^7, otherwise checks that
// every k-subset of generator columns is invertible when
// C(length, k) <= 10^6. TooLarge when neither fits.
bool verify_mds(const FiniteField& f, const GrsCode& code,
                MdsStrategy strategy = MdsStrategy::automatic);

struct OmegaEnumeration {
  uint32_t n = 0;
  mpz_class count;                         // exact number of feasible sets
  std::vector<std::vector<uint32_t>> sets; // first list_cap witnesses
  bool list_truncated = false;
};

// All n-subsets of F_q passing the self-dual feasibility criterion (the
// families behind length-n and extended length-(n+1) codes for even and
// odd n respectively), in colex order.
OmegaEnumeration enumerate_omega(const FiniteField& f, uint32_t n,
                                 uint64_t budget_steps = 200'000'000,
                                 uint64_t list_cap = UINT64_MAX,
                                 unsigned workers = 1);

struct CoevenPairCensus {
  mpz_class count;
  std::string method;  // "scan" (q <= 17) or "formula"
  std::vector<std::vector<uint32_t>> witnesses;
};

// Even-cardinality sets S, 2 <= |S| <= q-1, with eta(delta) = +1 on all
// of S and on all of its complement: 2^((q-1)/2) - 1 of them when
// q = 1 mod 8, none otherwise. Exhaustive 2^q scan for q <= 17.
CoevenPairCensus coeven_pair_census(const FiniteField& f,
                                    uint64_t witness_cap = 16);

}  // namespace paley
