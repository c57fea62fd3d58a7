#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace paley {

// Arithmetic in F_q, q = p^e with p an odd prime.
//
// Elements are canonical indices in [0, q): the element with coefficient
// vector (c_0, ..., c_{e-1}) over F_p (low degree first) has index
// sum_i c_i * p^i. The prime field therefore occupies indices 0..p-1 and
// the index order is the canonical total order used everywhere (subset
// enumeration, JSON output, tie-breaking of square roots).
//
// For e > 1 the field is F_p[x]/(m) with m monic irreducible of degree e;
// irreducibility is verified at construction. A built-in modulus table
// covers q in {9, 25, 27, 49, 81, 121, 125, 169}; other extensions need
// an explicit modulus.
class FiniteField {
 public:
  static FiniteField make(uint32_t p, uint32_t e,
                          std::optional<std::vector<uint32_t>> modulus = {});
  // Factors q = p^e. Errors: NotPrimePower, EvenCharacteristic.
  static FiniteField from_order(uint64_t q);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  // Coefficients of the modulus, low to high, length e+1; empty for e = 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // DivisionByZero on a = 0
  uint32_t pow(uint32_t a, uint64_t n) const;

  // Quadratic character: +1 on nonzero squares, -1 on nonsquares, 0 at 0.
  int eta(uint32_t a) const;
  // Canonically smaller square root; sqrt(0) = 0. NonResidue if eta = -1.
  uint32_t sqrt(uint32_t a) const;

  std::vector<uint32_t> coeffs(uint32_t a) const;
  uint32_t from_coeffs(std::span<const uint32_t> c) const;

  uint32_t one_index() const { return 1; }
  uint32_t minus_one_index() const { return p_ - 1; }

 private:
  FiniteField() = default;
  void build_tables();
  uint32_t mul_ext(uint32_t a, uint32_t b) const;
  uint32_t sqrt_tonelli(uint32_t a) const;

  uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;       // empty when e == 1
  std::vector<uint32_t> reduction_;     // x^(e+i) mod m, rows i = 0..e-2
  std::vector<int8_t> eta_table_;       // full table when q <= 2^20
  std::vector<uint32_t> sqrt_table_;    // canonical roots when q <= 2^20
};

bool is_prime(uint64_t n);

}  // namespace paley
