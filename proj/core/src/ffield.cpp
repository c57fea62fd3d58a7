#include "paley/ffield.hpp"

#include <algorithm>
#include <string>

#include "paley/error.hpp"

namespace paley {

namespace {

constexpr uint32_t kTableLimit = uint32_t(1) << 20;

// Built-in monic irreducible moduli (coefficients low to high) for every
// proper prime power up to 169.
struct BuiltinModulus {
  uint32_t q;
  std::vector<uint32_t> coeffs;
};

const std::vector<BuiltinModulus>& builtin_moduli() {
  static const std::vector<BuiltinModulus> table = {
      {9, {1, 0, 1}},         // x^2 + 1 over F_3
      {25, {2, 0, 1}},        // x^2 + 2 over F_5
      {27, {1, 2, 0, 1}},     // x^3 + 2x + 1 over F_3
      {49, {1, 0, 1}},        // x^2 + 1 over F_7
      {81, {2, 1, 0, 0, 1}},  // x^4 + x + 2 over F_3
      {121, {9, 0, 1}},       // x^2 + 9 over F_11
      {125, {3, 3, 0, 1}},    // x^3 + 3x + 3 over F_5
      {169, {2, 0, 1}},       // x^2 + 2 over F_13
  };
  return table;
}

// Polynomials over F_p as coefficient vectors, low degree first,
// normalized to have no trailing zeros.
using Poly = std::vector<uint32_t>;

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  normalize(a);
  while (a.size() >= m.size()) {
    // m is monic, so the leading coefficient divides directly.
    uint64_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      uint64_t v = a[shift + i] + uint64_t(p) * p - lead * m[i] % p;
      a[shift + i] = uint32_t(v % p);
    }
    normalize(a);
  }
  return a;
}

// Exhaustive divisor search: a reducible monic polynomial of degree e has
// a monic factor of degree in [1, e/2]. Fine at desk scale (e <= 6 for
// the built-in table, sqrt(q) candidates in general).
bool is_irreducible(const Poly& m, uint32_t p) {
  const std::size_t e = m.size() - 1;
  if (e == 1) return true;
  if (e <= 3) {
    // Degree 2 or 3: irreducible iff no root in F_p.
    for (uint32_t x = 0; x < p; ++x) {
      uint64_t v = 0, xp = 1;
      for (uint32_t c : m) {
        v = (v + c * xp) % p;
        xp = xp * x % p;
      }
      if (v == 0) return false;
    }
    return true;
  }
  // Trial division by every monic polynomial of degree 1..e/2.
  for (std::size_t d = 1; d <= e / 2; ++d) {
    uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = uint32_t(t % p);
        t /= p;
      }
      div[d] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField FiniteField::make(uint32_t p, uint32_t e,
                              std::optional<std::vector<uint32_t>> modulus) {
  if (p == 2) fail(ErrorKind::EvenCharacteristic, "characteristic 2");
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) fail(ErrorKind::DomainError, "extension degree must be >= 1");
  if (e > 8) fail(ErrorKind::DomainError, "extension degree > 8 is unsupported");

  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > (uint64_t(1) << 31))
      fail(ErrorKind::DomainError, "q > 2^31 is unsupported");
  }

  FiniteField f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = uint32_t(q);

  if (e > 1) {
    if (!modulus) {
      const auto& table = builtin_moduli();
      auto it = std::find_if(table.begin(), table.end(),
                             [&](const BuiltinModulus& b) { return b.q == q; });
      if (it == table.end())
        fail(ErrorKind::NoBuiltinPolynomial,
             "no built-in modulus for q = " + std::to_string(q) +
                 "; supply one explicitly");
      modulus = it->coeffs;
    }
    Poly m = *modulus;
    for (auto& c : m) c %= p;
    normalize(m);
    if (m.size() != e + 1 || m.back() != 1)
      fail(ErrorKind::DomainError, "modulus must be monic of degree e");
    if (!is_irreducible(m, p))
      fail(ErrorKind::ReduciblePolynomial, "modulus is reducible over F_p");
    f.modulus_ = m;
    // reduction_[i] = coefficients of x^(e+i) mod m, for i = 0..e-2.
    f.reduction_.assign(std::size_t(e - 1) * e, 0);
    Poly xe(e + 1, 0);
    xe[e] = 1;
    Poly cur = poly_mod(xe, m, p);
    for (uint32_t i = 0; i + 1 < e; ++i) {
      cur.resize(e, 0);
      for (uint32_t j = 0; j < e; ++j) f.reduction_[std::size_t(i) * e + j] = cur[j];
      // multiply by x and reduce using the degree-e row just computed
      Poly nxt(e + 1, 0);
      for (uint32_t j = 0; j < e; ++j) nxt[j + 1] = cur[j];
      cur = poly_mod(nxt, m, p);
    }
  }

  f.build_tables();
  return f;
}

FiniteField FiniteField::from_order(uint64_t q) {
  if (q < 2) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  uint64_t rest = q;
  uint32_t e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (p == 2) fail(ErrorKind::EvenCharacteristic, "characteristic 2");
  return make(uint32_t(p), e);
}

void FiniteField::build_tables() {
  if (q_ > kTableLimit) return;
  eta_table_.assign(q_, -1);
  eta_table_[0] = 0;
  sqrt_table_.assign(q_, 0);
  for (uint32_t x = 1; x < q_; ++x) {
    uint32_t s = mul(x, x);
    if (eta_table_[s] != 1 || x < sqrt_table_[s]) sqrt_table_[s] = x;
    eta_table_[s] = 1;
  }
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
  if (e_ == 1) {
    uint64_t s = uint64_t(a) + b;
    return uint32_t(s >= q_ ? s - q_ : s);
  }
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t ca = a % p_, cb = b % p_;
    a /= p_;
    b /= p_;
    uint32_t s = ca + cb;
    if (s >= p_) s -= p_;
    r += s * mult;
    mult *= p_;
  }
  return r;
}

uint32_t FiniteField::neg(uint32_t a) const {
  if (e_ == 1) return a == 0 ? 0 : q_ - a;
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t c = a % p_;
    a /= p_;
    r += (c == 0 ? 0 : p_ - c) * mult;
    mult *= p_;
  }
  return r;
}

uint32_t FiniteField::sub(uint32_t a, uint32_t b) const {
  return add(a, neg(b));
}

uint32_t FiniteField::mul_ext(uint32_t a, uint32_t b) const {
  // Schoolbook product of the coefficient vectors, then fold the high
  // part through the precomputed x^(e+i) rows.
  uint32_t ac[8], bc[8];
  uint64_t prod[15] = {0};
  for (uint32_t i = 0; i < e_; ++i) {
    ac[i] = a % p_;
    a /= p_;
    bc[i] = b % p_;
    b /= p_;
  }
  for (uint32_t i = 0; i < e_; ++i) {
    if (!ac[i]) continue;
    for (uint32_t j = 0; j < e_; ++j) prod[i + j] += uint64_t(ac[i]) * bc[j];
  }
  uint64_t low[8];
  for (uint32_t i = 0; i < e_; ++i) low[i] = prod[i] % p_;
  for (uint32_t i = e_; i <= 2 * (e_ - 1); ++i) {
    uint64_t c = prod[i] % p_;
    if (!c) continue;
    const uint32_t* row = &reduction_[std::size_t(i - e_) * e_];
    for (uint32_t j = 0; j < e_; ++j) low[j] += c * row[j];
  }
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    r += uint32_t(low[i] % p_) * mult;
    mult *= p_;
  }
  return r;
}

uint32_t FiniteField::mul(uint32_t a, uint32_t b) const {
  if (e_ == 1) return uint32_t(uint64_t(a) * b % q_);
  return mul_ext(a, b);
}

uint32_t FiniteField::pow(uint32_t a, uint64_t n) const {
  uint32_t r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

uint32_t FiniteField::inv(uint32_t a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

int FiniteField::eta(uint32_t a) const {
  if (!eta_table_.empty()) return eta_table_[a];
  if (a == 0) return 0;
  uint32_t v = pow(a, (q_ - 1) / 2);
  return v == 1 ? 1 : -1;
}

uint32_t FiniteField::sqrt(uint32_t a) const {
  if (a == 0) return 0;
  if (eta(a) != 1) fail(ErrorKind::NonResidue, "not a square");
  if (!sqrt_table_.empty()) return sqrt_table_[a];
  return sqrt_tonelli(a);
}

uint32_t FiniteField::sqrt_tonelli(uint32_t a) const {
  uint32_t r;
  if (q_ % 4 == 3) {
    r = pow(a, (q_ + 1) / 4);
  } else {
    // Tonelli-Shanks with the canonically smallest nonresidue as helper.
    uint64_t s = q_ - 1;
    uint32_t t = 0;
    while (s % 2 == 0) {
      s /= 2;
      ++t;
    }
    uint32_t z = 2;
    while (eta(z) != -1) ++z;
    uint32_t c = pow(z, s);
    r = pow(a, (s + 1) / 2);
    uint32_t u = pow(a, s);
    uint32_t m = t;
    while (u != 1) {
      uint32_t i = 0;
      uint32_t v = u;
      while (v != 1) {
        v = mul(v, v);
        ++i;
      }
      uint32_t b = c;
      for (uint32_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      r = mul(r, b);
      c = mul(b, b);
      u = mul(u, c);
      m = i;
    }
  }
  if (mul(r, r) != a)
    fail(ErrorKind::DomainError, "square root verification failed");
  return std::min(r, neg(r));
}

std::vector<uint32_t> FiniteField::coeffs(uint32_t a) const {
  std::vector<uint32_t> c(e_);
  for (uint32_t i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

uint32_t FiniteField::from_coeffs(std::span<const uint32_t> c) const {
  if (c.size() != e_) fail(ErrorKind::DomainError, "coefficient count != e");
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    if (c[i] >= p_) fail(ErrorKind::DomainError, "coefficient out of range");
    r += c[i] * mult;
    mult *= p_;
  }
  return r;
}

}  // namespace paley
