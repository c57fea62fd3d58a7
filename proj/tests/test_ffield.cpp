#include <doctest.h>

#include <set>

#include "paley/error.hpp"
#include "paley/ffield.hpp"

using namespace paley;

namespace {

// Every field with q <= 169 reachable without an explicit modulus.
std::vector<FiniteField> small_fields() {
  std::vector<FiniteField> out;
  for (uint32_t q : {3, 5, 7, 9, 11, 13, 17, 25, 27, 49, 81, 121, 125, 169})
    out.push_back(FiniteField::from_order(q));
  return out;
}

}  // namespace

TEST_CASE("construction and validation") {
  const FiniteField f13 = FiniteField::make(13, 1);
  CHECK(f13.q() == 13);
  std::set<uint32_t> squares;
  for (uint32_t x = 1; x < 13; ++x) squares.insert(f13.mul(x, x));
  CHECK(squares == std::set<uint32_t>{1, 3, 4, 9, 10, 12});

  const FiniteField f9 = FiniteField::make(3, 2, {{1, 0, 1}});
  CHECK(f9.q() == 9);
  CHECK(f9.q() % 8 == 1);

  try {
    FiniteField::make(2, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvenCharacteristic);
  }

  try {
    FiniteField::make(15, 1);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }

  // x^2 - 1 factors over F_3
  try {
    FiniteField::make(3, 2, {{2, 0, 1}});
    FAIL("expected ReduciblePolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReduciblePolynomial);
  }

  try {
    FiniteField::make(3, 5);
    FAIL("expected NoBuiltinPolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoBuiltinPolynomial);
  }
}

TEST_CASE("from_order classifies non prime powers") {
  try {
    FiniteField::from_order(12);
    FAIL("expected NotPrimePower");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrimePower);
  }
  try {
    FiniteField::from_order(8);
    FAIL("expected EvenCharacteristic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvenCharacteristic);
  }
  const FiniteField f9 = FiniteField::from_order(9);
  CHECK(f9.p() == 3);
  CHECK(f9.e() == 2);
}

TEST_CASE("arithmetic in F_13") {
  const FiniteField f = FiniteField::make(13, 1);
  CHECK(f.mul(5, 8) == 1);
  CHECK(f.inv(5) == 8);
  CHECK(f.pow(2, 6) == 12);
  for (uint32_t x = 0; x < 13; ++x) CHECK(f.add(x, 0) == x);
  try {
    f.inv(0);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("quadratic character values") {
  const FiniteField f = FiniteField::make(13, 1);
  CHECK(f.eta(1) == 1);
  CHECK(f.eta(2) == -1);
  CHECK(f.eta(3) == 1);
  CHECK(f.eta(0) == 0);
  // eta agrees with the exponentiation definition
  for (uint32_t x = 1; x < 13; ++x) {
    const uint32_t e = f.pow(x, 6);
    CHECK(f.eta(x) == (e == 1 ? 1 : -1));
  }
}

TEST_CASE("character laws across all small fields") {
  for (const FiniteField& f : small_fields()) {
    CAPTURE(f.q());
    CHECK(f.eta(1) == 1);
    // multiplicativity, exhaustive
    for (uint32_t x = 1; x < f.q(); ++x)
      for (uint32_t y = x; y < f.q(); ++y)
        CHECK(f.eta(f.mul(x, y)) == f.eta(x) * f.eta(y));
    // eta(-1) tracks q mod 4
    CHECK(f.eta(f.neg(1)) == (f.q() % 4 == 1 ? 1 : -1));
    // exactly (q-1)/2 squares
    uint32_t squares = 0;
    for (uint32_t x = 1; x < f.q(); ++x) squares += f.eta(x) == 1;
    CHECK(squares == (f.q() - 1) / 2);
  }
}

TEST_CASE("square roots") {
  const FiniteField f = FiniteField::make(13, 1);
  CHECK(f.sqrt(4) == 2);  // roots are 2 and 11; 2 is canonical
  CHECK(f.sqrt(0) == 0);
  try {
    f.sqrt(2);
    FAIL("expected NonResidue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonResidue);
  }

  for (const FiniteField& g : small_fields()) {
    CAPTURE(g.q());
    for (uint32_t x = 1; x < g.q(); ++x) {
      if (g.eta(x) != 1) continue;
      const uint32_t r = g.sqrt(x);
      CHECK(g.mul(r, r) == x);
      CHECK(r <= g.neg(r));  // canonical smaller root
    }
    for (uint32_t x = 1; x < g.q(); ++x) CHECK(g.inv(g.inv(x)) == x);
  }
}

TEST_CASE("large prime field uses the non-table path") {
  // 1048589 = 1 mod 4 and exceeds the table limit of 2^20.
  const FiniteField f = FiniteField::make(1048589, 1);
  for (uint32_t x : {2u, 3u, 123456u, 1048588u}) {
    const uint32_t s = f.mul(x, x);
    CHECK(f.eta(s) == 1);
    const uint32_t r = f.sqrt(s);
    CHECK(f.mul(r, r) == s);
    CHECK(r == std::min(x, f.neg(x)));
  }
  uint32_t nonsquares = 0;
  for (uint32_t x = 1; x <= 100; ++x) nonsquares += f.eta(x) == -1;
  CHECK(nonsquares > 0);
}

TEST_CASE("user-supplied moduli beyond the built-in table") {
  // F_243 with x^5 + 2x + 1
  const FiniteField f = FiniteField::make(3, 5, {{1, 2, 0, 0, 0, 1}});
  CHECK(f.q() == 243);
  uint32_t squares = 0;
  for (uint32_t x = 1; x < f.q(); ++x) squares += f.eta(x) == 1;
  CHECK(squares == 121);
  for (uint32_t x = 1; x < f.q(); ++x) CHECK(f.mul(x, f.inv(x)) == 1);

  // reducible without roots: (x^2+1)(x^2+x+2) over F_3; only the
  // quadratic-factor search can reject it
  try {
    FiniteField::make(3, 4, {{2, 1, 0, 1, 1}});
    FAIL("expected ReduciblePolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReduciblePolynomial);
  }
}

TEST_CASE("extension field coefficients round-trip") {
  const FiniteField f = FiniteField::from_order(81);
  for (uint32_t x = 0; x < 81; ++x) {
    const auto c = f.coeffs(x);
    CHECK(c.size() == 4);
    CHECK(f.from_coeffs(c) == x);
  }
  // the prime field sits at indices 0..p-1
  CHECK(f.coeffs(2) == std::vector<uint32_t>{2, 0, 0, 0});
  CHECK(f.modulus() == std::vector<uint32_t>{2, 1, 0, 0, 1});
}
