#include <doctest.h>

#include <set>

#include "paley/error.hpp"
#include "paley/gf2.hpp"
#include "paley/rng.hpp"

using namespace paley;

namespace {

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, uint64_t seed) {
  CounterRng rng(seed, 0);
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.next() & 1) m.set(r, c);
  return m;
}

Gf2Matrix drop_row(const Gf2Matrix& m, std::size_t row) {
  Gf2Matrix out(m.rows() - 1, m.cols());
  for (std::size_t r = 0, o = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) out.set(o, c);
    ++o;
  }
  return out;
}

}  // namespace

TEST_CASE("rank basics") {
  Gf2Matrix id(7, 7);
  for (std::size_t i = 0; i < 7; ++i) id.set(i, i);
  CHECK(id.rank() == 7);
  CHECK(Gf2Matrix(5, 9).rank() == 0);
}

TEST_CASE("rank properties on random matrices") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Gf2Matrix m = random_matrix(17, 23, seed);
    CHECK(m.rank() == m.transposed().rank());
    const std::size_t r = m.rank();
    const std::size_t rd = drop_row(m, seed % m.rows()).rank();
    CHECK(rd <= r);
    CHECK(r <= rd + 1);
  }
}

TEST_CASE("affine solve") {
  // identity: unique solution b
  Gf2Matrix id(6, 6);
  for (std::size_t i = 0; i < 6; ++i) id.set(i, i);
  BitVec b(6);
  b.set(1);
  b.set(4);
  const AffineSolutionSpace s = solve_affine(id, b);
  REQUIRE(s.consistent());
  CHECK(*s.particular == b);
  CHECK(s.dimension() == 0);

  // zero row with b = 1: inconsistent
  Gf2Matrix zero(1, 4);
  BitVec one(1);
  one.set(0);
  CHECK_FALSE(solve_affine(zero, one).consistent());

  // dimension + rank = cols whenever consistent
  for (uint64_t seed = 100; seed < 120; ++seed) {
    const Gf2Matrix m = random_matrix(12, 18, seed);
    const AffineSolutionSpace sp = solve_affine(m, BitVec(12));
    REQUIRE(sp.consistent());
    CHECK(sp.dimension() + m.rank() == m.cols());
    for (const BitVec& v : sp.kernel) CHECK(m.mul(v).none());
  }
}

TEST_CASE("solution enumeration") {
  // dimension 0: exactly the particular solution
  Gf2Matrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i);
  BitVec b(3);
  b.set(2);
  auto en = enumerate_solutions(solve_affine(id, b), 100);
  CHECK(en.solutions.size() == 1);
  CHECK_FALSE(en.truncated);
  CHECK(en.solutions[0] == b);

  // dimension 3: all 8 solutions, distinct, all valid
  Gf2Matrix m(2, 5);
  m.set(0, 0);
  m.set(0, 3);
  m.set(1, 1);
  BitVec rhs(2);
  rhs.set(0);
  const AffineSolutionSpace sp = solve_affine(m, rhs);
  REQUIRE(sp.consistent());
  REQUIRE(sp.dimension() == 3);
  en = enumerate_solutions(sp, 100);
  CHECK(en.solutions.size() == 8);
  CHECK_FALSE(en.truncated);
  std::set<std::vector<uint32_t>> seen;
  for (const BitVec& x : en.solutions) {
    CHECK(m.mul(x) == rhs);
    seen.insert(x.ones());
  }
  CHECK(seen.size() == 8);

  // dimension 50 with cap 1024: truncated, still distinct and valid
  Gf2Matrix wide(1, 50);
  const AffineSolutionSpace big = solve_affine(wide, BitVec(1));
  REQUIRE(big.dimension() == 50);
  en = enumerate_solutions(big, 1024);
  CHECK(en.solutions.size() == 1024);
  CHECK(en.truncated);
  seen.clear();
  for (const BitVec& x : en.solutions) seen.insert(x.ones());
  CHECK(seen.size() == 1024);

  // no particular solution
  Gf2Matrix zero(1, 4);
  BitVec one(1);
  one.set(0);
  try {
    enumerate_solutions(solve_affine(zero, one), 10);
    FAIL("expected NoParticularSolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoParticularSolution);
  }
}

TEST_CASE("enumerated solutions are exactly the brute-force set") {
  for (uint64_t seed = 300; seed < 320; ++seed) {
    const Gf2Matrix m = random_matrix(6, 8, seed);
    // build a consistent right-hand side from a random vector
    CounterRng rng(seed, 1);
    BitVec x0(8);
    for (std::size_t i = 0; i < 8; ++i)
      if (rng.next() & 1) x0.set(i);
    const BitVec b = m.mul(x0);

    std::set<std::vector<uint32_t>> brute;
    for (uint32_t mask = 0; mask < 256; ++mask) {
      BitVec x(8);
      for (std::size_t i = 0; i < 8; ++i)
        if ((mask >> i) & 1) x.set(i);
      if (m.mul(x) == b) brute.insert(x.ones());
    }

    const AffineSolutionSpace space = solve_affine(m, b);
    REQUIRE(space.consistent());
    const auto en = enumerate_solutions(space, 1 << 10);
    REQUIRE_FALSE(en.truncated);
    std::set<std::vector<uint32_t>> got;
    for (const BitVec& x : en.solutions) got.insert(x.ones());
    CHECK(got == brute);
  }
}
