#include <doctest.h>

#include "paley/error.hpp"
#include "paley/random_model.hpp"

using namespace paley;

namespace {

mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("closed forms at p = 1/2") {
  CHECK(expected_graph(10, frac(1, 2), 4) == frac(105, 4));    // 26.25
  CHECK(expected_graph(12, frac(1, 2), 4) == frac(495, 8));    // 61.875
  CHECK(expected_digraph(10, frac(1, 2), 4) == frac(105, 8));  // 13.125
  CHECK(expected_digraph(12, frac(1, 2), 4) == frac(495, 16)); // 30.9375

  // at p = 1/2 the indicator sums collapse exactly; the digraph form
  // needs r >= 2 (at r = 1 the inner power is empty and the value is n)
  for (uint32_t n : {6u, 9u, 15u}) {
    for (uint32_t r = 1; r <= 6; ++r) {
      const mpq_class half = frac(1, 2);
      CHECK(expected_graph(n, half, r) ==
            mpq_class(binom_mpz(n, r)) / mpq_class(mpz_class(1) << (r - 1)));
      if (r >= 2)
        CHECK(expected_digraph(n, half, r) ==
              mpq_class(binom_mpz(n, r)) / mpq_class(mpz_class(1) << r));
    }
  }
}

TEST_CASE("closed forms at general rationals") {
  // r = 1: every vertex is an even subgraph on its own
  CHECK(expected_graph(10, frac(1, 3), 1) == 10);
  CHECK(expected_digraph(10, frac(2, 7), 1) == 10);

  // r = 2 collapses to C(n,2)(1 - p)
  CHECK(expected_graph(8, frac(1, 1000), 2) ==
        mpq_class(binom_mpz(8, 2)) * frac(999, 1000));

  CHECK(expected_digraph(6, frac(1, 4), 3) == frac(625, 128));

  try {
    expected_graph(10, frac(0, 1), 2);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  try {
    expected_graph(10, frac(1, 2), 11);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
}

TEST_CASE("indicator sum stays near 2 for large r") {
  const mpq_class p = frac(3, 10);
  const mpq_class lo = frac(19, 10), hi = frac(21, 10);
  for (uint32_t r : {30u, 31u, 60u, 127u, 200u}) {
    const mpq_class sum = parity_indicator_sum(p, r);
    CAPTURE(r);
    CHECK(sum >= lo);
    CHECK(sum <= hi);
  }
  // exact value 2 at p = 1/2
  CHECK(parity_indicator_sum(frac(1, 2), 57) == 2);
}

TEST_CASE("monte carlo matches the closed forms") {
  const RandomModelReport g =
      monte_carlo(12, frac(1, 2), 4, 20000, 11, false);
  CHECK(g.mc_stderr > 0);
  CHECK(std::abs(g.mc_mean - g.closed_form.get_d()) <= 3 * g.mc_stderr);
  CHECK_FALSE(g.two_level);

  const RandomModelReport d =
      monte_carlo(12, frac(3, 10), 4, 20000, 12, true);
  CHECK(std::abs(d.mc_mean - d.closed_form.get_d()) <= 3 * d.mc_stderr);
}

TEST_CASE("monte carlo determinism") {
  const RandomModelReport a = monte_carlo(10, frac(1, 2), 3, 5000, 5, false);
  const RandomModelReport b = monte_carlo(10, frac(1, 2), 3, 5000, 5, false);
  CHECK(a.mc_mean == b.mc_mean);
  CHECK(a.mc_stderr == b.mc_stderr);
  const RandomModelReport c =
      monte_carlo(10, frac(1, 2), 3, 5000, 5, false, {}, 4);
  CHECK(a.mc_mean == c.mc_mean);
  CHECK(a.mc_stderr == c.mc_stderr);
  const RandomModelReport other = monte_carlo(10, frac(1, 2), 3, 5000, 6, false);
  CHECK(a.mc_mean != other.mc_mean);
}

TEST_CASE("standard error shrinks with more trials") {
  const RandomModelReport small = monte_carlo(10, frac(2, 5), 4, 3000, 9, false);
  const RandomModelReport big = monte_carlo(10, frac(2, 5), 4, 9000, 9, false);
  CHECK(small.mc_stderr / big.mc_stderr >= 1.6);
}

TEST_CASE("two-level sampling engages for large subset spaces") {
  // C(40, 6) is about 3.8 million, beyond the exact per-trial walk
  const RandomModelReport rep = monte_carlo(40, frac(1, 2), 6, 400, 21, false);
  CHECK(rep.two_level);
  CHECK(rep.subset_samples == 4096);
  CHECK(std::abs(rep.mc_mean - rep.closed_form.get_d()) <= 4 * rep.mc_stderr);

  Budget tiny;
  tiny.subset_steps = 1000;
  try {
    monte_carlo(12, frac(1, 2), 4, 20000, 11, false, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}
