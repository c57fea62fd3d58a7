#include <doctest.h>

#include <cmath>
#include <set>

#include "paley/census.hpp"
#include "paley/error.hpp"
#include "paley/rng.hpp"
#include "paley/serialize.hpp"

using namespace paley;

namespace {

PaleyStructure make_paley(uint32_t q) {
  return PaleyStructure(FiniteField::from_order(q));
}

const CensusRow& row_for(const CensusReport& rep, uint32_t r) {
  for (const CensusRow& row : rep.rows)
    if (row.r == r) return row;
  REQUIRE(false);
  return rep.rows.front();
}

// Independent oracle for the signed character sums: with a = #(eta = +1)
// and b = #(eta = -1) among the eligible points, the sum over k-subsets
// collapses to sum_j C(a, j) C(b, k-j) (-1)^{k-j}.
mpz_class character_sum_by_sign_count(const FiniteField& f,
                                      const std::vector<uint32_t>& w,
                                      uint32_t k) {
  int64_t pos = 0, neg = 0;
  for (uint32_t u = 0; u < f.q(); ++u) {
    bool in_w = false;
    uint32_t prod = 1;
    for (uint32_t x : w) {
      if (x == u) in_w = true;
      else prod = f.mul(prod, f.sub(u, x));
    }
    if (in_w) continue;
    (f.eta(prod) == 1 ? pos : neg) += 1;
  }
  mpz_class total = 0;
  for (uint32_t j = 0; j <= k; ++j) {
    const mpz_class term = binom_mpz(uint64_t(pos), j) *
                           binom_mpz(uint64_t(neg), k - j);
    if ((k - j) % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace

TEST_CASE("exhaustive censuses of small Paley structures") {
  const CensusReport p13 =
      run_census(make_paley(13), 1, 4, CensusMode::exhaustive, 0, 0);
  CHECK(row_for(p13, 1).counts.even == 13);
  CHECK(row_for(p13, 1).counts.odd == 0);
  CHECK(row_for(p13, 2).counts.even == 39);  // non-adjacent pairs
  CHECK(row_for(p13, 2).counts.odd == 39);   // edges
  for (const CensusRow& row : p13.rows)
    CHECK(mpz_class(long(row.counts.total())) == row.total);

  const CensusReport pt7 =
      run_census(make_paley(7), 1, 7, CensusMode::exhaustive, 0, 0);
  CHECK(row_for(pt7, 2).counts.even == 0);
  for (const CensusRow& row : pt7.rows) {
    // orders excluded by the degree-sum parity argument
    if (row.r % 4 == 2 || row.r % 4 == 3) CHECK(row.counts.even == 0);
    if (row.r % 4 == 1 || row.r % 4 == 2) CHECK(row.counts.odd == 0);
    CHECK(mpz_class(long(row.counts.total())) == row.total);
  }
  const CensusReport pt11 =
      run_census(make_paley(11), 1, 7, CensusMode::exhaustive, 0, 0);
  for (const CensusRow& row : pt11.rows) {
    if (row.r % 4 == 2 || row.r % 4 == 3) CHECK(row.counts.even == 0);
    if (row.r % 4 == 1 || row.r % 4 == 2) CHECK(row.counts.odd == 0);
  }
}

TEST_CASE("walker agrees with itself under chunking") {
  const PaleyStructure p = make_paley(17);
  const ParityCounts one = exhaustive_parity_census(p.adjacency(), 4, 1u << 30, 1);
  const ParityCounts four = exhaustive_parity_census(p.adjacency(), 4, 1u << 30, 4);
  CHECK(one.even == four.even);
  CHECK(one.odd == four.odd);
  CHECK(one.mixed == four.mixed);
}

TEST_CASE("budget controls exhaustive enumeration") {
  try {
    exhaustive_parity_census(make_paley(101).adjacency(), 10, 1000, 1);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("character sums") {
  const FiniteField f13 = FiniteField::from_order(13);
  // A_0(W) = 1
  CHECK(character_sum_A(f13, std::vector<uint32_t>{0, 5, 7}, 0) == 1);
  // A_r(empty W) counts all r-subsets
  CHECK(character_sum_A(f13, {}, 3) == binom_mpz(13, 3));
  CHECK(character_sum_A(f13, {}, 3) == 286);
  // A_1({w}) = 0: eta sums to zero over a line
  for (uint32_t w = 0; w < 13; ++w)
    CHECK(character_sum_A(f13, std::vector<uint32_t>{w}, 1) == 0);

  // sign-count oracle across sizes
  for (uint32_t k = 0; k <= 4; ++k) {
    for (const auto& w : std::vector<std::vector<uint32_t>>{
             {}, {0}, {0, 1}, {2, 5, 11}, {1, 2, 3, 4}}) {
      CAPTURE(k);
      CHECK(character_sum_A(f13, w, k) ==
            character_sum_by_sign_count(f13, w, k));
    }
  }

  try {
    character_sum_A(f13, {}, 5, 10);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("census reconstruction from character sums") {
  for (uint32_t q : {13u, 17u}) {
    const PaleyStructure p = make_paley(q);
    for (uint32_t r = 1; r <= 4; ++r) {
      CAPTURE(q);
      CAPTURE(r);
      const ParityCounts counts =
          exhaustive_parity_census(p.adjacency(), r, 1u << 30);
      CHECK(reconstruct_Nr(p.field(), r) == mpz_class(long(counts.even)));
    }
  }
  CHECK(reconstruct_Nr(FiniteField::from_order(13), 1) == 13);

  try {
    reconstruct_Nr(FiniteField::from_order(29), 3);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("character sum bound checks") {
  const FiniteField f13 = FiniteField::from_order(13);
  const WeilReport rep = weil_check(f13, std::vector<uint32_t>{0, 1}, 1);
  CHECK(rep.bound == doctest::Approx(std::sqrt(13.0)));
  CHECK(rep.ok);
  // independent direct summation
  int64_t direct = 0;
  for (uint32_t c = 0; c < 13; ++c)
    direct += f13.eta(f13.mul(c, f13.sub(c, 1)));
  CHECK(rep.lhs == uint64_t(direct < 0 ? -direct : direct));

  // randomized cases across fields
  const std::vector<uint32_t> qs = {13, 17, 25, 29, 49, 81, 101};
  for (uint64_t i = 0; i < 200; ++i) {
    CounterRng rng(2024, i);
    const FiniteField f = FiniteField::from_order(qs[rng.below(qs.size())]);
    const uint32_t deg = 2 + uint32_t(rng.below(5));
    std::set<uint32_t> roots;
    while (roots.size() < deg) roots.insert(uint32_t(rng.below(f.q())));
    const std::vector<uint32_t> w(roots.begin(), roots.end());
    const uint32_t n = 1 + 2 * uint32_t(rng.below(3));
    const WeilReport r = weil_check(f, w, n);
    CAPTURE(f.q());
    CHECK(r.ok);
  }

  try {
    weil_check(f13, std::vector<uint32_t>{3}, 1);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
}

TEST_CASE("giant subgraph lower bound values") {
  CHECK(giant_lower_bound(4, 2).bound_value == 2);
  CHECK(giant_lower_bound(12, 6).bound_value == 11);
  for (uint64_t n : {1u, 5u, 12u}) CHECK(giant_lower_bound(n, n).bound_value == 1);
  // odd theta uses the ceiling in the denominator subset size
  CHECK(giant_lower_bound(7, 3).bound_value ==
        mpq_class(binom_mpz(7, 4)) / mpq_class(binom_mpz(5, 4)));
  CHECK(giant_lower_bound(12, 6).entropy_rhs ==
        doctest::Approx(std::exp2((binary_entropy(0.25) - 0.5) * 12)));
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  for (double x = 0.05; x < 0.5; x += 0.05)
    CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1.0 - x)));
  CHECK(binary_entropy(0.35) - 0.7 > 0);
  // positivity of H(a/2) - a over the whole range
  for (double a = 0.01; a < 1.0; a += 0.01)
    CHECK(binary_entropy(a / 2) - a > 0);
  try {
    binary_entropy(1.0);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
}

TEST_CASE("theta sets dominate the bound") {
  // edgeless: every nonempty subset of every pair shows up
  const std::vector<BitVec> edgeless = theta_set(SimpleGraph(4), 2);
  CHECK(edgeless.size() == 10);  // 4 singletons + 6 pairs
  CHECK(double(edgeless.size()) >=
        giant_lower_bound(4, 2).bound_value.get_d());

  // first 8 vertices of the q = 13 Paley graph
  const SimpleGraph p13 = SimpleGraph::from_paley(make_paley(13));
  BitVec first8(13);
  for (uint32_t v = 0; v < 8; ++v) first8.set(v);
  const SimpleGraph g8 = p13.induced(first8);
  const std::vector<BitVec> theta8 = theta_set(g8, 4);
  const BoundReport bound8 = giant_lower_bound(8, 4);
  CHECK(bound8.bound_value == mpq_class(14, 3));  // C(8,4)/C(6,4)
  CHECK(theta8.size() >= 5);

  // theta = n on an even graph contains the full vertex set
  const std::pair<uint32_t, uint32_t> cycle[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  const SimpleGraph c4 = SimpleGraph::from_edges(4, cycle);
  const std::vector<BitVec> full = theta_set(c4, 4);
  bool has_all = false;
  for (const BitVec& s : full) has_all = has_all || s.popcount() == 4;
  CHECK(has_all);
  CHECK(full.size() >= 1);

  // random instances: theta-set size and the even census both clear it
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const SimpleGraph g = SimpleGraph::random(12, 1, 2, seed, 31);
    const std::vector<BitVec> theta = theta_set(g, 6);
    const double bound = giant_lower_bound(12, 6).bound_value.get_d();
    CHECK(double(theta.size()) >= bound);
    for (const BitVec& s : theta) {
      CHECK(g.is_even_subset(s));
      CHECK(2 * s.popcount() >= 6);
      CHECK(s.popcount() <= 6);
    }
    uint64_t in_window = 0;
    for (uint32_t r = 3; r <= 6; ++r)
      in_window += exhaustive_parity_census(g.adjacency(), r, 1u << 30).even;
    CHECK(double(in_window) >= bound);
  }

  try {
    theta_set(SimpleGraph(15), 4);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("odd counts match even counts of the complement") {
  // for q = 1 mod 4 and even order r
  for (uint32_t q : {13u, 17u}) {
    const SimpleGraph g = SimpleGraph::from_paley(make_paley(q));
    const SimpleGraph comp = g.complement();
    for (uint32_t r : {2u, 4u}) {
      const ParityCounts direct =
          exhaustive_parity_census(g.adjacency(), r, 1u << 30);
      const ParityCounts swapped =
          exhaustive_parity_census(comp.adjacency(), r, 1u << 30);
      CAPTURE(q);
      CAPTURE(r);
      CHECK(direct.odd == swapped.even);
    }
  }
}

TEST_CASE("sampled census is reproducible and calibrated") {
  const PaleyStructure p = make_paley(13);
  const ParityCounts truth = exhaustive_parity_census(p.adjacency(), 3, 1u << 30);
  const double exact = double(truth.even) / double(binom_u64(13, 3));

  const uint64_t samples = 20000;
  const ParityCounts est = sampled_parity_census(p.adjacency(), 3, samples, 42);
  const double frac = double(est.even) / double(samples);
  const double se = std::sqrt(exact * (1 - exact) / double(samples));
  CHECK(std::abs(frac - exact) <= 4 * se);

  // identical with any worker count and on repeat runs
  const ParityCounts rerun = sampled_parity_census(p.adjacency(), 3, samples, 42);
  const ParityCounts wide = sampled_parity_census(p.adjacency(), 3, samples, 42, 4);
  CHECK(est.even == rerun.even);
  CHECK(est.odd == rerun.odd);
  CHECK(est.even == wide.even);
  CHECK(est.mixed == wide.mixed);

  // different seed, different draws
  const ParityCounts other = sampled_parity_census(p.adjacency(), 3, samples, 43);
  CHECK(other.even != est.even);  // 20000 draws colliding exactly is ~impossible
}

TEST_CASE("sampling never finds parity-excluded tournament orders") {
  const PaleyStructure pt = make_paley(11);
  // order 3 admits no all-even subdigraph, order 5 no all-odd one
  const ParityCounts r3 = sampled_parity_census(pt.adjacency(), 3, 20000, 3);
  CHECK(r3.even == 0);
  const ParityCounts r5 = sampled_parity_census(pt.adjacency(), 5, 20000, 3);
  CHECK(r5.odd == 0);
}

TEST_CASE("census rows serialize with rounded estimates") {
  const PaleyStructure p = make_paley(13);
  const CensusReport rep =
      run_census(p, 2, 2, CensusMode::sampled, 1000, 5);
  const nlohmann::json j = census_row_json(p.field(), rep, rep.rows[0]);
  CHECK(j.at("mode") == "sampled");
  CHECK(j.at("truncated") == true);
  CHECK(j.at("samples") == 1000);
  CHECK(j.at("total") == "78");
  const uint64_t hits = j.at("even_hits").get<uint64_t>();
  CHECK(j.at("even_fraction").get<double>() ==
        doctest::Approx(double(hits) / 1000.0));
  // estimate is round(total * hits / samples)
  CHECK(j.at("even_estimate").get<std::string>() ==
        std::to_string((78 * hits + 500) / 1000));
  CHECK(j.at("field").at("p") == 13);

  const CensusReport ex = run_census(p, 2, 2, CensusMode::exhaustive, 0, 0);
  const nlohmann::json je = census_row_json(p.field(), ex, ex.rows[0]);
  CHECK(je.at("even") == "39");
  CHECK(je.at("odd") == "39");
  CHECK(je.at("truncated") == false);
}
