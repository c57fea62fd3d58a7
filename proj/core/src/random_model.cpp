#include "paley/random_model.hpp"

#include <cmath>
#include <thread>

#include "paley/error.hpp"
#include "paley/rng.hpp"

namespace paley {

namespace {

void check_probability(const mpq_class& p) {
  if (p <= 0 || p >= 1)
    fail(ErrorKind::DomainError, "probability must lie strictly in (0, 1)");
}

mpq_class mpq_pow(const mpq_class& x, unsigned long m) {
  mpq_class out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(x.get_mpq_t()), m);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(x.get_mpq_t()), m);
  return out;  // canonical since x is
}

}  // namespace

mpq_class parity_indicator_sum(const mpq_class& p, uint32_t r) {
  check_probability(p);
  const mpq_class gamma = 1 - 2 * p;
  mpq_class sum = 0;
  for (uint32_t k = 0; k <= r; ++k)
    sum += mpq_class(binom_mpz(r, k)) * mpq_pow(gamma, uint64_t(k) * (r - k));
  return sum;
}

mpq_class expected_graph(uint32_t n, const mpq_class& p, uint32_t r) {
  if (r < 1 || r > n) fail(ErrorKind::DomainError, "order r out of range");
  mpq_class value = mpq_class(binom_mpz(n, r)) * parity_indicator_sum(p, r);
  value /= mpq_class(mpz_class(1) << r);
  return value;
}

mpq_class expected_digraph(uint32_t n, const mpq_class& p, uint32_t r) {
  if (r < 1 || r > n) fail(ErrorKind::DomainError, "order r out of range");
  check_probability(p);
  const mpq_class gamma = 1 - 2 * p;
  mpq_class base = 1 + mpq_pow(gamma, r - 1);
  mpq_class value = mpq_class(binom_mpz(n, r)) * mpq_pow(base, r);
  value /= mpq_class(mpz_class(1) << r);
  return value;
}

RandomModelReport monte_carlo(uint32_t n, const mpq_class& p, uint32_t r,
                              uint64_t trials, uint64_t seed, bool digraph,
                              const Budget& budget, unsigned workers) {
  if (r < 1 || r > n) fail(ErrorKind::DomainError, "order r out of range");
  if (n > 64) fail(ErrorKind::DomainError, "sampling supports n <= 64");
  if (trials < 1) fail(ErrorKind::DomainError, "need at least one trial");
  check_probability(p);
  if (!mpz_fits_ulong_p(mpq_numref(p.get_mpq_t())) ||
      !mpz_fits_ulong_p(mpq_denref(p.get_mpq_t())))
    fail(ErrorKind::DomainError, "probability terms too large to sample");
  const uint64_t num = mpz_get_ui(mpq_numref(p.get_mpq_t()));
  const uint64_t den = mpz_get_ui(mpq_denref(p.get_mpq_t()));

  const uint64_t subsets = binom_u64(n, r, UINT64_MAX);
  const bool two_level = subsets > 1'000'000;
  const uint64_t subset_samples = two_level ? 4096 : subsets;
  if (trials > budget.subset_steps / subset_samples)
    fail(ErrorKind::BudgetExceeded, "trials * per-trial work exceeds budget");

  RandomModelReport rep;
  rep.n = n;
  rep.r = r;
  rep.digraph = digraph;
  rep.p = p;
  rep.closed_form = digraph ? expected_digraph(n, p, r) : expected_graph(n, p, r);
  rep.trials = trials;
  rep.seed = seed;
  rep.two_level = two_level;
  rep.subset_samples = two_level ? subset_samples : 0;

  using u128 = unsigned __int128;
  struct Sums {
    uint64_t sum = 0;
    u128 sum_sq = 0;
  };
  const unsigned nw = workers > 1 && trials >= 2 * workers ? workers : 1;
  std::vector<Sums> parts(nw);
  const uint64_t per = (trials + nw - 1) / nw;

  auto work = [&](unsigned wi) {
    const uint64_t lo = std::min(trials, wi * per);
    const uint64_t hi = std::min(trials, lo + per);
    Sums local;
    for (uint64_t t = lo; t < hi; ++t) {
      CounterRng rng(seed, t);
      // Parity rows for the subset walk: plain adjacency when
      // undirected, adjacency columns when directed (their GF(2) sums
      // carry out-degree parities).
      Gf2Matrix rows(n, n);
      if (!digraph) {
        for (uint32_t u = 0; u < n; ++u)
          for (uint32_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(num, den)) {
              rows.set(u, v);
              rows.set(v, u);
            }
      } else {
        for (uint32_t u = 0; u < n; ++u)
          for (uint32_t v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(num, den)) rows.set(v, u);
      }
      uint64_t hits;
      if (!two_level) {
        hits = exhaustive_parity_census(rows, r, UINT64_MAX, 1).even;
      } else {
        // The walk above needs parity rows either way; the sampler
        // probes adjacency bits directly, which for digraphs means the
        // transpose of what we built.
        const Gf2Matrix adj = digraph ? rows.transposed() : rows;
        hits = sampled_parity_census(adj, r, subset_samples,
                                     mix64(seed ^ mix64(t)), 1)
                   .even;
      }
      local.sum += hits;
      local.sum_sq += u128(hits) * hits;
    }
    parts[wi] = local;
  };
  if (nw == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned wi = 0; wi < nw; ++wi) pool.emplace_back(work, wi);
    for (auto& t : pool) t.join();
  }

  uint64_t sum = 0;
  u128 sum_sq = 0;
  for (const auto& s : parts) {
    sum += s.sum;
    sum_sq += s.sum_sq;
  }

  // Per-trial estimate is hits * scale; scale is 1 in exhaustive mode.
  const double scale =
      two_level ? double(subsets) / double(subset_samples) : 1.0;
  const double mean_hits = double(sum) / double(trials);
  rep.mc_mean = mean_hits * scale;
  if (trials > 1) {
    const double var_hits =
        (double(sum_sq) - double(sum) * mean_hits) / double(trials - 1);
    rep.mc_stderr = scale * std::sqrt(std::max(var_hits, 0.0) / double(trials));
  }
  return rep;
}

}  // namespace paley
