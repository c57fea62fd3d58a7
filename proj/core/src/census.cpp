#include "paley/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "paley/error.hpp"
#include "paley/rng.hpp"

namespace paley {

uint64_t binom_u64(uint64_t n, uint64_t k, uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // prefix products are binomials, so exact
    if (r >= cap) return cap;  // saturate
  }
  return uint64_t(r);
}

mpz_class binom_mpz(uint64_t n, uint64_t k) {
  mpz_class r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, uint32_t(k));
  return r;
}

std::vector<uint32_t> colex_unrank(uint64_t rank, uint32_t r) {
  std::vector<uint32_t> idx(r);
  uint64_t rem = rank;
  for (uint32_t i = r; i-- > 0;) {
    uint32_t a = i;
    while (binom_u64(a + 1, i + 1) <= rem) ++a;
    idx[i] = a;
    rem -= binom_u64(a, i + 1);
  }
  return idx;
}

bool colex_next(std::span<uint32_t> idx, uint32_t n) {
  const uint32_t r = uint32_t(idx.size());
  uint32_t i = 0;
  while (i + 1 < r && idx[i] + 1 == idx[i + 1]) ++i;
  if (i + 1 == r && idx[i] + 1 >= n) return false;
  ++idx[i];
  for (uint32_t j = 0; j < i; ++j) idx[j] = j;
  return true;
}

namespace {

// Colexicographic combination walker over r-subsets of [0, nverts),
// maintaining the subset mask and the GF(2) sum of the parity rows of
// the members. Rank of {a_0 < ... < a_{r-1}} is sum_i C(a_i, i+1).
class ParityWalker {
 public:
  ParityWalker(const Gf2Matrix& rows, uint32_t r, uint64_t rank)
      : rows_(rows), n_(uint32_t(rows.rows())), r_(r),
        idx_(colex_unrank(rank, r)), mask_(BitVec::words_for(n_), 0),
        pv_(BitVec::words_for(n_), 0) {
    for (uint32_t i = 0; i < r_; ++i) flip(idx_[i]);
  }

  ParityClass classify() const {
    bool even_zero = true, odd_full = true;
    for (std::size_t i = 0; i < mask_.size(); ++i) {
      const uint64_t sel = pv_[i] & mask_[i];
      if (sel != 0) even_zero = false;
      if (sel != mask_[i]) odd_full = false;
      if (!even_zero && !odd_full) return ParityClass::mixed;
    }
    return even_zero ? ParityClass::even : ParityClass::odd;
  }

  // Advance to the colex successor. Amortized O(1) vertex flips.
  void next() {
    uint32_t i = 0;
    while (i + 1 < r_ && idx_[i] + 1 == idx_[i + 1]) ++i;
    flip(idx_[i]);
    flip(++idx_[i]);
    for (uint32_t j = 0; j < i; ++j) {
      flip(idx_[j]);
      idx_[j] = j;
      flip(j);
    }
  }

 private:
  void flip(uint32_t v) {
    mask_[v >> 6] ^= uint64_t(1) << (v & 63);
    auto row = rows_.row_words(v);
    for (std::size_t i = 0; i < pv_.size(); ++i) pv_[i] ^= row[i];
  }

  const Gf2Matrix& rows_;
  uint32_t n_, r_;
  std::vector<uint32_t> idx_;
  std::vector<uint64_t> mask_, pv_;
};

ParityCounts census_range(const Gf2Matrix& rows, uint32_t r, uint64_t from,
                          uint64_t count) {
  ParityCounts out;
  if (count == 0) return out;
  ParityWalker walker(rows, r, from);
  for (uint64_t i = 0;; ++i) {
    switch (walker.classify()) {
      case ParityClass::even: ++out.even; break;
      case ParityClass::odd: ++out.odd; break;
      case ParityClass::mixed: ++out.mixed; break;
    }
    if (i + 1 == count) break;
    walker.next();
  }
  return out;
}

template <typename Fn>
void run_chunks(uint64_t total, unsigned workers, Fn&& fn) {
  if (workers <= 1 || total < 2 * workers) {
    fn(0, uint64_t(0), total);
    return;
  }
  std::vector<std::thread> pool;
  const uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const uint64_t lo = std::min(total, w * chunk);
    const uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi - lo); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

ParityCounts exhaustive_parity_census(const Gf2Matrix& parity_rows, uint32_t r,
                                      uint64_t budget_steps, unsigned workers) {
  const uint32_t n = uint32_t(parity_rows.rows());
  if (r < 1 || r > n) fail(ErrorKind::DomainError, "order r out of range");
  const uint64_t total = binom_u64(n, r, UINT64_MAX);
  if (total > budget_steps)
    fail(ErrorKind::BudgetExceeded,
         "C(" + std::to_string(n) + ", " + std::to_string(r) +
             ") exceeds the enumeration budget");
  std::vector<ParityCounts> parts(workers ? workers : 1);
  run_chunks(total, workers, [&](unsigned w, uint64_t lo, uint64_t cnt) {
    parts[w] = census_range(parity_rows, r, lo, cnt);
  });
  ParityCounts out;
  for (const auto& p : parts) out += p;
  return out;
}

namespace {

// Uniform r-subset of [0, n) by sparse partial Fisher-Yates; every draw
// consumes only its own stream.
void draw_subset(CounterRng& rng, uint32_t n, uint32_t r,
                 std::vector<uint32_t>& out) {
  out.clear();
  // (position, value) overrides for the virtual array a[i] = i
  thread_local std::vector<std::pair<uint32_t, uint32_t>> over;
  over.clear();
  auto lookup = [&](uint32_t i) {
    for (const auto& [k, v] : over)
      if (k == i) return v;
    return i;
  };
  for (uint32_t j = 0; j < r; ++j) {
    const uint32_t k = j + uint32_t(rng.below(n - j));
    const uint32_t vk = lookup(k);
    const uint32_t vj = lookup(j);
    out.push_back(vk);
    bool replaced = false;
    for (auto& [pos, v] : over) {
      if (pos == k) {
        v = vj;
        replaced = true;
        break;
      }
    }
    if (!replaced) over.emplace_back(k, vj);
  }
}

}  // namespace

ParityCounts sampled_parity_census(const Gf2Matrix& adj, uint32_t r,
                                   uint64_t samples, uint64_t seed,
                                   unsigned workers) {
  const uint32_t n = uint32_t(adj.rows());
  if (r < 1 || r > n) fail(ErrorKind::DomainError, "order r out of range");
  std::vector<ParityCounts> parts(workers ? workers : 1);
  run_chunks(samples, workers, [&](unsigned w, uint64_t lo, uint64_t cnt) {
    ParityCounts local;
    std::vector<uint32_t> pick;
    for (uint64_t i = lo; i < lo + cnt; ++i) {
      CounterRng rng(seed, i);
      draw_subset(rng, n, r, pick);
      bool any_even = false, any_odd = false;
      for (uint32_t a : pick) {
        uint32_t d = 0;
        for (uint32_t b : pick) d += adj.get(a, b) ? 1 : 0;
        (d & 1 ? any_odd : any_even) = true;
      }
      if (any_even && any_odd) ++local.mixed;
      else if (any_odd) ++local.odd;
      else ++local.even;
    }
    parts[w] = local;
  });
  ParityCounts out;
  for (const auto& p : parts) out += p;
  return out;
}

CensusReport run_census(const PaleyStructure& p, uint32_t r_min, uint32_t r_max,
                        CensusMode mode, uint64_t samples, uint64_t seed,
                        const Budget& budget, unsigned workers) {
  const uint32_t q = p.order();
  if (r_min < 1 || r_max > q || r_min > r_max)
    fail(ErrorKind::DomainError, "order range out of bounds");
  CensusReport report;
  report.q = q;
  report.kind = p.kind();
  report.mode = mode;
  report.samples = mode == CensusMode::sampled ? samples : 0;
  report.seed = seed;

  // The walker wants out-degree parities, which accumulate along
  // adjacency columns; sampling probes the adjacency directly.
  std::optional<Gf2Matrix> parity_rows;
  if (mode == CensusMode::exhaustive)
    parity_rows = p.kind() == PaleyKind::tournament
                      ? p.adjacency().transposed()
                      : p.adjacency();
  for (uint32_t r = r_min; r <= r_max; ++r) {
    CensusRow row;
    row.r = r;
    row.mode = mode;
    row.total = binom_mpz(q, r);
    if (mode == CensusMode::exhaustive) {
      row.counts = exhaustive_parity_census(*parity_rows, r,
                                            budget.subset_steps, workers);
    } else {
      row.counts = sampled_parity_census(p.adjacency(), r, samples, seed,
                                         workers);
      row.samples = samples;
      row.truncated = true;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

mpz_class character_sum_A(const FiniteField& f, std::span<const uint32_t> w_set,
                          uint32_t k, uint64_t budget_terms) {
  const uint32_t q = f.q();
  for (std::size_t i = 0; i < w_set.size(); ++i) {
    if (w_set[i] >= q) fail(ErrorKind::DomainError, "W element out of range");
    for (std::size_t j = i + 1; j < w_set.size(); ++j)
      if (w_set[i] == w_set[j])
        fail(ErrorKind::DomainError, "W elements must be distinct");
  }
  if (k > q - w_set.size()) fail(ErrorKind::DomainError, "k out of range");
  if (binom_u64(q - w_set.size(), k) > budget_terms)
    fail(ErrorKind::BudgetExceeded, "too many k-subsets for the term budget");
  if (k == 0) return 1;

  // Signs eta(f_W(u)) for eligible u, ascending canonical order. All are
  // +-1 because f_W only vanishes on W.
  std::vector<int8_t> sign;
  sign.reserve(q - w_set.size());
  for (uint32_t u = 0; u < q; ++u) {
    bool in_w = false;
    uint32_t prod = 1;
    for (uint32_t w : w_set) {
      if (u == w) {
        in_w = true;
        break;
      }
      prod = f.mul(prod, f.sub(u, w));
    }
    if (!in_w) sign.push_back(int8_t(w_set.empty() ? 1 : f.eta(prod)));
  }
  const uint32_t m = uint32_t(sign.size());

  // Colex walk over k-subsets of [0, m); only the count of selected
  // negative signs matters.
  std::vector<uint32_t> idx(k);
  uint32_t negs = 0;
  for (uint32_t i = 0; i < k; ++i) {
    idx[i] = i;
    negs += sign[i] < 0;
  }
  int64_t sum = 0;
  const uint64_t total = binom_u64(m, k);
  for (uint64_t step = 0;; ++step) {
    sum += (negs & 1) ? -1 : 1;
    if (step + 1 == total) break;
    uint32_t i = 0;
    while (i + 1 < k && idx[i] + 1 == idx[i + 1]) ++i;
    negs -= sign[idx[i]] < 0;
    negs += sign[++idx[i]] < 0;
    for (uint32_t j = 0; j < i; ++j) {
      negs -= sign[idx[j]] < 0;
      idx[j] = j;
      negs += sign[j] < 0;
    }
  }
  return mpz_class(sum);
}

mpz_class reconstruct_Nr(const FiniteField& f, uint32_t r,
                         uint64_t budget_terms) {
  const uint32_t q = f.q();
  if (q > 17 || r > 5 || r < 1)
    fail(ErrorKind::BudgetExceeded,
         "character-sum reconstruction enforced to q <= 17, 1 <= r <= 5");
  mpz_class acc = 0;
  std::vector<uint32_t> w;
  for (uint32_t k = 0; k <= r; ++k) {
    const uint32_t wsize = r - k;
    const bool negative = (uint64_t(k) * (r - k)) & 1;
    // All W subsets of size r - k, plain lexicographic enumeration.
    w.resize(wsize);
    for (uint32_t i = 0; i < wsize; ++i) w[i] = i;
    while (true) {
      mpz_class a = character_sum_A(f, w, k, budget_terms);
      if (negative) acc -= a;
      else acc += a;
      if (wsize == 0) break;
      // next combination
      int32_t i = int32_t(wsize) - 1;
      while (i >= 0 && w[std::size_t(i)] == q - wsize + uint32_t(i)) --i;
      if (i < 0) break;
      ++w[std::size_t(i)];
      for (uint32_t j = uint32_t(i) + 1; j < wsize; ++j) w[j] = w[j - 1] + 1;
    }
  }
  if (!mpz_divisible_2exp_p(acc.get_mpz_t(), r))
    fail(ErrorKind::DomainError, "character-sum total not divisible by 2^r");
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), acc.get_mpz_t(), r);
  return out;
}

WeilReport weil_check(const FiniteField& f, std::span<const uint32_t> w_set,
                      uint32_t n_power) {
  if (w_set.size() < 2)
    fail(ErrorKind::DomainError, "need at least two roots");
  if (n_power % 2 == 0) fail(ErrorKind::DomainError, "power must be odd");
  for (std::size_t i = 0; i < w_set.size(); ++i)
    for (std::size_t j = i + 1; j < w_set.size(); ++j)
      if (w_set[i] == w_set[j])
        fail(ErrorKind::DomainError, "roots must be distinct");
  const uint32_t q = f.q();
  int64_t sum = 0;
  for (uint32_t c = 0; c < q; ++c) {
    uint32_t v = 1;
    for (uint32_t w : w_set) v = f.mul(v, f.sub(c, w));
    sum += f.eta(f.pow(v, n_power));
  }
  WeilReport rep;
  rep.lhs = uint64_t(sum < 0 ? -sum : sum);
  const uint64_t d1 = w_set.size() - 1;
  rep.bound = double(d1) * std::sqrt(double(q));
  rep.ok = rep.lhs * rep.lhs <= d1 * d1 * q;
  return rep;
}

BoundReport giant_lower_bound(uint64_t n, uint64_t theta) {
  if (theta < 1 || theta > n)
    fail(ErrorKind::DomainError, "need 1 <= theta <= n");
  BoundReport rep;
  rep.n = n;
  rep.theta = theta;
  const uint64_t half_up = (theta + 1) / 2;
  mpq_class value(binom_mpz(n, n - theta), binom_mpz(n - half_up, n - theta));
  value.canonicalize();
  rep.bound_value = value;
  const double alpha = double(theta) / double(n);
  rep.entropy_rhs = std::exp2((binary_entropy(alpha / 2) - alpha) * double(n));
  return rep;
}

double binary_entropy(double x) {
  if (!(x > 0.0 && x < 1.0))
    fail(ErrorKind::DomainError, "entropy argument must lie in (0, 1)");
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

std::vector<BitVec> theta_set(const SimpleGraph& g, uint32_t theta,
                              uint64_t budget_steps) {
  const uint32_t n = uint32_t(g.order());
  if (n > 14) fail(ErrorKind::TooLarge, "theta-set enumeration capped at n = 14");
  if (theta < 1 || theta > n) fail(ErrorKind::DomainError, "theta out of range");
  if (binom_u64(n, theta) > budget_steps)
    fail(ErrorKind::TooLarge, "too many theta-subsets for the budget");

  std::set<uint32_t> masks;
  std::vector<uint32_t> w(theta);
  for (uint32_t i = 0; i < theta; ++i) w[i] = i;
  while (true) {
    BitVec wmask = BitVec::from_indices(n, w);
    SimpleGraph sub = g.induced(wmask);
    AffineSolutionSpace covers = odd_parity_covers(sub);
    if (covers.dimension() > 22)
      fail(ErrorKind::TooLarge, "cover space too large to enumerate");
    // Gray walk over all covers. The part inside the host graph maps
    // back to original labels; the complementary part shows up as some
    // other cover's part, so one side per cover is enough.
    BitVec cover = *covers.particular;
    const uint64_t ncovers = uint64_t(1) << covers.dimension();
    for (uint64_t s = 0;; ++s) {
      uint32_t mask = 0, size = 0;
      for (uint32_t i = 0; i < theta; ++i) {
        if (cover.get(i)) {
          mask |= uint32_t(1) << w[i];
          ++size;
        }
      }
      if (2 * size >= theta) masks.insert(mask);
      if (s + 1 == ncovers) break;
      cover ^= covers.kernel[std::size_t(std::countr_zero(s + 1))];
    }
    // next combination of [0, n) choose theta
    int32_t i = int32_t(theta) - 1;
    while (i >= 0 && w[std::size_t(i)] == n - theta + uint32_t(i)) --i;
    if (i < 0) break;
    ++w[std::size_t(i)];
    for (uint32_t j = uint32_t(i) + 1; j < theta; ++j) w[j] = w[j - 1] + 1;
  }

  std::vector<BitVec> out;
  out.reserve(masks.size());
  for (uint32_t mask : masks) {
    BitVec v(n);
    for (uint32_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) v.set(i);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace paley
