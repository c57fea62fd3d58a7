#include "paley/mds.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "paley/census.hpp"
#include "paley/error.hpp"

namespace paley {

const char* to_string(Feasibility fs) {
  switch (fs) {
    case Feasibility::even_length_ok: return "even_length_ok";
    case Feasibility::odd_length_ok: return "odd_length_ok";
    default: return "infeasible";
  }
}

uint32_t grs_delta(const FiniteField& f, std::span<const uint32_t> alphas,
                   std::size_t i) {
  uint32_t prod = 1;
  for (std::size_t j = 0; j < alphas.size(); ++j)
    if (j != i) prod = f.mul(prod, f.sub(alphas[i], alphas[j]));
  return prod;
}

namespace {

void check_distinct(const FiniteField& f, std::span<const uint32_t> alphas) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] >= f.q())
      fail(ErrorKind::DomainError, "evaluation point out of range");
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j])
        fail(ErrorKind::DomainError, "evaluation points must be distinct");
  }
}

}  // namespace

Feasibility feasibility(const FiniteField& f,
                        std::span<const uint32_t> alphas) {
  if (alphas.empty()) fail(ErrorKind::EmptySet, "empty evaluation set");
  check_distinct(f, alphas);
  const std::size_t n = alphas.size();
  if (n % 2 == 0) {
    const int first = f.eta(grs_delta(f, alphas, 0));
    for (std::size_t i = 1; i < n; ++i)
      if (f.eta(grs_delta(f, alphas, i)) != first)
        return Feasibility::infeasible;
    return Feasibility::even_length_ok;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (f.eta(f.neg(grs_delta(f, alphas, i))) != 1)
      return Feasibility::infeasible;
  return Feasibility::odd_length_ok;
}

namespace {

std::vector<uint32_t> build_generator(const FiniteField& f,
                                      std::span<const uint32_t> alphas,
                                      std::span<const uint32_t> v, uint32_t k,
                                      bool extended) {
  const uint32_t n = uint32_t(alphas.size());
  const uint32_t len = n + (extended ? 1 : 0);
  std::vector<uint32_t> g(std::size_t(k) * len, 0);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t power = 1;
    for (uint32_t j = 0; j < k; ++j) {
      g[std::size_t(j) * len + i] = f.mul(v[i], power);
      power = f.mul(power, alphas[i]);
    }
  }
  if (extended) g[std::size_t(k - 1) * len + n] = 1;
  return g;
}

bool gram_is_zero(const FiniteField& f, const GrsCode& code) {
  const uint32_t len = code.length();
  for (uint32_t a = 0; a < code.k; ++a) {
    for (uint32_t b = a; b < code.k; ++b) {
      uint32_t dot = 0;
      for (uint32_t c = 0; c < len; ++c)
        dot = f.add(dot, f.mul(code.gen(a, c), code.gen(b, c)));
      if (dot != 0) return false;
    }
  }
  return true;
}

// Rank of a k x len matrix of field-element indices, by elimination.
uint32_t rank_fq(const FiniteField& f, std::vector<uint32_t> m, uint32_t k,
                 uint32_t len) {
  uint32_t rank = 0;
  for (uint32_t c = 0; c < len && rank < k; ++c) {
    uint32_t piv = k;
    for (uint32_t r = rank; r < k; ++r) {
      if (m[std::size_t(r) * len + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == k) continue;
    for (uint32_t j = 0; j < len; ++j)
      std::swap(m[std::size_t(piv) * len + j], m[std::size_t(rank) * len + j]);
    const uint32_t inv = f.inv(m[std::size_t(rank) * len + c]);
    for (uint32_t r = 0; r < k; ++r) {
      if (r == rank) continue;
      const uint32_t factor = f.mul(m[std::size_t(r) * len + c], inv);
      if (factor == 0) continue;
      for (uint32_t j = 0; j < len; ++j)
        m[std::size_t(r) * len + j] =
            f.sub(m[std::size_t(r) * len + j],
                  f.mul(factor, m[std::size_t(rank) * len + j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GrsCode construct_self_dual(const FiniteField& f,
                            std::span<const uint32_t> alphas) {
  const Feasibility fs = feasibility(f, alphas);
  if (fs == Feasibility::infeasible)
    fail(ErrorKind::Infeasible, "evaluation set admits no self-dual code");

  const uint32_t n = uint32_t(alphas.size());
  GrsCode code;
  code.q = f.q();
  code.n_eval = n;
  code.extended = (fs == Feasibility::odd_length_ok);
  code.k = code.extended ? (n + 1) / 2 : n / 2;
  code.alphas.assign(alphas.begin(), alphas.end());

  std::vector<uint32_t> deltas(n);
  for (uint32_t i = 0; i < n; ++i) deltas[i] = grs_delta(f, alphas, i);

  if (!code.extended) {
    // All eta(delta_i) agree; scale by 1 or by the smallest nonsquare so
    // every lambda/delta_i becomes a square.
    uint32_t lambda = 1;
    if (f.eta(deltas[0]) != 1) {
      while (f.eta(lambda) != -1) ++lambda;
    }
    code.lambda = lambda;
    code.v.resize(n);
    for (uint32_t i = 0; i < n; ++i)
      code.v[i] = f.sqrt(f.mul(lambda, f.inv(deltas[i])));
    code.generator = build_generator(f, alphas, code.v, code.k, false);
    if (!gram_is_zero(f, code))
      fail(ErrorKind::ConstructionFailed, "generator is not self-orthogonal");
    return code;
  }

  // Extended case: try v_i = sqrt(lambda / -delta_i) for lambda in
  // canonical order, keeping the first lambda whose generator verifies.
  std::vector<uint32_t> neg_inv(n);
  for (uint32_t i = 0; i < n; ++i) neg_inv[i] = f.inv(f.neg(deltas[i]));
  for (uint32_t lambda = 1; lambda < f.q(); ++lambda) {
    bool all_square = true;
    for (uint32_t i = 0; i < n && all_square; ++i)
      all_square = f.eta(f.mul(lambda, neg_inv[i])) == 1;
    if (!all_square) continue;
    code.lambda = lambda;
    code.v.resize(n);
    for (uint32_t i = 0; i < n; ++i)
      code.v[i] = f.sqrt(f.mul(lambda, neg_inv[i]));
    code.generator = build_generator(f, alphas, code.v, code.k, true);
    if (gram_is_zero(f, code)) return code;
  }
  fail(ErrorKind::ConstructionFailed, "no scale yields a self-orthogonal generator");
}

bool verify_self_dual(const FiniteField& f, const GrsCode& code) {
  const uint32_t len = code.length();
  if (len % 2 != 0 || code.k != len / 2) return false;
  if (code.generator.size() != std::size_t(code.k) * len) return false;
  if (!gram_is_zero(f, code)) return false;
  return rank_fq(f, code.generator, code.k, len) == code.k;
}

bool verify_mds(const FiniteField& f, const GrsCode& code,
                MdsStrategy strategy) {
  const uint32_t len = code.length();
  const uint32_t k = code.k;
  const uint32_t target = len - k + 1;
  const uint32_t q = f.q();

  double pow_qk = 1;
  for (uint32_t i = 0; i < k; ++i) pow_qk *= q;
  const bool enumerate_words =
      strategy == MdsStrategy::codewords ||
      (strategy == MdsStrategy::automatic && pow_qk <= 1e7);
  if (enumerate_words) {
    if (pow_qk > 1e8)
      fail(ErrorKind::TooLarge, "codeword space too large to enumerate");
    // Full codeword enumeration, message odometer over F_q^k.
    uint32_t min_weight = len + 1;
    std::vector<uint32_t> msg(k, 0);
    while (true) {
      uint32_t i = 0;
      while (i < k && msg[i] + 1 == q) msg[i++] = 0;
      if (i == k) break;
      ++msg[i];
      uint32_t weight = 0;
      for (uint32_t c = 0; c < len; ++c) {
        uint32_t sym = 0;
        for (uint32_t j = 0; j < k; ++j)
          if (msg[j]) sym = f.add(sym, f.mul(msg[j], code.gen(j, c)));
        weight += sym != 0;
      }
      min_weight = std::min(min_weight, weight);
      if (min_weight < target) return false;
    }
    return min_weight == target;
  }

  if (strategy == MdsStrategy::columns ||
      (strategy == MdsStrategy::automatic && binom_u64(len, k) <= 1'000'000)) {
    // MDS iff every k columns of the generator are independent.
    std::vector<uint32_t> cols(k);
    for (uint32_t i = 0; i < k; ++i) cols[i] = i;
    std::vector<uint32_t> sub(std::size_t(k) * k);
    while (true) {
      for (uint32_t r = 0; r < k; ++r)
        for (uint32_t c = 0; c < k; ++c)
          sub[std::size_t(r) * k + c] = code.gen(r, cols[c]);
      if (rank_fq(f, sub, k, k) != k) return false;
      int32_t i = int32_t(k) - 1;
      while (i >= 0 && cols[std::size_t(i)] == len - k + uint32_t(i)) --i;
      if (i < 0) break;
      ++cols[std::size_t(i)];
      for (uint32_t j = uint32_t(i) + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return true;
  }

  fail(ErrorKind::TooLarge, "no distance verification strategy fits the budget");
}

OmegaEnumeration enumerate_omega(const FiniteField& f, uint32_t n,
                                 uint64_t budget_steps, uint64_t list_cap,
                                 unsigned workers) {
  const uint32_t q = f.q();
  if (n < 1 || n > q) fail(ErrorKind::DomainError, "subset size out of range");
  const uint64_t total = binom_u64(q, n, UINT64_MAX);
  if (total > budget_steps)
    fail(ErrorKind::BudgetExceeded, "too many subsets for the budget");

  const unsigned nw = workers > 1 && total >= 2 * workers ? workers : 1;
  struct Chunk {
    uint64_t count = 0;
    std::vector<std::vector<uint32_t>> sets;
  };
  std::vector<Chunk> chunks(nw);
  const uint64_t per = (total + nw - 1) / nw;

  auto work = [&](unsigned wi) {
    const uint64_t lo = std::min<uint64_t>(total, wi * per);
    const uint64_t hi = std::min<uint64_t>(total, lo + per);
    if (lo >= hi) return;
    std::vector<uint32_t> idx = colex_unrank(lo, n);
    Chunk& out = chunks[wi];
    for (uint64_t s = lo;; ++s) {
      if (feasibility(f, idx) != Feasibility::infeasible) {
        ++out.count;
        if (out.sets.size() < list_cap) out.sets.push_back(idx);
      }
      if (s + 1 == hi) break;
      colex_next(idx, q);
    }
  };
  if (nw == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned wi = 0; wi < nw; ++wi) pool.emplace_back(work, wi);
    for (auto& t : pool) t.join();
  }

  OmegaEnumeration out;
  out.n = n;
  uint64_t count = 0;
  for (auto& c : chunks) {
    count += c.count;
    for (auto& s : c.sets) {
      if (out.sets.size() < list_cap) out.sets.push_back(std::move(s));
      else break;
    }
  }
  out.count = mpz_class(static_cast<unsigned long>(count));
  out.list_truncated = uint64_t(out.sets.size()) < count;
  return out;
}

CoevenPairCensus coeven_pair_census(const FiniteField& f,
                                    uint64_t witness_cap) {
  const uint32_t q = f.q();
  CoevenPairCensus out;
  if (q > 17) {
    out.method = "formula";
    if (q % 8 == 1) {
      mpz_ui_pow_ui(out.count.get_mpz_t(), 2, (q - 1) / 2);
      out.count -= 1;
    } else {
      out.count = 0;
    }
    return out;
  }

  out.method = "scan";
  uint64_t count = 0;
  std::vector<uint32_t> inside, outside;
  for (uint32_t mask = 0; mask < (uint32_t(1) << q); ++mask) {
    const uint32_t size = uint32_t(std::popcount(mask));
    if (size % 2 != 0 || size < 2 || size > q - 1) continue;
    inside.clear();
    outside.clear();
    for (uint32_t v = 0; v < q; ++v)
      ((mask >> v) & 1 ? inside : outside).push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i < inside.size() && ok; ++i)
      ok = f.eta(grs_delta(f, inside, i)) == 1;
    for (std::size_t i = 0; i < outside.size() && ok; ++i)
      ok = f.eta(grs_delta(f, outside, i)) == 1;
    if (ok) {
      ++count;
      if (out.witnesses.size() < witness_cap) out.witnesses.push_back(inside);
    }
  }
  out.count = mpz_class(static_cast<unsigned long>(count));
  return out;
}

}  // namespace paley
