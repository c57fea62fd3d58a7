#pragma once

#include <cstdint>

namespace paley {

// SplitMix64 finalizer.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: every value is a pure function of
// (seed, stream, position), so trials or draws can be split across
// workers in any partition and still produce identical output.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream)
      : base_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL))) {}

  uint64_t next() { return mix64(base_ + 0x9e3779b97f4a7c15ULL * ++pos_); }

  // Uniform on [0, m) without modulo bias (rejection sampling).
  uint64_t below(uint64_t m) {
    const uint64_t lim = m * (UINT64_MAX / m);
    uint64_t x;
    do {
      x = next();
    } while (x >= lim);
    return x % m;
  }

  // Exact Bernoulli(num/den).
  bool bernoulli(uint64_t num, uint64_t den) { return below(den) < num; }

 private:
  uint64_t base_;
  uint64_t pos_ = 0;
};

}  // namespace paley
