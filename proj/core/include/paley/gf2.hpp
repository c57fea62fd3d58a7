#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace paley {

// Dense bit vector packed into 64-bit words (little-endian bit order:
// bit i lives in word i/64 at position i%64).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_(words_for(n), 0) {}

  static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= uint64_t(1) << (i & 63);
    else
      w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  std::size_t popcount() const;
  bool none() const;
  std::size_t and_popcount(const BitVec& o) const;  // |this AND o|

  std::span<const uint64_t> words() const { return w_; }
  std::span<uint64_t> words() { return w_; }

  std::vector<uint32_t> ones() const;  // sorted set-bit indices
  static BitVec from_indices(std::size_t n, std::span<const uint32_t> idx);

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

// Dense row-major bit matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(BitVec::words_for(cols)),
        bits_(rows * wpr_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    if (v)
      bits_[r * wpr_ + (c >> 6)] |= uint64_t(1) << (c & 63);
    else
      bits_[r * wpr_ + (c >> 6)] &= ~(uint64_t(1) << (c & 63));
  }

  std::span<const uint64_t> row_words(std::size_t r) const {
    return {bits_.data() + r * wpr_, wpr_};
  }
  std::span<uint64_t> row_words(std::size_t r) {
    return {bits_.data() + r * wpr_, wpr_};
  }

  BitVec row(std::size_t r) const;
  Gf2Matrix transposed() const;

  std::size_t rank() const;
  BitVec mul(const BitVec& x) const;  // M * x

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_, cols_, wpr_;
  std::vector<uint64_t> bits_;
};

// Solutions of M x = b: a particular solution (absent iff inconsistent)
// plus a kernel basis in reduced echelon form (deterministic: free
// columns ascending, pivots leftmost-first).
struct AffineSolutionSpace {
  std::size_t cols = 0;
  std::optional<BitVec> particular;
  std::vector<BitVec> kernel;

  std::size_t dimension() const { return kernel.size(); }
  bool consistent() const { return particular.has_value(); }
};

AffineSolutionSpace solve_affine(const Gf2Matrix& m, const BitVec& b);

struct SolutionEnumeration {
  std::vector<BitVec> solutions;
  bool truncated = false;
};

// First min(2^dimension, cap) solutions in Gray-code order over the
// kernel coordinates (consecutive solutions differ by one basis vector).
SolutionEnumeration enumerate_solutions(const AffineSolutionSpace& space,
                                        uint64_t cap);

}  // namespace paley
