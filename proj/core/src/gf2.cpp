#include "paley/gf2.hpp"

#include <bit>

#include "paley/error.hpp"

namespace paley {

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

bool BitVec::none() const {
  for (uint64_t x : w_)
    if (x) return false;
  return true;
}

std::size_t BitVec::and_popcount(const BitVec& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    c += std::popcount(w_[i] & o.w_[i]);
  return c;
}

std::vector<uint32_t> BitVec::ones() const {
  std::vector<uint32_t> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    uint64_t x = w_[i];
    while (x) {
      out.push_back(uint32_t(i * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

BitVec BitVec::from_indices(std::size_t n, std::span<const uint32_t> idx) {
  BitVec v(n);
  for (uint32_t i : idx) v.set(i);
  return v;
}

BitVec Gf2Matrix::row(std::size_t r) const {
  BitVec v(cols_);
  auto src = row_words(r);
  auto dst = v.words();
  for (std::size_t i = 0; i < wpr_; ++i) dst[i] = src[i];
  return v;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto w = row_words(r);
    for (std::size_t i = 0; i < wpr_; ++i) {
      uint64_t x = w[i];
      while (x) {
        std::size_t c = i * 64 + std::countr_zero(x);
        t.set(c, r);
        x &= x - 1;
      }
    }
  }
  return t;
}

namespace {

// In-place Gauss-Jordan on row words. Pivot choice is the first set bit
// scanning columns left to right, which makes the echelon form (and
// everything derived from it) deterministic.
struct Elimination {
  std::size_t rank = 0;
  std::vector<int64_t> pivot_row_of_col;  // -1 if free column

  Elimination(std::vector<uint64_t>& rows, std::size_t nrows,
              std::size_t ncols, std::size_t wpr) {
    pivot_row_of_col.assign(ncols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
      const std::size_t wi = c >> 6;
      const uint64_t bit = uint64_t(1) << (c & 63);
      std::size_t piv = nrows;
      for (std::size_t i = r; i < nrows; ++i) {
        if (rows[i * wpr + wi] & bit) {
          piv = i;
          break;
        }
      }
      if (piv == nrows) continue;
      if (piv != r)
        for (std::size_t j = 0; j < wpr; ++j)
          std::swap(rows[piv * wpr + j], rows[r * wpr + j]);
      for (std::size_t i = 0; i < nrows; ++i) {
        if (i != r && (rows[i * wpr + wi] & bit))
          for (std::size_t j = 0; j < wpr; ++j)
            rows[i * wpr + j] ^= rows[r * wpr + j];
      }
      pivot_row_of_col[c] = int64_t(r);
      ++r;
    }
    rank = r;
  }
};

}  // namespace

std::size_t Gf2Matrix::rank() const {
  std::vector<uint64_t> work(bits_);
  Elimination elim(work, rows_, cols_, wpr_);
  return elim.rank;
}

BitVec Gf2Matrix::mul(const BitVec& x) const {
  BitVec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto w = row_words(r);
    auto xw = x.words();
    std::size_t c = 0;
    for (std::size_t i = 0; i < wpr_; ++i) c += std::popcount(w[i] & xw[i]);
    if (c & 1) y.set(r);
  }
  return y;
}

AffineSolutionSpace solve_affine(const Gf2Matrix& m, const BitVec& b) {
  if (b.size() != m.rows())
    fail(ErrorKind::DomainError, "right-hand side length != row count");
  const std::size_t nrows = m.rows(), ncols = m.cols();
  // Augment with b as an extra trailing column.
  const std::size_t acols = ncols + 1;
  const std::size_t wpr = BitVec::words_for(acols);
  std::vector<uint64_t> work(nrows * wpr, 0);
  for (std::size_t r = 0; r < nrows; ++r) {
    auto src = m.row_words(r);
    for (std::size_t i = 0; i < src.size(); ++i) work[r * wpr + i] = src[i];
    if (b.get(r)) work[r * wpr + (ncols >> 6)] |= uint64_t(1) << (ncols & 63);
  }
  // Eliminate over the coefficient columns only.
  Elimination elim(work, nrows, ncols, wpr);

  AffineSolutionSpace space;
  space.cols = ncols;

  // Inconsistent iff some zero coefficient row has RHS 1.
  bool consistent = true;
  for (std::size_t r = elim.rank; r < nrows; ++r)
    if ((work[r * wpr + (ncols >> 6)] >> (ncols & 63)) & 1) consistent = false;

  if (consistent) {
    BitVec part(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
      int64_t pr = elim.pivot_row_of_col[c];
      if (pr >= 0 && ((work[std::size_t(pr) * wpr + (ncols >> 6)] >>
                       (ncols & 63)) & 1))
        part.set(c);
    }
    space.particular = std::move(part);
  }

  // Kernel basis: one vector per free column f, with v[f] = 1 and, for
  // every pivot column c, v[c] = coefficient of f in c's pivot row.
  for (std::size_t f = 0; f < ncols; ++f) {
    if (elim.pivot_row_of_col[f] >= 0) continue;
    BitVec v(ncols);
    v.set(f);
    for (std::size_t c = 0; c < ncols; ++c) {
      int64_t pr = elim.pivot_row_of_col[c];
      if (pr >= 0 && ((work[std::size_t(pr) * wpr + (f >> 6)] >> (f & 63)) & 1))
        v.set(c);
    }
    space.kernel.push_back(std::move(v));
  }
  return space;
}

SolutionEnumeration enumerate_solutions(const AffineSolutionSpace& space,
                                        uint64_t cap) {
  if (!space.particular)
    fail(ErrorKind::NoParticularSolution, "inconsistent system");
  if (cap == 0) fail(ErrorKind::DomainError, "cap must be positive");
  const std::size_t dim = space.dimension();
  uint64_t total_capped;
  bool truncated;
  if (dim >= 64) {
    total_capped = cap;
    truncated = true;
  } else {
    const uint64_t total = uint64_t(1) << dim;
    truncated = total > cap;
    total_capped = truncated ? cap : total;
  }
  SolutionEnumeration out;
  out.truncated = truncated;
  out.solutions.reserve(total_capped);
  BitVec cur = *space.particular;
  out.solutions.push_back(cur);
  for (uint64_t i = 1; i < total_capped; ++i) {
    // Gray step: i-th transition flips kernel coordinate ctz(i).
    cur ^= space.kernel[std::size_t(std::countr_zero(i))];
    out.solutions.push_back(cur);
  }
  return out;
}

}  // namespace paley
