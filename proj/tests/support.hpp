#pragma once

#include <cstdint>
#include <vector>

#include "plovkit/matrix.hpp"

namespace testing {

// splitmix64; small, seedable and stable across platforms
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long between(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  plovkit::IntMatrix int_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    plovkit::IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = between(lo, hi);
    return m;
  }

  plovkit::RationalMatrix symmetric(std::size_t n, long lo, long hi) {
    plovkit::RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = between(lo, hi);
    return m;
  }

 private:
  std::uint64_t state_;
};

// Cofactor expansion along the first row; exponential, for small matrices only.
inline plovkit::Rational cofactor_det(const plovkit::RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  plovkit::Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    plovkit::RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const plovkit::Rational term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : plovkit::Rational(-term);
  }
  return total;
}

// Textbook Gauss-Jordan rank over Q.
inline std::size_t gauss_rank(plovkit::RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, rank);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const plovkit::Rational f = m(r, c) / m(rank, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace testing
