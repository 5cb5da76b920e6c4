#include "plovkit/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "plovkit/modp.hpp"

namespace plovkit {

namespace {

// Scales each row by the lcm of its denominators. Returns the integer matrix
// and the product of the scale factors.
std::pair<IntMatrix, BigInt> clear_denominators(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  BigInt total = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (const auto& v : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    total *= l;
  }
  return {std::move(out), total};
}

struct Elimination {
  std::size_t rank = 0;
  bool odd_swaps = false;
};

// In-place fraction-free row echelon form. Every intermediate entry is a minor
// of the input, so the division by the previous pivot is exact.
Elimination bareiss(IntMatrix& m) {
  Elimination e;
  BigInt prev = 1;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && e.rank < rows; ++c) {
    const std::size_t r = e.rank;
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      m.swap_rows(piv, r);
      e.odd_swaps = !e.odd_swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++e.rank;
  }
  return e;
}

}  // namespace

std::size_t rank_bareiss(const RationalMatrix& m) {
  auto [ints, scale] = clear_denominators(m);
  return bareiss(ints).rank;
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  if (auto residues = modp::reduce(m)) {
    if (modp::rank(std::move(*residues)) == full) return full;
  }
  return rank_bareiss(m);
}

Rational det(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  auto [ints, scale] = clear_denominators(m);
  Elimination e = bareiss(ints);
  if (e.rank < n) return Rational(0);
  Rational d(ints(n - 1, n - 1), scale);
  d.canonicalize();
  return e.odd_swaps ? Rational(-d) : d;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) { return a * b; }

RationalMatrix chain_product(std::span<const RationalMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("chain_product: empty factor list");
  RationalMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
  return acc;
}

RationalPoly charpoly(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
  PolyMatrix xm(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      xm(r, c) = RationalPoly(-m(r, c));
      if (r == c) xm(r, c) += RationalPoly::variable();
    }
  return polydet(xm);
}

}  // namespace plovkit
