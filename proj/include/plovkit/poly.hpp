#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plovkit/matrix.hpp"

namespace plovkit {

/// Univariate polynomial with rational coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector. Its degree is reported as std::nullopt, standing for
/// minus infinity; callers must handle that case explicitly.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  RationalPoly(int constant) : RationalPoly(Rational(constant)) {}  // NOLINT
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly monomial(const Rational& c, std::size_t degree);
  static RationalPoly variable() { return monomial(Rational(1), 1); }

  std::optional<std::size_t> degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const;
  /// Zero for the zero polynomial.
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& x) const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& s);
  RationalPoly operator-() const;

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "1/2*n^2 - 1/2*n".
  std::string to_string(char var = 'n') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial long division. Throws on division by zero.
std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& num, const RationalPoly& den);

using PolyMatrix = Matrix<RationalPoly>;

/// C(n, i+1) = n(n-1)...(n-i)/(i+1)! as a polynomial in n.
RationalPoly binomial_poly(unsigned i);

/// Exact determinant of a square polynomial matrix (fraction-free elimination over Q[n]).
RationalPoly polydet(const PolyMatrix& m);

PolyMatrix to_poly(const RationalMatrix& m);
RationalMatrix evaluate(const PolyMatrix& m, const Rational& x);

}  // namespace plovkit
