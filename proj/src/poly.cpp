#include "plovkit/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace plovkit {

RationalPoly::RationalPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPoly(std::move(v));
}

std::optional<std::size_t> RationalPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational RationalPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational RationalPoly::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string RationalPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& num, const RationalPoly& den) {
  auto dd = den.degree();
  if (!dd) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  auto nd = num.degree();
  if (!nd || *nd < *dd) return {RationalPoly(), num};
  std::vector<Rational> quot(*nd - *dd + 1, Rational(0));
  const Rational& lead = den.coefficients().back();
  for (std::size_t i = *nd + 1; i-- > *dd;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / lead;
    quot[i - *dd] = q;
    for (std::size_t j = 0; j <= *dd; ++j) rem[i - *dd + j] -= q * den.coefficients()[j];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly binomial_poly(unsigned i) {
  RationalPoly p(1);
  BigInt factorial = 1;
  for (unsigned j = 0; j <= i; ++j) {
    p *= RationalPoly(std::vector<Rational>{Rational(-static_cast<long>(j)), Rational(1)});
    factorial *= (j + 1);
  }
  p *= Rational(BigInt(1), factorial);
  return p;
}

RationalPoly polydet(const PolyMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("polydet: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return RationalPoly(1);
  PolyMatrix m = input;
  RationalPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return RationalPoly();
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        RationalPoly t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto [q, r] = divide(t, prev);
        if (!r.is_zero()) throw std::logic_error("polydet: inexact Bareiss division");
        m(i, j) = std::move(q);
      }
      m(i, k) = RationalPoly();
    }
    prev = m(k, k);
  }
  RationalPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

PolyMatrix to_poly(const RationalMatrix& m) {
  return m.map([](const Rational& v) { return RationalPoly(v); });
}

RationalMatrix evaluate(const PolyMatrix& m, const Rational& x) {
  return m.map([&](const RationalPoly& p) { return p.evaluate(x); });
}

}  // namespace plovkit
