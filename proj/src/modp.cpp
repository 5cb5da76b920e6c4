#include "plovkit/modp.hpp"

#include <stdexcept>

namespace plovkit::modp {

std::uint32_t reduce(const BigInt& v) {
  BigInt r = v % kPrime;
  if (r < 0) r += kPrime;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse(std::uint32_t a) {
  if (a % kPrime == 0) throw std::domain_error("modp::inverse of zero");
  std::uint64_t base = a % kPrime;
  std::uint64_t result = 1;
  for (std::uint32_t e = kPrime - 2; e != 0; e >>= 1) {
    if (e & 1U) result = result * base % kPrime;
    base = base * base % kPrime;
  }
  return static_cast<std::uint32_t>(result);
}

std::optional<ResidueMatrix> reduce(const RationalMatrix& m) {
  ResidueMatrix out{m.rows(), m.cols(), std::vector<std::uint32_t>(m.rows() * m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      if (v.get_den() != 1) return std::nullopt;
      out.data[r * m.cols() + c] = reduce(v.get_num());
    }
  return out;
}

ResidueMatrix reduce(const IntMatrix& m) {
  ResidueMatrix out{m.rows(), m.cols(), std::vector<std::uint32_t>(m.rows() * m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.data[r * m.cols() + c] = reduce(m(r, c));
  return out;
}

}  // namespace plovkit::modp
