#include <cstdlib>
#include <cstring>

#include "plovkit/modp.hpp"

namespace plovkit::modp {

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(PLOVKIT_WITH_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* force = std::getenv("PLOVKIT_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0) return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
  }();
  return isa;
}

namespace {

void submul_with(Isa isa, std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t f) {
#if defined(PLOVKIT_WITH_AVX2)
  if (isa == Isa::avx2 && avx2_available()) return avx2::submul(dst, src, f);
#endif
  (void)isa;
  scalar::submul(dst, src, f);
}

void scale_with(Isa isa, std::span<std::uint32_t> dst, std::uint32_t f) {
#if defined(PLOVKIT_WITH_AVX2)
  if (isa == Isa::avx2 && avx2_available()) return avx2::scale(dst, f);
#endif
  (void)isa;
  scalar::scale(dst, f);
}

}  // namespace

void submul(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor) {
  submul_with(active_isa(), dst, src, factor);
}

void scale(std::span<std::uint32_t> dst, std::uint32_t factor) { scale_with(active_isa(), dst, factor); }

// Elimination drivers live here so they can pick the kernel per call.

std::size_t rank(ResidueMatrix m, Isa isa) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.data[piv * m.cols + c] == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.data[piv * m.cols + j], m.data[r * m.cols + j]);
    scale_with(isa, m.row(r), inverse(m.data[r * m.cols + c]));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      std::uint32_t f = m.data[i * m.cols + c];
      if (f != 0) submul_with(isa, m.row(i), m.row(r), f);
    }
    ++r;
  }
  return r;
}

std::uint32_t det(ResidueMatrix m, Isa isa) {
  if (m.rows != m.cols) return 0;
  std::uint64_t acc = 1;
  for (std::size_t c = 0; c < m.cols; ++c) {
    std::size_t piv = c;
    while (piv < m.rows && m.data[piv * m.cols + c] == 0) ++piv;
    if (piv == m.rows) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.data[piv * m.cols + j], m.data[c * m.cols + j]);
      acc = (acc * (kPrime - 1)) % kPrime;
    }
    const std::uint32_t pv = m.data[c * m.cols + c];
    acc = (acc * pv) % kPrime;
    scale_with(isa, m.row(c), inverse(pv));
    for (std::size_t i = c + 1; i < m.rows; ++i) {
      std::uint32_t f = m.data[i * m.cols + c];
      if (f != 0) submul_with(isa, m.row(i), m.row(c), f);
    }
  }
  return static_cast<std::uint32_t>(acc);
}

ResidueMatrix multiply(const ResidueMatrix& a, const ResidueMatrix& b, Isa isa) {
  ResidueMatrix out{a.rows, b.cols, std::vector<std::uint32_t>(a.rows * b.cols, 0)};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < a.cols; ++l) {
      std::uint32_t f = a.data[i * a.cols + l];
      // out_i += f * b_l  ==  out_i -= (p - f) * b_l
      if (f != 0) submul_with(isa, out.row(i), b.row(l), kPrime - f);
    }
  return out;
}

}  // namespace plovkit::modp
