#pragma once

// Arithmetic modulo a fixed 16-bit prime, used as a fast lower-bound pass in
// front of exact elimination. Row kernels come in a scalar reference version
// and an AVX2 version; the active one is chosen once at runtime.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "plovkit/matrix.hpp"

namespace plovkit::modp {

/// Largest prime below 2^16. (p-1)^2 + p < 2^32, so one fused multiply-add fits a 32-bit lane.
inline constexpr std::uint32_t kPrime = 65521;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA supported by this build and CPU. PLOVKIT_FORCE_SCALAR=1 in the
/// environment pins the scalar path.
Isa active_isa();

/// True when the AVX2 kernels are compiled in and the CPU reports AVX2.
bool avx2_available();

// dst[i] = (dst[i] - factor * src[i]) mod p. All inputs must already be < p.
void submul(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor);
// dst[i] = dst[i] * factor mod p.
void scale(std::span<std::uint32_t> dst, std::uint32_t factor);

namespace scalar {
void submul(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor);
void scale(std::span<std::uint32_t> dst, std::uint32_t factor);
}  // namespace scalar

#if defined(PLOVKIT_WITH_AVX2)
namespace avx2 {
void submul(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor);
void scale(std::span<std::uint32_t> dst, std::uint32_t factor);
}  // namespace avx2
#endif

std::uint32_t reduce(const BigInt& v);
std::uint32_t inverse(std::uint32_t a);

/// Row-major residue matrix.
struct ResidueMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  std::span<std::uint32_t> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

/// Reduces an integer-valued matrix; std::nullopt if any entry is not an integer.
std::optional<ResidueMatrix> reduce(const RationalMatrix& m);
ResidueMatrix reduce(const IntMatrix& m);

std::size_t rank(ResidueMatrix m, Isa isa = active_isa());
std::uint32_t det(ResidueMatrix m, Isa isa = active_isa());
ResidueMatrix multiply(const ResidueMatrix& a, const ResidueMatrix& b, Isa isa = active_isa());

}  // namespace plovkit::modp
