#include "plovkit/modp.hpp"

namespace plovkit::modp::scalar {

void submul(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor) {
  const std::uint32_t neg = factor == 0 ? 0 : kPrime - factor;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = (dst[i] + neg * src[i]) % kPrime;
}

void scale(std::span<std::uint32_t> dst, std::uint32_t factor) {
  for (auto& v : dst) v = (v * factor) % kPrime;
}

}  // namespace plovkit::modp::scalar
