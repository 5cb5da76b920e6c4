#include <immintrin.h>

#include "plovkit/modp.hpp"

namespace plovkit::modp::avx2 {

namespace {

// floor(2^32 / p). For x < 2^32 the Barrett quotient (x * m) >> 32 is at most
// one below floor(x / p), so a single conditional subtract finishes the reduction.
constexpr std::uint32_t kBarrett = 65551;

inline __m256i reduce_lanes(__m256i x) {
  const __m256i m = _mm256_set1_epi64x(kBarrett);
  const __m256i p = _mm256_set1_epi32(static_cast<int>(kPrime));
  const __m256i hi_mask = _mm256_set1_epi64x(static_cast<long long>(0xffffffff00000000ULL));
  // even lanes: 64-bit product, quotient lands in the low half after the shift
  __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
  // odd lanes: product's high half is already in the odd slot
  __m256i q_odd = _mm256_and_si256(_mm256_mul_epu32(_mm256_srli_epi64(x, 32), m), hi_mask);
  __m256i q = _mm256_or_si256(q_even, q_odd);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  // r < 2p; unsigned min picks r - p unless it wrapped
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

void submul(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor) {
  const std::uint32_t neg = factor == 0 ? 0 : kPrime - factor;
  const __m256i f = _mm256_set1_epi32(static_cast<int>(neg));
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, f));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce_lanes(x));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + neg * src[i]) % kPrime;
}

void scale(std::span<std::uint32_t> dst, std::uint32_t factor) {
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce_lanes(_mm256_mullo_epi32(d, f)));
  }
  for (; i < n; ++i) dst[i] = (dst[i] * factor) % kPrime;
}

}  // namespace plovkit::modp::avx2
