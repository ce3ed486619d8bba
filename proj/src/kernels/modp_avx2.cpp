// Compiled with -mavx2; only reached when the CPU reports AVX2.

#include "pdcong/kernels/modp.hpp"

#include <cassert>
#include <immintrin.h>

namespace pdcong::kernels::avx2 {

namespace {

// High 32 bits of the unsigned 32x32 product, lane by lane.
inline __m256i mulhi_epu32(__m256i x, __m256i b)
{
    const __m256i even = _mm256_mul_epu32(x, b);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), b);
    return _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

// x < p * 2^16 assumed; returns x mod p.
inline __m256i reduce(__m256i x, __m256i pv, __m256i bv)
{
    const __m256i q = mulhi_epu32(x, bv);
    const __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
    // r in [0, 2p): if r >= p then r - p < r, otherwise r - p wraps above r
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

} // namespace

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, const Modulus& m)
{
    assert(dst.size() == src.size());
    const std::size_t n = dst.size();
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(m.p));
    const __m256i bv = _mm256_set1_epi32(static_cast<int>(m.barrett));
    const __m256i fv = _mm256_set1_epi32(static_cast<int>(factor));

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
        __m256i x = _mm256_add_epi32(_mm256_loadu_si256(d),
                                     _mm256_mullo_epi32(fv, _mm256_loadu_si256(s)));
        _mm256_storeu_si256(d, reduce(x, pv, bv));
    }
    const std::uint64_t p = m.p;
    for (; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{factor} * src[i]) % p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, const Modulus& m)
{
    const std::size_t n = dst.size();
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(m.p));
    const __m256i bv = _mm256_set1_epi32(static_cast<int>(m.barrett));
    const __m256i fv = _mm256_set1_epi32(static_cast<int>(factor));

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
        _mm256_storeu_si256(d, reduce(_mm256_mullo_epi32(fv, _mm256_loadu_si256(d)), pv, bv));
    }
    const std::uint64_t p = m.p;
    for (; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((std::uint64_t{factor} * dst[i]) % p);
}

} // namespace pdcong::kernels::avx2
