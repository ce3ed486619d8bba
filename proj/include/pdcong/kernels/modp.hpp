#pragma once

// Row kernels for dense elimination over F_p.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant.  The public entry points dispatch once at load time based on
// the running CPU; the per-ISA entry points are exported so tests can
// check bit-equivalence against the reference.
//
// All kernels require p < 2^16 and inputs already reduced into [0, p).

#include <cstdint>
#include <span>
#include <string_view>

namespace pdcong::kernels {

/// Precomputed Barrett constant for reduction of 32-bit values mod p.
struct Modulus {
    std::uint32_t p;
    std::uint32_t barrett; // floor(2^32 / p)

    explicit Modulus(std::uint32_t prime)
        : p(prime), barrett(static_cast<std::uint32_t>((std::uint64_t{1} << 32) / prime))
    {
    }
};

// dst[i] = (dst[i] + factor * src[i]) mod p
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, const Modulus& m);
// dst[i] = (factor * dst[i]) mod p
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, const Modulus& m);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, const Modulus& m);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, const Modulus& m);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PDCONG_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, const Modulus& m);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, const Modulus& m);
} // namespace avx2
#else
#define PDCONG_HAVE_AVX2_KERNELS 0
#endif

bool cpu_has_avx2();

/// Name of the variant the dispatcher selected ("avx2" or "scalar").
std::string_view active_variant();

/// Force the scalar path (used by benchmarks and by PDCONG_FORCE_SCALAR=1).
void force_scalar(bool on);

} // namespace pdcong::kernels
