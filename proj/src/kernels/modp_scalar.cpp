#include "pdcong/kernels/modp.hpp"

#include <cassert>

namespace pdcong::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, const Modulus& m)
{
    assert(dst.size() == src.size());
    const std::uint64_t p = m.p;
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{factor} * src[i]) % p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, const Modulus& m)
{
    const std::uint64_t p = m.p;
    for (auto& x : dst)
        x = static_cast<std::uint32_t>((std::uint64_t{factor} * x) % p);
}

} // namespace pdcong::kernels::scalar
