#include "pdcong/kernels/modp.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace pdcong::kernels {

namespace {

using AxpyFn = void (*)(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::uint32_t,
                        const Modulus&);
using ScaleFn = void (*)(std::span<std::uint32_t>, std::uint32_t, const Modulus&);

struct Table {
    AxpyFn axpy;
    ScaleFn scale;
    const char* name;
};

constexpr Table scalar_table{&scalar::axpy_mod, &scalar::scale_mod, "scalar"};
#if PDCONG_HAVE_AVX2_KERNELS
constexpr Table avx2_table{&avx2::axpy_mod, &avx2::scale_mod, "avx2"};
#endif

const Table* select_table()
{
    const char* env = std::getenv("PDCONG_FORCE_SCALAR");
    if (env != nullptr && std::strcmp(env, "0") != 0 && *env != '\0')
        return &scalar_table;
#if PDCONG_HAVE_AVX2_KERNELS
    if (cpu_has_avx2())
        return &avx2_table;
#endif
    return &scalar_table;
}

std::atomic<const Table*>& active()
{
    static std::atomic<const Table*> table{select_table()};
    return table;
}

} // namespace

bool cpu_has_avx2()
{
#if PDCONG_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, const Modulus& m)
{
    active().load(std::memory_order_relaxed)->axpy(dst, src, factor, m);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, const Modulus& m)
{
    active().load(std::memory_order_relaxed)->scale(dst, factor, m);
}

std::string_view active_variant() { return active().load()->name; }

void force_scalar(bool on) { active().store(on ? &scalar_table : select_table()); }

} // namespace pdcong::kernels
