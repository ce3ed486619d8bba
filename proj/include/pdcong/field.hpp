#pragma once

// Coefficient fields used throughout the library.
//
// A field type F provides a value_type and the usual operations as member
// functions; all matrix and cohomology code is templated on F.  Two models:
//   PrimeField     residues mod a prime p < 2^16, stored in [0, p)
//   RationalField  GMP rationals, always canonicalized

#include <cstdint>
#include <concepts>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "pdcong/kernels/modp.hpp"

namespace pdcong {

class PrimeField {
public:
    using value_type = std::uint32_t;

    /// Largest admissible modulus; the vector kernels rely on (p-1)^2 + p < 2^32.
    static constexpr std::uint32_t max_prime = 65521;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t modulus() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const
    {
        long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type from_mpz(const mpz_class& v) const;
    value_type from_mpq(const mpq_class& v) const;

    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    bool equal(value_type a, value_type b) const { return a == b; }

    value_type add(value_type a, value_type b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    value_type inv(value_type a) const;

    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p_); }

    const kernels::Modulus& kernel_modulus() const { return mod_; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
    kernels::Modulus mod_;
};

class RationalField {
public:
    using value_type = mpq_class;

    std::uint32_t characteristic() const { return 0; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const { return v; }
    value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }
    value_type from_mpq(const mpq_class& v) const { return v; }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const
    {
        if (sgn(a) == 0)
            throw std::domain_error("inverse of zero");
        return 1 / a;
    }

    std::string to_string(const value_type& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

    bool operator==(const RationalField&) const = default;
};

template <typename F>
concept Field = requires(const F f, const typename F::value_type& a, long n) {
    { f.zero() } -> std::convertible_to<typename F::value_type>;
    { f.one() } -> std::convertible_to<typename F::value_type>;
    { f.from_int(n) } -> std::convertible_to<typename F::value_type>;
    { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

bool is_prime(std::uint64_t n);

/// Parses "3", "-2", "5/7" into a rational; throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

} // namespace pdcong
