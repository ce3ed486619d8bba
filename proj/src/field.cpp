#include "pdcong/field.hpp"

#include <cctype>

namespace pdcong {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), mod_(p < 2 ? 2 : p)
{
    if (!is_prime(p))
        throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    if (p > max_prime)
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " exceeds 65521");
}

PrimeField::value_type PrimeField::from_mpz(const mpz_class& v) const
{
    mpz_class r = v % p_;
    if (r < 0)
        r += p_;
    return static_cast<value_type>(r.get_ui());
}

PrimeField::value_type PrimeField::from_mpq(const mpq_class& v) const
{
    const value_type den = from_mpz(v.get_den());
    if (den == 0)
        throw std::domain_error("rational " + v.get_str() + " has denominator divisible by " +
                                std::to_string(p_));
    return mul(from_mpz(v.get_num()), inv(den));
}

PrimeField::value_type PrimeField::inv(value_type a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    if (t < 0)
        t += p_;
    return static_cast<value_type>(t);
}

mpq_class parse_rational(const std::string& text)
{
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational number: '" + text + "'");
    mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace pdcong
