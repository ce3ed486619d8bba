#include "pdcong/cohomology.hpp"

#include <sstream>

namespace pdcong {

std::size_t GradedBetti::total() const
{
    std::size_t t = 0;
    for (auto b : betti)
        t += b;
    return t;
}

long GradedBetti::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t k = 0; k < betti.size(); ++k)
        chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(betti[k]);
    return chi;
}

std::string GradedBetti::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < betti.size(); ++k)
        os << (k ? "," : "") << betti[k];
    os << ")";
    for (std::size_t k = 0; k < torsion.size(); ++k)
        for (const auto& d : torsion[k])
            os << " Z/" << d.get_str() << "@" << k;
    return os.str();
}

GradedBetti cohomology(const CochainComplex& cc, Coefficients c)
{
    return with_field(c, [&](const auto& f) { return cohomology_betti(cc, f); });
}

GradedBetti cohomology(const SimplicialComplex& x, Coefficients c) { return cohomology(x.cochain_complex(), c); }

GradedBetti integral_cohomology(const CochainComplex& cc)
{
    GradedBetti out;
    out.coefficients = "Z";
    const int top = cc.dim();
    std::vector<std::size_t> ranks(top + 1, 0);
    out.torsion.assign(top + 1, {});
    for (int k = 0; k < top; ++k) {
        const auto divisors = smith_divisors(cc.coboundary[k]);
        // coker(delta^k) torsion lives in H^{k+1}
        for (const auto& d : divisors) {
            if (d != 0)
                ++ranks[k];
            if (d > 1)
                out.torsion[k + 1].push_back(d);
        }
    }
    for (int k = 0; k <= top; ++k)
        out.betti.push_back(cc.cells[k] - ranks[k] - (k > 0 ? ranks[k - 1] : 0));
    return out;
}

GradedBetti integral_cohomology(const SimplicialComplex& x) { return integral_cohomology(x.cochain_complex()); }

} // namespace pdcong
