#include "pdcong/equivariant.hpp"

#include <stdexcept>

#include "pdcong/cohomology.hpp"
#include "pdcong/echelon.hpp"

namespace pdcong {

namespace {

void append_block(SparseIntMatrix& out, const SparseIntMatrix& block, std::size_t row0, std::size_t col0, long scale)
{
    for (const auto& e : block.entries)
        out.entries.push_back({row0 + e.row, col0 + e.col, scale * e.value});
}

} // namespace

EquivariantComplex::EquivariantComplex(const SimplicialComplex& x, const GroupAction& a, int top)
    : p_(a.p), top_(top), base_dim_(x.dim())
{
    if (top < 0)
        throw std::invalid_argument("top degree must be nonnegative");
    const CochainComplex& cc = x.cochain_complex();
    const int d = x.dim();
    for (int j = 0; j <= d; ++j) {
        const CochainPermutation perm = cochain_permutation(x, a, j);
        const std::size_t n = cc.cells[j];
        SparseIntMatrix diff{n, n, {}}, norm{n, n, {}};
        std::vector<std::size_t> img(n);
        std::vector<long> sign(n, 1);
        for (std::size_t t = 0; t < n; ++t)
            img[t] = t;
        for (std::uint32_t k = 0; k < p_; ++k) {
            for (std::size_t t = 0; t < n; ++t)
                norm.entries.push_back({t, img[t], sign[t]});
            // (sigma^#)^{k+1}: img[t] <- img[image[t]], sign[t] <- sign[t'] * sign(t)
            std::vector<std::size_t> next(n);
            std::vector<long> next_sign(n);
            for (std::size_t t = 0; t < n; ++t) {
                next[t] = img[perm.image[t]];
                next_sign[t] = perm.sign[t] * sign[perm.image[t]];
            }
            img = std::move(next);
            sign = std::move(next_sign);
        }
        for (std::size_t t = 0; t < n; ++t) {
            diff.entries.push_back({t, perm.image[t], perm.sign[t]});
            diff.entries.push_back({t, t, -1});
        }
        difference_.push_back(std::move(diff));
        norm_.push_back(std::move(norm));
    }

    // Tot^n = sum over 0 <= j <= min(n, d) of K^{n-j, j}
    offsets_.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        std::size_t off = 0;
        for (int j = 0; j <= d && j <= n; ++j) {
            offsets_[n].push_back(off);
            off += cc.cells[j];
        }
        total_.cells.push_back(off);
    }
    for (int n = 0; n < top; ++n) {
        SparseIntMatrix m{total_.cells[n + 1], total_.cells[n], {}};
        for (int j = 0; j <= d && j <= n; ++j) {
            const int i = n - j;
            const SparseIntMatrix& h = (i % 2 == 0) ? difference_[j] : norm_[j];
            append_block(m, h, offsets_[n + 1][j], offsets_[n][j], 1);
            if (j < d)
                append_block(m, cc.coboundary[j], offsets_[n + 1][j + 1], offsets_[n][j], i % 2 == 0 ? 1 : -1);
        }
        total_.coboundary.push_back(std::move(m));
    }
}

std::vector<std::size_t> EquivariantComplex::betti(int lo, int hi) const
{
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("bad degree range");
    if (hi >= top_)
        throw std::invalid_argument("degree " + std::to_string(hi) + " needs a complex built past it");
    const PrimeField f(p_);
    const GradedBetti b = cohomology_betti(total_, f);
    return std::vector<std::size_t>(b.betti.begin() + lo, b.betti.begin() + hi + 1);
}

std::vector<std::size_t> equivariant_betti(const SimplicialComplex& x, const GroupAction& a, int lo, int hi)
{
    if (x.is_empty())
        return std::vector<std::size_t>(hi >= lo && lo >= 0 ? hi - lo + 1 : 0, 0);
    return EquivariantComplex(x, a, hi + 1).betti(lo, hi);
}

LocalizationReport localization_check(const SimplicialComplex& x, const GroupAction& a)
{
    LocalizationReport out;
    out.base_dim = x.dim();
    const int d = std::max(x.dim(), 0);
    const auto b = equivariant_betti(x, a, d + 1, d + 2);
    out.at_dim_plus_1 = b[0];
    out.at_dim_plus_2 = b[1];
    const RegularModel model = make_regular(x, a);
    const SimplicialComplex fixed = fixed_subcomplex(model.complex, model.action);
    out.fixed_total = fixed.is_empty() ? 0 : cohomology(fixed, Coefficients{a.p}).total();
    out.holds = out.at_dim_plus_1 == out.fixed_total && out.at_dim_plus_2 == out.fixed_total;
    return out;
}

GroupCohomologyDims group_cohomology_dims(const Matrix<PrimeField>& g)
{
    const PrimeField& f = g.field();
    const std::uint32_t p = f.characteristic();
    const std::size_t n = g.rows();
    if (g.cols() != n)
        throw std::invalid_argument("operator must be square");
    const auto id = Matrix<PrimeField>::identity(f, n);
    if (!(g.power(p) == id))
        throw std::invalid_argument("operator does not satisfy g^p = 1");

    const Matrix<PrimeField> y = g - id;
    Matrix<PrimeField> norm(f, n, n), s(f, n, n), gk = id;
    for (std::uint32_t k = 0; k < p; ++k) {
        norm = norm + gk;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                s(r, c) = f.add(s(r, c), f.mul(f.from_int(k), gk(r, c)));
        gk = gk * g;
    }
    const auto ky = rank_and_kernel(y);
    const auto kn = rank_and_kernel(norm);

    GroupCohomologyDims out;
    out.even = ky.kernel_basis.size() - kn.rank;
    out.odd = kn.kernel_basis.size() - ky.rank;

    // rank of s: H^even -> H^odd is dim(ker Y + im Y) - rank Y
    auto span_dim = [&](const std::vector<Vec<PrimeField>>& extra, const Matrix<PrimeField>& image) {
        EchelonBasis<PrimeField> e(f, n);
        for (std::size_t c = 0; c < n; ++c)
            e.insert(image.col_vec(c));
        for (const auto& v : extra)
            e.insert(v);
        return e.size();
    };
    const std::size_t s_even_odd = span_dim(ky.kernel_basis, y) - ky.rank;
    // s: H^odd -> H^even sends v in ker N to S v, S = sum_k k g^k
    std::vector<Vec<PrimeField>> images;
    for (const auto& v : kn.kernel_basis)
        images.push_back(s.apply(v));
    const std::size_t s_odd_even = span_dim(images, norm) - kn.rank;
    out.evaluated_even = out.even - s_odd_even;
    out.evaluated_odd = out.odd - s_even_odd;
    return out;
}

} // namespace pdcong
