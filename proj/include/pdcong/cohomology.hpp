#pragma once

// Cohomology of cochain complexes over Q, F_p and Z; cohomology bases with
// coordinate maps; cup products and the Poincare duality check.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdcong/complex.hpp"
#include "pdcong/echelon.hpp"
#include "pdcong/smith.hpp"
#include "pdcong/sparse.hpp"

namespace pdcong {

/// Runtime choice of coefficient field: p == 0 means the rationals.
struct Coefficients {
    std::uint32_t p = 0;

    static Coefficients rational() { return {0}; }
    static Coefficients mod(std::uint32_t prime) { return {prime}; }
    bool is_rational() const { return p == 0; }
    std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
    bool operator==(const Coefficients&) const = default;
};

/// Calls fn(RationalField{}) or fn(PrimeField{p}).
template <typename Fn>
decltype(auto) with_field(Coefficients c, Fn&& fn)
{
    if (c.is_rational())
        return std::forward<Fn>(fn)(RationalField{});
    return std::forward<Fn>(fn)(PrimeField{c.p});
}

struct GradedBetti {
    std::string coefficients;                  // "Q", "F3", "Z"
    std::vector<std::size_t> betti;            // b_0 .. b_dim
    std::vector<std::vector<mpz_class>> torsion; // integer coefficients only

    std::size_t total() const;
    std::size_t at(int k) const { return k >= 0 && k < static_cast<int>(betti.size()) ? betti[k] : 0; }
    long euler_characteristic() const;
    std::string to_string() const;
};

/// Column reductions of delta^0, delta^1, ... with clearing: the lows of
/// delta^{k-1} are skipped when reducing delta^k.
template <Field F>
std::vector<ColumnReduction<F>> reduce_coboundaries(const CochainComplex& cc, const F& f, int up_to,
                                                    const std::vector<bool>& track)
{
    std::vector<ColumnReduction<F>> out;
    std::vector<bool> mask;
    for (int k = 0; k <= up_to && k < cc.dim(); ++k) {
        const bool keep = k < static_cast<int>(track.size()) && track[k];
        out.emplace_back(f, sparse_columns(cc.coboundary[k], f), cc.cells[k + 1], k > 0 ? &mask : nullptr, keep);
        mask = out.back().low_mask();
    }
    return out;
}

template <Field F>
GradedBetti cohomology_betti(const CochainComplex& cc, const F& f)
{
    GradedBetti out;
    out.coefficients = f.name();
    const int top = cc.dim();
    std::vector<std::size_t> ranks(top + 1, 0);
    const auto red = reduce_coboundaries(cc, f, top - 1, {});
    for (int k = 0; k < top; ++k)
        ranks[k] = red[k].rank();
    for (int k = 0; k <= top; ++k)
        out.betti.push_back(cc.cells[k] - ranks[k] - (k > 0 ? ranks[k - 1] : 0));
    return out;
}

GradedBetti cohomology(const CochainComplex& cc, Coefficients c);
GradedBetti cohomology(const SimplicialComplex& x, Coefficients c);

/// Free ranks and torsion divisors of H^*(X; Z) via Smith normal forms of
/// the integral coboundaries.
GradedBetti integral_cohomology(const CochainComplex& cc);
GradedBetti integral_cohomology(const SimplicialComplex& x);

/// A basis of H^k together with the map from cocycles to coordinates.
///
/// With R = delta^k V the reduced coboundary, cocycles have the basis of V
/// columns over zero R columns, with distinct lows.  The lows of the reduced
/// delta^{k-1} mark the boundaries; the remaining zero columns ("essential")
/// give the representatives.  Coordinates come from eliminating lows.
template <Field F>
class CohomologyBasis {
public:
    CohomologyBasis(const F& f, const CochainComplex& cc, int k) : field_(f)
    {
        std::vector<bool> track(std::max(k + 1, 0), false);
        if (k >= 0)
            track[k] = true;
        const auto red = reduce_coboundaries(cc, f, k, track);
        *this = CohomologyBasis(f, cc, k, k > 0 ? &red[k - 1] : nullptr, k < cc.dim() ? &red[k] : nullptr);
    }

    /// From precomputed reductions of delta^{k-1} and delta^k (the latter with
    /// kernel tracking); either may be null when the map does not exist.
    CohomologyBasis(const F& f, const CochainComplex& cc, int k, const ColumnReduction<F>* prev,
                    const ColumnReduction<F>* cur)
        : field_(f)
    {
        cochain_dim_ = k >= 0 && k <= cc.dim() ? cc.cells[k] : 0;
        boundary_of_low_.assign(cochain_dim_, nullptr);
        class_of_low_.assign(cochain_dim_, npos);
        if (prev)
            for (std::size_t j = 0; j < prev->columns(); ++j)
                if (!prev->is_zero_column(j))
                    boundary_of_low_[prev->reduced(j).low()] = &prev->reduced(j);
        for (std::size_t j = 0; j < cochain_dim_; ++j) {
            if (boundary_of_low_[j])
                continue;
            if (cur && !cur->is_zero_column(j))
                continue;
            // zero column that is not a boundary low: essential
            class_of_low_[j] = reps_.size();
            reps_.push_back(cur ? cur->basis(j) : SparseVec<F>::unit(f, j));
        }
        // own the boundary columns
        for (std::size_t i = 0; i < cochain_dim_; ++i)
            if (boundary_of_low_[i]) {
                boundaries_.push_back(*boundary_of_low_[i]);
                boundary_index_.push_back(i);
            }
        boundary_of_low_.clear();
        boundary_slot_.assign(cochain_dim_, npos);
        for (std::size_t b = 0; b < boundary_index_.size(); ++b)
            boundary_slot_[boundary_index_[b]] = b;
    }

    std::size_t dim() const { return reps_.size(); }
    std::size_t cochain_dim() const { return cochain_dim_; }
    Vec<F> representative(std::size_t i) const { return reps_[i].to_dense(field_, cochain_dim_); }
    const SparseVec<F>& sparse_representative(std::size_t i) const { return reps_[i]; }

    /// Coordinates of the class of a cocycle in the representative basis.
    /// Throws std::invalid_argument if the vector is not a cocycle.
    Vec<F> coordinates(const Vec<F>& cocycle) const { return coordinates(SparseVec<F>::from_dense(field_, cocycle)); }

    Vec<F> coordinates(SparseVec<F> z) const
    {
        const F& f = field_;
        Vec<F> out(reps_.size(), f.zero());
        while (!z.empty()) {
            const std::size_t i = z.low();
            if (boundary_slot_[i] != npos) {
                const auto& b = boundaries_[boundary_slot_[i]];
                sparse_axpy(f, z, b, f.neg(f.mul(z.low_value(), f.inv(b.low_value()))));
            } else if (class_of_low_[i] != npos) {
                const std::size_t c = class_of_low_[i];
                out[c] = z.low_value();
                sparse_axpy(f, z, reps_[c], f.neg(out[c]));
            } else {
                throw std::invalid_argument("cohomology coordinates: vector is not a cocycle");
            }
        }
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    F field_;
    std::size_t cochain_dim_ = 0;
    std::vector<const SparseVec<F>*> boundary_of_low_;
    std::vector<SparseVec<F>> boundaries_;
    std::vector<std::size_t> boundary_index_;
    std::vector<std::size_t> boundary_slot_;
    std::vector<std::size_t> class_of_low_;
    std::vector<SparseVec<F>> reps_;
};

/// Cohomology bases in every degree from one pass of reductions.
template <Field F>
std::vector<CohomologyBasis<F>> cohomology_bases(const F& f, const CochainComplex& cc)
{
    const int top = cc.dim();
    const auto red = reduce_coboundaries(cc, f, top - 1, std::vector<bool>(std::max(top, 0), true));
    std::vector<CohomologyBasis<F>> out;
    for (int k = 0; k <= top; ++k)
        out.emplace_back(f, cc, k, k > 0 ? &red[k - 1] : nullptr, k < top ? &red[k] : nullptr);
    return out;
}

/// Cochain-level cup product a (degree i) with b (degree j) on X.
template <Field F>
Vec<F> cup_cochains(const SimplicialComplex& x, const F& f, const Vec<F>& a, int i, const Vec<F>& b, int j)
{
    const auto& top = x.simplices(i + j);
    Vec<F> out(top.size(), f.zero());
    for (std::size_t t = 0; t < top.size(); ++t) {
        const Simplex& s = top[t];
        Simplex front(s.begin(), s.begin() + i + 1);
        Simplex back(s.begin() + i, s.end());
        const auto& av = a[*x.index_of(front)];
        if (f.is_zero(av))
            continue;
        const auto& bv = b[*x.index_of(back)];
        if (!f.is_zero(bv))
            out[t] = f.mul(av, bv);
    }
    return out;
}

template <Field F>
struct CohomologyRing {
    F field;
    std::vector<CohomologyBasis<F>> degrees;
    /// products[{i, j}][a * dim(H^j) + b] = coordinates of h^i_a * h^j_b in H^{i+j}
    std::map<std::pair<int, int>, std::vector<Vec<F>>> products;
    /// Top degree with b_n = 1 and the functional phi(h^n_0) = 1, when present.
    std::optional<int> formal_dim;
    std::optional<Vec<F>> orientation;

    std::size_t betti(int k) const { return k >= 0 && k < static_cast<int>(degrees.size()) ? degrees[k].dim() : 0; }

    const Vec<F>& product(int i, std::size_t a, int j, std::size_t b) const
    {
        return products.at({i, j}).at(a * betti(j) + b);
    }

    /// Matrix of phi(h^i_a * h^{n-i}_b); requires an orientation.
    Matrix<F> pairing_matrix(int i) const
    {
        const int n = formal_dim.value();
        Matrix<F> m(field, betti(i), betti(n - i));
        for (std::size_t a = 0; a < betti(i); ++a)
            for (std::size_t b = 0; b < betti(n - i); ++b)
                m(a, b) = product(i, a, n - i, b).at(0);
        return m;
    }
};

template <Field F>
CohomologyRing<F> cup_pairing(const SimplicialComplex& x, const F& f)
{
    CohomologyRing<F> ring{f, {}, {}, std::nullopt, std::nullopt};
    ring.degrees = cohomology_bases(f, x.cochain_complex());
    for (int i = 0; i <= x.dim(); ++i)
        for (int j = 0; i + j <= x.dim(); ++j) {
            std::vector<Vec<F>> table;
            for (std::size_t a = 0; a < ring.betti(i); ++a)
                for (std::size_t b = 0; b < ring.betti(j); ++b)
                    table.push_back(ring.degrees[i + j].coordinates(
                        cup_cochains(x, f, ring.degrees[i].representative(a), i, ring.degrees[j].representative(b), j)));
            ring.products[{i, j}] = std::move(table);
        }
    for (int k = x.dim(); k >= 0; --k)
        if (ring.betti(k) > 0) {
            if (ring.betti(k) == 1) {
                ring.formal_dim = k;
                ring.orientation = Vec<F>{f.one()};
            }
            break;
        }
    return ring;
}

class DisconnectedError : public ComplexError {
public:
    explicit DisconnectedError(std::size_t components)
        : ComplexError("complex is not connected (" + std::to_string(components) + " components)"),
          components_(components)
    {
    }
    std::size_t components() const { return components_; }

private:
    std::size_t components_;
};

template <Field F>
struct PdResult {
    bool is_pd = false;
    std::optional<int> formal_dim;
    std::optional<Vec<F>> orientation;
    std::vector<std::size_t> betti;
    std::string reason; // empty when is_pd
};

/// Poincare duality over a field via the cup pairing
/// H^i x H^{n-i} -> H^n = k.  Throws DisconnectedError unless connected.
template <Field F>
PdResult<F> pd_check(const SimplicialComplex& x, const F& f)
{
    const std::size_t comps = x.component_count();
    if (comps != 1)
        throw DisconnectedError(comps);
    CohomologyRing<F> ring = cup_pairing(x, f);
    PdResult<F> out;
    for (int k = 0; k <= x.dim(); ++k)
        out.betti.push_back(ring.betti(k));
    int top = 0;
    for (int k = 0; k <= x.dim(); ++k)
        if (ring.betti(k) > 0)
            top = k;
    if (!ring.formal_dim) {
        out.reason = "top cohomology H^" + std::to_string(top) + " has dimension " + std::to_string(ring.betti(top));
        return out;
    }
    const int n = *ring.formal_dim;
    for (int i = 0; i <= n; ++i) {
        if (ring.betti(i) != ring.betti(n - i)) {
            out.reason = "b_" + std::to_string(i) + " != b_" + std::to_string(n - i);
            return out;
        }
        if (!is_invertible(ring.pairing_matrix(i))) {
            out.reason = "pairing H^" + std::to_string(i) + " x H^" + std::to_string(n - i) + " is singular";
            return out;
        }
    }
    out.is_pd = true;
    out.formal_dim = n;
    out.orientation = ring.orientation;
    return out;
}

} // namespace pdcong
