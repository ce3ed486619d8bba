#pragma once

// Simplicial Z/p actions given by a vertex permutation.

#include <string>
#include <utility>
#include <vector>

#include "pdcong/cohomology.hpp"
#include "pdcong/complex.hpp"

namespace pdcong {

class ActionError : public ComplexError {
public:
    using ComplexError::ComplexError;
};

struct GroupAction {
    std::uint32_t p = 0;
    std::vector<Vertex> map; // generator sigma on vertex indices

    Vertex operator()(Vertex v) const { return map[v]; }
    /// sigma^k (k taken mod p).
    GroupAction power(unsigned k) const;
    bool is_identity() const;
    /// Image simplex, sorted, and the sign of the sorting permutation.
    std::pair<Simplex, int> apply(const Simplex& s) const;
    /// Vertex cycles of length > 1, each starting at its least vertex.
    std::vector<std::vector<Vertex>> cycles() const;

    static GroupAction identity(const SimplicialComplex& x, std::uint32_t p);
};

/// Checks that map is a permutation with sigma^p = id that sends simplices to
/// simplices.  p must be an odd prime.
GroupAction validate_action(const SimplicialComplex& x, std::vector<Vertex> map, std::uint32_t p);
/// Label form: unlisted vertices are fixed.
GroupAction validate_action(const SimplicialComplex& x, const std::vector<std::pair<std::string, std::string>>& map,
                            std::uint32_t p);

/// Every setwise-invariant simplex is fixed vertexwise.
bool is_regular(const SimplicialComplex& x, const GroupAction& a);

struct RegularModel {
    SimplicialComplex complex;
    GroupAction action;
    unsigned subdivisions = 0;
};

/// One barycentric subdivision carrying the induced action on barycenters.
/// The result preserves the (dimension, lex) vertex order on every simplex,
/// so it also acts simplicially on staircase products.
RegularModel subdivide_action(const SimplicialComplex& x, const GroupAction& a);

/// Barycentric subdivision with the induced action on barycenters until the
/// action is regular.  One subdivision always suffices: the induced action
/// preserves the dimension of the simplex a barycenter belongs to.
RegularModel make_regular(const SimplicialComplex& x, const GroupAction& a);

/// Subcomplex of simplices fixed vertexwise.  Throws ActionError when the
/// action is not regular.
SimplicialComplex fixed_subcomplex(const SimplicialComplex& x, const GroupAction& a);

/// sigma^# on C^k: (sigma^# c)[tau] = sign[tau] * c[image[tau]].
struct CochainPermutation {
    std::vector<std::size_t> image;
    std::vector<int> sign;

    template <Field F>
    Vec<F> pull(const F& f, const Vec<F>& c) const
    {
        Vec<F> out(c.size(), f.zero());
        for (std::size_t t = 0; t < image.size(); ++t) {
            const auto& v = c[image[t]];
            out[t] = sign[t] > 0 ? v : f.neg(v);
        }
        return out;
    }
};

CochainPermutation cochain_permutation(const SimplicialComplex& x, const GroupAction& a, int k);

/// Matrices of g^* on the cohomology bases of CohomologyBasis, one per degree.
/// Column a holds the coordinates of g^* applied to basis class a.
template <Field F>
std::vector<Matrix<F>> induced_cohomology_action(const SimplicialComplex& x, const GroupAction& a, const F& f)
{
    const auto bases = cohomology_bases(f, x.cochain_complex());
    std::vector<Matrix<F>> out;
    for (int k = 0; k <= x.dim(); ++k) {
        const CohomologyBasis<F>& basis = bases[k];
        const CochainPermutation perm = cochain_permutation(x, a, k);
        Matrix<F> m(f, basis.dim(), basis.dim());
        for (std::size_t j = 0; j < basis.dim(); ++j) {
            const Vec<F> col = basis.coordinates(perm.pull(f, basis.representative(j)));
            for (std::size_t i = 0; i < basis.dim(); ++i)
                m(i, j) = col[i];
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// Sum over degrees of (-1)^i trace(g^* on H^i(X; Q)).
long lefschetz_number(const SimplicialComplex& x, const GroupAction& a);

/// Whether g^* is the identity on H^*(X; Q).
bool trivial_rational_action_check(const SimplicialComplex& x, const GroupAction& a);

/// No elementary divisor of integral cohomology has p-adic valuation 1.
bool bockstein_condition(const CochainComplex& cc, std::uint32_t p);
bool bockstein_condition(const SimplicialComplex& x, std::uint32_t p);

struct TFRDegree {
    std::size_t t = 0;              // blocks of size 1
    std::size_t f = 0;              // blocks of size p
    std::size_t r = 0;              // blocks of size p - 1
    std::vector<std::size_t> other; // any other sizes
    std::vector<std::size_t> blocks;

    std::size_t dim(std::uint32_t p) const;
};

struct TFRDecomposition {
    std::uint32_t p = 0;
    std::vector<TFRDegree> degrees;

    std::size_t dim_t() const;
    std::size_t dim_f() const; // as F_p-dimensions: p per block
    std::size_t dim_r() const; // (p - 1) per block
    bool has_other() const;
    std::string to_string() const;
};

/// Jordan blocks of g^* - 1 on H^i(X; F_p) classified by size.
TFRDecomposition tfr_decomposition(const SimplicialComplex& x, const GroupAction& a);

/// Orbit cell complex of a free action.  Cell k of degree i is the orbit of
/// representatives[i][k] (the lexicographically least member); its cochains are
/// the invariant cochains of X, so it computes H^*(X/G) with any coefficients.
struct QuotientComplex {
    CochainComplex cochains;
    std::vector<std::vector<Simplex>> representatives;
};

QuotientComplex quotient_complex(const SimplicialComplex& x, const GroupAction& a);

} // namespace pdcong
