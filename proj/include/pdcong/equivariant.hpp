#pragma once

// Borel cohomology H^*(X_G; F_p) of a simplicial Z/p action, computed from the
// periodic resolution tensored with the cochains of X.

#include <cstdint>
#include <string>
#include <vector>

#include "pdcong/complex.hpp"
#include "pdcong/field.hpp"
#include "pdcong/group_action.hpp"
#include "pdcong/matrix.hpp"

namespace pdcong {

/// K^{i,j} = C^j(X; F_p) for i >= 0, horizontal maps sigma^# - 1 (i even) and
/// N = sum_k (sigma^#)^k (i odd), total differential d_h + (-1)^i delta.
/// Only Tot^0 .. Tot^top are built, so cohomology is exact below top.
class EquivariantComplex {
public:
    EquivariantComplex(const SimplicialComplex& x, const GroupAction& a, int top);

    std::uint32_t p() const { return p_; }
    int top() const { return top_; }
    int base_dim() const { return base_dim_; }
    /// Tot as a cochain complex (integer entries, reduce mod p).
    const CochainComplex& total() const { return total_; }
    /// Offset of block K^{n-j, j} inside Tot^n.
    std::size_t offset(int n, int j) const { return offsets_[n][j]; }

    /// sigma^# - 1 and N on C^j.
    const SparseIntMatrix& difference(int j) const { return difference_[j]; }
    const SparseIntMatrix& norm(int j) const { return norm_[j]; }

    /// dim H^n for n < top.
    std::vector<std::size_t> betti(int lo, int hi) const;

private:
    std::uint32_t p_;
    int top_;
    int base_dim_;
    std::vector<SparseIntMatrix> difference_;
    std::vector<SparseIntMatrix> norm_;
    std::vector<std::vector<std::size_t>> offsets_;
    CochainComplex total_;
};

/// dim H^n_G(X; F_p) for n = lo..hi.
std::vector<std::size_t> equivariant_betti(const SimplicialComplex& x, const GroupAction& a, int lo, int hi);

struct LocalizationReport {
    int base_dim = 0;
    std::size_t fixed_total = 0;     // dim H^*(X^G; F_p)
    std::size_t at_dim_plus_1 = 0;   // dim H^{dim X + 1}_G
    std::size_t at_dim_plus_2 = 0;   // dim H^{dim X + 2}_G
    bool holds = false;
};

/// Compares the stabilized equivariant Betti numbers with the fixed set.  The
/// fixed set is read off a regular model when the action is not regular.
LocalizationReport localization_check(const SimplicialComplex& x, const GroupAction& a);

struct GroupCohomologyDims {
    // ker(g-1)/im N and ker N/im(g-1)
    std::size_t even = 0;
    std::size_t odd = 0;
    // the same after setting the degree-one class s to zero: each parity
    // divided by the image of multiplication by s from the other parity
    std::size_t evaluated_even = 0;
    std::size_t evaluated_odd = 0;
};

/// Positive-degree cohomology of Z/p with coefficients in (V, g).  Throws
/// std::invalid_argument unless g^p = 1.
GroupCohomologyDims group_cohomology_dims(const Matrix<PrimeField>& g);

} // namespace pdcong
