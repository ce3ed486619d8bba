#pragma once

// Gaussian elimination over a field: reduced row echelon form, rank,
// kernels, inverses, and an incremental echelon basis used to pick
// complements (cohomology representatives) and read off coordinates.

#include <optional>
#include <vector>

#include "pdcong/matrix.hpp"

namespace pdcong {

template <Field F>
struct Echelon {
    Matrix<F> reduced;                // RREF; rows past pivots.size() are zero
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row

    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

template <Field F>
void eliminate_column(Matrix<F>& m, std::size_t pivot_row, std::size_t col, std::size_t first_row,
                      bool above)
{
    const F& f = m.field();
    std::vector<std::size_t> support;
    if constexpr (RowOps<F>::wants_support) {
        auto pr = m.row(pivot_row);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!f.is_zero(pr[c]))
                support.push_back(c);
    }
    const std::size_t begin = above ? 0 : first_row;
    for (std::size_t r = begin; r < m.rows(); ++r) {
        if (r == pivot_row || f.is_zero(m(r, col)))
            continue;
        auto factor = f.neg(m(r, col));
        if constexpr (RowOps<F>::wants_support)
            RowOps<F>::axpy(f, m.row(r), m.row(pivot_row), factor, support);
        else
            RowOps<F>::axpy_tail(f, m.row(r), m.row(pivot_row), factor, col);
    }
}

} // namespace detail

/// Reduced row echelon form.  Pivots are chosen as the first nonzero entry
/// in each column scanning downward, so the result depends only on the input.
template <Field F>
Echelon<F> rref(Matrix<F> m)
{
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r)
            if (!f.is_zero(m(r, col))) {
                found = r;
                break;
            }
        if (found == m.rows())
            continue;
        m.swap_rows(row, found);
        if (!f.is_one(m(row, col)))
            RowOps<F>::scale(f, m.row(row), f.inv(m(row, col)), col);
        detail::eliminate_column(m, row, col, 0, true);
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m)
{
    // Row echelon without back-substitution is enough for the rank.
    Matrix<F> w = m;
    const F& f = w.field();
    std::size_t row = 0;
    for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        std::size_t found = w.rows();
        for (std::size_t r = row; r < w.rows(); ++r)
            if (!f.is_zero(w(r, col))) {
                found = r;
                break;
            }
        if (found == w.rows())
            continue;
        w.swap_rows(row, found);
        if (!f.is_one(w(row, col)))
            RowOps<F>::scale(f, w.row(row), f.inv(w(row, col)), col);
        detail::eliminate_column(w, row, col, row + 1, false);
        ++row;
    }
    return row;
}

template <Field F>
struct RankAndKernel {
    std::size_t rank;
    std::vector<Vec<F>> kernel_basis;
};

/// Rank and a kernel basis of m (as a map F^cols -> F^rows).  The basis is
/// the standard one read from the RREF: one vector per free column, with a 1
/// in that column.
template <Field F>
RankAndKernel<F> rank_and_kernel(const Matrix<F>& m)
{
    const F& f = m.field();
    Echelon<F> e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    RankAndKernel<F> out{e.rank(), {}};
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec<F> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (!f.is_zero(e.reduced(i, free)))
                v[e.pivots[i]] = f.neg(e.reduced(i, free));
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    Matrix<F> aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = m.field().one();
    }
    Echelon<F> e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix<F> inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

template <Field F>
bool is_invertible(const Matrix<F>& m)
{
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Echelon basis of a subspace of F^n, grown one vector at a time.  Rows are
/// kept fully reduced against each other, so the coefficient of row i in any
/// member of the span is that member's entry at pivot(i).
template <Field F>
class EchelonBasis {
public:
    EchelonBasis(F field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

    std::size_t size() const { return rows_.size(); }
    std::size_t ambient_dim() const { return dim_; }
    const Vec<F>& row(std::size_t i) const { return rows_[i]; }
    std::size_t pivot(std::size_t i) const { return pivots_[i]; }

    /// v minus its projection onto the span along the pivot coordinates.
    Vec<F> reduce(Vec<F> v) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto c = v[pivots_[i]];
            if (field_.is_zero(c))
                continue;
            const auto neg = field_.neg(c);
            for (std::size_t k = 0; k < dim_; ++k)
                if (!field_.is_zero(rows_[i][k]))
                    v[k] = field_.add(v[k], field_.mul(neg, rows_[i][k]));
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vec(reduce(v)); }

    /// Adds v if independent; returns the index of the new row or nullopt.
    /// Existing rows are re-reduced against the new pivot so the basis stays
    /// in reduced form (rows are kept in insertion order).
    std::optional<std::size_t> insert(const Vec<F>& v)
    {
        Vec<F> r = reduce(v);
        std::size_t piv = dim_;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!field_.is_zero(r[k])) {
                piv = k;
                break;
            }
        if (piv == dim_)
            return std::nullopt;
        const auto s = field_.inv(r[piv]);
        for (auto& x : r)
            if (!field_.is_zero(x))
                x = field_.mul(s, x);
        for (auto& other : rows_) {
            const auto c = other[piv];
            if (field_.is_zero(c))
                continue;
            const auto neg = field_.neg(c);
            for (std::size_t k = 0; k < dim_; ++k)
                if (!field_.is_zero(r[k]))
                    other[k] = field_.add(other[k], field_.mul(neg, r[k]));
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(piv);
        return rows_.size() - 1;
    }

    /// Coefficients of v (assumed in the span) with respect to the rows.
    Vec<F> coordinates(const Vec<F>& v) const
    {
        Vec<F> c;
        c.reserve(rows_.size());
        for (auto p : pivots_)
            c.push_back(v[p]);
        return c;
    }

private:
    bool is_zero_vec(const Vec<F>& v) const
    {
        for (const auto& x : v)
            if (!field_.is_zero(x))
                return false;
        return true;
    }

    F field_;
    std::size_t dim_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace pdcong
