#pragma once

// Sparse vectors and left-to-right column reduction (R = M V) over a field.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "pdcong/matrix.hpp"

namespace pdcong {

/// Nonzero entries sorted by index.
template <Field F>
struct SparseVec {
    using T = typename F::value_type;
    std::vector<std::pair<std::size_t, T>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t low() const { return entries.back().first; }
    const T& low_value() const { return entries.back().second; }

    static SparseVec unit(const F& f, std::size_t i) { return SparseVec{{{i, f.one()}}}; }

    static SparseVec from_dense(const F& f, const Vec<F>& v)
    {
        SparseVec out;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!f.is_zero(v[i]))
                out.entries.emplace_back(i, v[i]);
        return out;
    }

    Vec<F> to_dense(const F& f, std::size_t n) const
    {
        Vec<F> out(n, f.zero());
        for (const auto& [i, x] : entries)
            out[i] = x;
        return out;
    }
};

/// dst += factor * src
template <Field F>
void sparse_axpy(const F& f, SparseVec<F>& dst, const SparseVec<F>& src, const typename F::value_type& factor)
{
    std::vector<std::pair<std::size_t, typename F::value_type>> out;
    out.reserve(dst.entries.size() + src.entries.size());
    auto a = dst.entries.begin(), ae = dst.entries.end();
    auto b = src.entries.begin(), be = src.entries.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == ae || b->first < a->first) {
            out.emplace_back(b->first, f.mul(factor, b->second));
            ++b;
        } else {
            auto v = f.add(a->second, f.mul(factor, b->second));
            if (!f.is_zero(v))
                out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    dst.entries = std::move(out);
}

/// Columns of a SparseIntMatrix over a field.
template <Field F>
std::vector<SparseVec<F>> sparse_columns(const SparseIntMatrix& m, const F& f)
{
    std::vector<SparseVec<F>> cols(m.cols);
    for (const auto& e : m.entries) {
        auto v = f.from_int(e.value);
        if (!f.is_zero(v))
            cols[e.col].entries.emplace_back(e.row, v);
    }
    for (auto& c : cols) {
        std::sort(c.entries.begin(), c.entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        // merge duplicates
        std::vector<std::pair<std::size_t, typename F::value_type>> merged;
        for (auto& e : c.entries) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second = f.add(merged.back().second, e.second);
            else
                merged.push_back(std::move(e));
        }
        std::erase_if(merged, [&](const auto& e) { return f.is_zero(e.second); });
        c.entries = std::move(merged);
    }
    return cols;
}

/// Reduces the columns of M left to right so that nonzero reduced columns have
/// distinct lows.  Columns flagged in `cleared` are known to reduce to zero and
/// are skipped.  With track_kernel, V (M V = R) is kept, so the V columns of
/// zero R columns form a kernel basis with distinct lows.
template <Field F>
class ColumnReduction {
public:
    ColumnReduction(const F& f, std::vector<SparseVec<F>> columns, std::size_t rows,
                    const std::vector<bool>* cleared = nullptr, bool track_kernel = false)
        : field_(f), reduced_(std::move(columns)), column_of_low_(rows, npos), cleared_(reduced_.size(), false)
    {
        const std::size_t n = reduced_.size();
        if (track_kernel)
            basis_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (cleared && (*cleared)[j]) {
                cleared_[j] = true;
                reduced_[j].entries.clear();
                continue;
            }
            if (track_kernel)
                basis_[j] = SparseVec<F>::unit(f, j);
            auto& col = reduced_[j];
            while (!col.empty()) {
                const std::size_t m = column_of_low_[col.low()];
                if (m == npos)
                    break;
                const auto factor = f.neg(f.mul(col.low_value(), f.inv(reduced_[m].low_value())));
                sparse_axpy(f, col, reduced_[m], factor);
                if (track_kernel)
                    sparse_axpy(f, basis_[j], basis_[m], factor);
            }
            if (!col.empty()) {
                column_of_low_[col.low()] = j;
                ++rank_;
            }
        }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t rank() const { return rank_; }
    std::size_t columns() const { return reduced_.size(); }
    const SparseVec<F>& reduced(std::size_t j) const { return reduced_[j]; }
    /// V column (only with track_kernel and for columns that were not cleared).
    const SparseVec<F>& basis(std::size_t j) const { return basis_.at(j); }
    bool is_cleared(std::size_t j) const { return cleared_[j]; }
    bool is_zero_column(std::size_t j) const { return reduced_[j].empty(); }
    /// Column whose reduced form has the given low, or npos.
    std::size_t column_of_low(std::size_t row) const { return column_of_low_[row]; }
    /// Row indices that are lows of some reduced column.
    std::vector<bool> low_mask() const
    {
        std::vector<bool> m(column_of_low_.size(), false);
        for (std::size_t r = 0; r < m.size(); ++r)
            m[r] = column_of_low_[r] != npos;
        return m;
    }

private:
    F field_;
    std::vector<SparseVec<F>> reduced_;
    std::vector<SparseVec<F>> basis_;
    std::vector<std::size_t> column_of_low_;
    std::vector<bool> cleared_;
    std::size_t rank_ = 0;
};

/// Rank of a sparse integer matrix over F.
template <Field F>
std::size_t sparse_rank(const SparseIntMatrix& m, const F& f)
{
    return ColumnReduction<F>(f, sparse_columns(m, f), m.rows).rank();
}

} // namespace pdcong
