#pragma once

// Dense matrices over a Field, plus the sparse integer matrices produced by
// simplicial coboundaries.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdcong/field.hpp"
#include "pdcong/kernels/modp.hpp"

namespace pdcong {

template <Field F>
using Vec = std::vector<typename F::value_type>;

template <Field F>
bool is_zero_vector(const F& f, const Vec<F>& v)
{
    return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <Field F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero())
    {
    }

    static Matrix identity(F field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = m.field_.one();
        return m;
    }

    /// Builds a matrix whose rows are the given vectors (all of length cols).
    static Matrix from_rows(F field, std::size_t cols, const std::vector<Vec<F>>& rows)
    {
        Matrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("row length mismatch");
            std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Vec<F> row_vec(std::size_t r) const { return Vec<F>(row(r).begin(), row(r).end()); }
    Vec<F> col_vec(std::size_t c) const
    {
        Vec<F> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v.push_back((*this)(r, c));
        return v;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [&](const value_type& v) { return field_.is_zero(v); });
    }

    bool operator==(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!field_.equal(data_[i], o.data_[i]))
                return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const { return combine(o, false); }
    Matrix operator-(const Matrix& o) const { return combine(o, true); }
    Matrix operator*(const Matrix& o) const;

    Vec<F> apply(const Vec<F>& v) const
    {
        assert(v.size() == cols_);
        Vec<F> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!field_.is_zero((*this)(r, c)) && !field_.is_zero(v[c]))
                    out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
        return out;
    }

    Matrix power(unsigned k) const
    {
        assert(rows_ == cols_);
        Matrix result = identity(field_, rows_);
        for (unsigned i = 0; i < k; ++i)
            result = result * (*this);
        return result;
    }

private:
    Matrix combine(const Matrix& o, bool subtract) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix out(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] = subtract ? field_.sub(data_[i], o.data_[i]) : field_.add(data_[i], o.data_[i]);
        return out;
    }

    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

// Row operations used by elimination.  The prime-field specialization hands
// contiguous row tails to the vector kernels.
template <Field F>
struct RowOps {
    using T = typename F::value_type;

    // dst += factor * src, restricted to the listed columns (nonzeros of src)
    static void axpy(const F& f, std::span<T> dst, std::span<const T> src, const T& factor,
                     std::span<const std::size_t> support)
    {
        for (std::size_t c : support)
            dst[c] = f.add(dst[c], f.mul(factor, src[c]));
    }
    static void scale(const F& f, std::span<T> row, const T& factor, std::size_t from)
    {
        for (std::size_t c = from; c < row.size(); ++c)
            if (!f.is_zero(row[c]))
                row[c] = f.mul(factor, row[c]);
    }
    static constexpr bool wants_support = true;
};

template <>
struct RowOps<PrimeField> {
    using T = std::uint32_t;

    static void axpy_tail(const PrimeField& f, std::span<T> dst, std::span<const T> src, T factor,
                          std::size_t from)
    {
        kernels::axpy_mod(dst.subspan(from), src.subspan(from), factor, f.kernel_modulus());
    }
    static void scale(const PrimeField& f, std::span<T> row, T factor, std::size_t from)
    {
        kernels::scale_mod(row.subspan(from), factor, f.kernel_modulus());
    }
    static constexpr bool wants_support = false;
};

template <Field F>
Matrix<F> Matrix<F>::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    if constexpr (RowOps<F>::wants_support) {
        for (std::size_t k = 0; k < o.rows_; ++k) {
            std::vector<std::size_t> support;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (!field_.is_zero(o(k, c)))
                    support.push_back(c);
            if (support.empty())
                continue;
            for (std::size_t r = 0; r < rows_; ++r)
                if (!field_.is_zero((*this)(r, k)))
                    RowOps<F>::axpy(field_, out.row(r), o.row(k), (*this)(r, k), support);
        }
    } else {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k)
                if (!field_.is_zero((*this)(r, k)))
                    RowOps<F>::axpy_tail(field_, out.row(r), o.row(k), (*this)(r, k), 0);
    }
    return out;
}

/// Integer matrix in coordinate form; the natural output of coboundary maps.
struct SparseIntMatrix {
    struct Entry {
        std::size_t row;
        std::size_t col;
        long value;
    };
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Entry> entries;

    template <Field F>
    Matrix<F> to_field(const F& f) const
    {
        Matrix<F> m(f, rows, cols);
        for (const auto& e : entries)
            m(e.row, e.col) = f.add(m(e.row, e.col), f.from_int(e.value));
        return m;
    }
};

/// Dense arbitrary-precision integer matrix (input to the Smith normal form).
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    explicit IntMatrix(const SparseIntMatrix& s);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> data_;
};

} // namespace pdcong
