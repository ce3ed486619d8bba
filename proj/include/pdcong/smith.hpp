#pragma once

#include <optional>
#include <vector>

#include "pdcong/echelon.hpp"
#include "pdcong/matrix.hpp"

namespace pdcong {

struct SmithForm {
    /// d_1 | d_2 | ... padded with zeros to min(rows, cols); all nonnegative.
    std::vector<mpz_class> divisors;
    std::size_t rank = 0;
    /// Present when requested: left * m * right == diag(divisors).
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;

    /// Nonzero divisors greater than one (the torsion coefficients).
    std::vector<mpz_class> torsion() const;
};

/// Smith normal form by unimodular row/column operations.  The pivot is the
/// nonzero entry of least absolute value in the active block, ties broken by
/// lowest (row, col).
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Divisors of the Smith form of a sparse matrix (unit pivots are eliminated
/// sparsely first).  Padded with zeros to min(rows, cols).
std::vector<mpz_class> smith_divisors(const SparseIntMatrix& m);

/// p-adic valuation of a nonzero integer.
unsigned p_valuation(const mpz_class& n, unsigned long p);

/// Jordan block sizes of a nilpotent operator, read from the kernel profile
/// dim ker n^k.  Sorted in decreasing order.  Throws std::invalid_argument if
/// n is not square or n^bound != 0.
template <Field F>
std::vector<std::size_t> nilpotent_block_sizes(const Matrix<F>& n, unsigned bound)
{
    if (n.rows() != n.cols())
        throw std::invalid_argument("nilpotent_block_sizes: matrix must be square");
    const std::size_t dim = n.rows();
    if (dim == 0)
        return {};

    // kernel dims k_0 = 0, k_1, ..., k_bound (= dim)
    std::vector<std::size_t> kdim{0};
    Matrix<F> power = n;
    for (unsigned k = 1; k <= bound; ++k) {
        kdim.push_back(dim - rank(power));
        if (k < bound)
            power = power * n;
    }
    if (kdim.back() != dim)
        throw std::invalid_argument("nilpotent_block_sizes: operator is not nilpotent within the bound");

    // blocks of size >= k: kdim[k] - kdim[k-1]
    std::vector<std::size_t> at_least(bound + 2, 0);
    for (unsigned k = 1; k <= bound; ++k)
        at_least[k] = kdim[k] - kdim[k - 1];
    std::vector<std::size_t> sizes;
    for (unsigned k = bound; k >= 1; --k) {
        const std::size_t exactly = at_least[k] - at_least[k + 1];
        sizes.insert(sizes.end(), exactly, k);
    }
    return sizes;
}

} // namespace pdcong
