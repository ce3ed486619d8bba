#pragma once

// Finite-dimensional (Z/2 x N)-bigraded graded-commutative algebras with an
// orientation, and derivations that lower the second grading.  Signs always
// use the total degree |x| = eps + j mod 2.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdcong/echelon.hpp"
#include "pdcong/hypothesis.hpp"
#include "pdcong/matrix.hpp"

namespace pdcong {

class AlgebraError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Bidegree {
    int eps = 0; // 0 or 1
    int j = 0;

    int parity() const { return (eps + j) & 1; }
    Bidegree operator+(Bidegree o) const { return {(eps + o.eps) & 1, j + o.j}; }
    Bidegree operator-(Bidegree o) const { return {(eps + o.eps) & 1, j - o.j}; }
    auto operator<=>(const Bidegree&) const = default;
};

inline std::string to_string(Bidegree d)
{
    return "(" + std::to_string(d.eps) + "," + std::to_string(d.j) + ")";
}

inline int koszul_sign(int pa, int pb) { return (pa & pb & 1) ? -1 : 1; }

template <Field F>
class BigradedAlgebra {
public:
    using T = typename F::value_type;

    /// Basis element 0 is the unit; products with it are filled in.  All other
    /// products start at zero.
    BigradedAlgebra(F f, std::vector<std::string> names, std::vector<Bidegree> degrees)
        : field_(std::move(f)), names_(std::move(names)), degrees_(std::move(degrees))
    {
        if (names_.empty())
            throw AlgebraError("algebra needs at least the unit");
        if (names_.size() != degrees_.size())
            throw AlgebraError("names and bidegrees differ in length");
        if (degrees_[0] != Bidegree{0, 0})
            throw AlgebraError("the unit must sit in bidegree (0,0)");
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            if ((degrees_[i].eps != 0 && degrees_[i].eps != 1) || degrees_[i].j < 0)
                throw AlgebraError("bad bidegree " + to_string(degrees_[i]) + " for " + names_[i]);
            if (names_[i].empty())
                throw AlgebraError("empty basis name");
            for (std::size_t k = 0; k < i; ++k)
                if (names_[k] == names_[i])
                    throw AlgebraError("duplicate basis name " + names_[i]);
        }
        const std::size_t n = dim();
        table_.assign(n * n, Vec<F>(n, field_.zero()));
        for (std::size_t i = 0; i < n; ++i) {
            table_[i][i] = field_.one();
            table_[i * n][i] = field_.one();
        }
    }

    std::size_t dim() const { return names_.size(); }
    const F& field() const { return field_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    Bidegree degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<Bidegree>& degrees() const { return degrees_; }
    int parity(std::size_t i) const { return degrees_[i].parity(); }

    std::optional<std::size_t> index_of(const std::string& name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return i;
        return std::nullopt;
    }

    void set_product(std::size_t a, std::size_t b, Vec<F> value)
    {
        if (a >= dim() || b >= dim() || value.size() != dim())
            throw AlgebraError("product index or vector size out of range");
        table_[a * dim() + b] = std::move(value);
    }

    const Vec<F>& product(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

    Vec<F> basis_vector(std::size_t i) const
    {
        Vec<F> v(dim(), field_.zero());
        v[i] = field_.one();
        return v;
    }

    Vec<F> zero_vector() const { return Vec<F>(dim(), field_.zero()); }

    Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const
    {
        Vec<F> out = zero_vector();
        for (std::size_t a = 0; a < dim(); ++a) {
            if (field_.is_zero(x[a]))
                continue;
            for (std::size_t b = 0; b < dim(); ++b) {
                if (field_.is_zero(y[b]))
                    continue;
                const auto c = field_.mul(x[a], y[b]);
                const Vec<F>& p = product(a, b);
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!field_.is_zero(p[k]))
                        out[k] = field_.add(out[k], field_.mul(c, p[k]));
            }
        }
        return out;
    }

    std::vector<std::size_t> indices_of(Bidegree d) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (degrees_[i] == d)
                out.push_back(i);
        return out;
    }

    /// Dimension of each occupied bidegree.
    std::map<Bidegree, std::size_t> profile() const
    {
        std::map<Bidegree, std::size_t> out;
        for (auto d : degrees_)
            ++out[d];
        return out;
    }

    /// Whether v is supported in bidegree d only.
    bool is_homogeneous(const Vec<F>& v, Bidegree d) const
    {
        for (std::size_t i = 0; i < dim(); ++i)
            if (!field_.is_zero(v[i]) && degrees_[i] != d)
                return false;
        return true;
    }

    /// First violated algebra axiom, or nullopt when the structure is valid.
    std::optional<std::string> validate() const
    {
        if (field_.characteristic() == 2)
            return "characteristic 2 is not supported";
        const std::size_t n = dim();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (!is_homogeneous(product(a, b), degrees_[a] + degrees_[b]))
                    return "product " + names_[a] + "*" + names_[b] + " is not in bidegree " +
                           to_string(degrees_[a] + degrees_[b]);
        for (std::size_t a = 0; a < n; ++a)
            if (product(0, a) != basis_vector(a) || product(a, 0) != basis_vector(a))
                return "unit law fails for " + names_[a];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                Vec<F> ba = product(b, a);
                if (koszul_sign(parity(a), parity(b)) < 0)
                    for (auto& x : ba)
                        x = field_.neg(x);
                if (ba != product(a, b))
                    return "graded commutativity fails for " + names_[a] + ", " + names_[b];
            }
        for (std::size_t a = 1; a < n; ++a)
            for (std::size_t b = 1; b < n; ++b) {
                const Vec<F>& ab = product(a, b);
                for (std::size_t c = 1; c < n; ++c) {
                    if (multiply(ab, basis_vector(c)) != multiply(basis_vector(a), product(b, c)))
                        return "associativity fails for " + names_[a] + ", " + names_[b] + ", " + names_[c];
                }
            }
        return std::nullopt;
    }

private:
    F field_;
    std::vector<std::string> names_;
    std::vector<Bidegree> degrees_;
    std::vector<Vec<F>> table_; // dim x dim products, row-major
};

template <Field F>
struct Orientation {
    Vec<F> phi;
    int n = 0;
};

/// phi = dual of basis element `top`; n is read off its bidegree.
template <Field F>
Orientation<F> orientation_from_top(const BigradedAlgebra<F>& a, std::size_t top)
{
    if (a.degree(top).eps != 0)
        throw AlgebraError("orientation class must lie in bidegree (0,n)");
    return {a.basis_vector(top), a.degree(top).j};
}

/// Scales phi so it takes the value 1 on the first basis element where it is
/// nonzero.
template <Field F>
Orientation<F> normalized(const F& f, Orientation<F> o)
{
    for (const auto& x : o.phi)
        if (!f.is_zero(x)) {
            const auto s = f.inv(x);
            for (auto& y : o.phi)
                y = f.mul(s, y);
            break;
        }
    return o;
}

template <Field F>
typename F::value_type evaluate(const F& f, const Orientation<F>& o, const Vec<F>& v)
{
    auto s = f.zero();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!f.is_zero(v[i]) && !f.is_zero(o.phi[i]))
            s = f.add(s, f.mul(v[i], o.phi[i]));
    return s;
}

/// Gram matrix of zeta(a, b) = phi(a b) on the basis.
template <Field F>
Matrix<F> pairing_matrix(const BigradedAlgebra<F>& a, const Orientation<F>& o)
{
    const F& f = a.field();
    Matrix<F> g(f, a.dim(), a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y)
            g(x, y) = evaluate(f, o, a.product(x, y));
    return g;
}

struct PdCheck {
    bool connected = false;
    bool nondegenerate = false;
    int formal_dim = 0;

    bool is_pd() const { return connected && nondegenerate; }
};

/// Throws AlgebraError when phi is zero or nonzero outside bidegree (0, n).
template <Field F>
PdCheck check_pd(const BigradedAlgebra<F>& a, const Orientation<F>& o)
{
    const F& f = a.field();
    if (o.phi.size() != a.dim())
        throw AlgebraError("orientation has the wrong length");
    bool nonzero = false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (f.is_zero(o.phi[i]))
            continue;
        nonzero = true;
        if (a.degree(i) != Bidegree{0, o.n})
            throw AlgebraError("orientation is nonzero on " + a.name(i) + " in bidegree " + to_string(a.degree(i)) +
                               ", outside (0," + std::to_string(o.n) + ")");
    }
    if (!nonzero)
        throw AlgebraError("no valid orientation: phi vanishes identically");
    PdCheck out;
    out.formal_dim = o.n;
    out.connected = a.indices_of({0, 0}).size() == 1;
    out.nondegenerate = is_invertible(pairing_matrix(a, o));
    return out;
}

struct EulerAndDim {
    std::size_t total_dim = 0;
    long chi = 0;
};

template <Field F>
EulerAndDim euler_and_dim(const BigradedAlgebra<F>& a)
{
    EulerAndDim out{a.dim(), 0};
    for (std::size_t i = 0; i < a.dim(); ++i)
        out.chi += a.parity(i) == 0 ? 1 : -1;
    return out;
}

inline long mod4(long x) { return ((x % 4) + 4) % 4; }

struct EvenCongruence {
    std::size_t total_dim = 0;
    long chi = 0;
    bool holds = false;
};

/// dim A = chi(A) mod 4 for a PD algebra of even formal dimension.
template <Field F>
EvenCongruence lemma_even_congruence(const BigradedAlgebra<F>& a, const Orientation<F>& o)
{
    if (a.field().characteristic() == 2)
        throw AlgebraError("characteristic 2 is excluded");
    if (o.n % 2 != 0)
        throw AlgebraError("formal dimension " + std::to_string(o.n) + " is odd");
    if (!check_pd(a, o).is_pd())
        throw AlgebraError("not a connected Poincare duality algebra");
    const EulerAndDim e = euler_and_dim(a);
    return {e.total_dim, e.chi, mod4(static_cast<long>(e.total_dim)) == mod4(e.chi)};
}

/// Column i of `map` is delta(basis i); delta shifts bidegrees by `shift`.
template <Field F>
struct Differential {
    Matrix<F> map;
    Bidegree shift;

    static Differential zero(const BigradedAlgebra<F>& a, Bidegree shift = {0, -1})
    {
        return {Matrix<F>(a.field(), a.dim(), a.dim()), shift};
    }

    Vec<F> apply(const Vec<F>& v) const { return map.apply(v); }
    Vec<F> of(std::size_t i) const { return map.col_vec(i); }
};

struct DerivationCheck {
    bool valid = true;
    std::string reason;
    std::optional<std::pair<std::size_t, std::size_t>> pair; // first failing Leibniz pair

    explicit operator bool() const { return valid; }
};

/// Homogeneity and the shift direction only; no algebraic conditions.
template <Field F>
std::optional<std::string> check_shift(const BigradedAlgebra<F>& a, const Differential<F>& d)
{
    if (d.map.rows() != a.dim() || d.map.cols() != a.dim())
        return "differential has the wrong size";
    if (d.shift.j >= 0)
        return "shift " + to_string(d.shift) + " does not lower the second grading";
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!a.is_homogeneous(d.of(i), a.degree(i) + d.shift))
            return "delta(" + a.name(i) + ") is not in bidegree " + to_string(a.degree(i) + d.shift);
    return std::nullopt;
}

template <Field F>
DerivationCheck check_derivation(const BigradedAlgebra<F>& a, const Differential<F>& d)
{
    const F& f = a.field();
    if (auto err = check_shift(a, d))
        return {false, *err, std::nullopt};
    const Matrix<F> sq = d.map * d.map;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_zero_vector(f, sq.col_vec(i)))
            return {false, "delta^2(" + a.name(i) + ") != 0", std::nullopt};
    std::vector<Vec<F>> images(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        images[i] = d.of(i);
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y) {
            const Vec<F> lhs = d.apply(a.product(x, y));
            Vec<F> rhs = a.multiply(images[x], a.basis_vector(y));
            const Vec<F> second = a.multiply(a.basis_vector(x), images[y]);
            const bool negate = a.parity(x) == 1;
            for (std::size_t k = 0; k < a.dim(); ++k)
                rhs[k] = negate ? f.sub(rhs[k], second[k]) : f.add(rhs[k], second[k]);
            if (lhs != rhs)
                return {false, "Leibniz rule fails on (" + a.name(x) + ", " + a.name(y) + ")", std::pair{x, y}};
        }
    return {};
}

template <Field F>
struct AlgebraHomology {
    std::optional<BigradedAlgebra<F>> algebra; // absent when H = 0
    std::optional<Orientation<F>> orientation; // absent when phi vanishes on cycles
    std::vector<Vec<F>> representatives;       // cycle in A for each basis class of H

    std::size_t dim() const { return representatives.size(); }
    bool is_zero() const { return representatives.empty(); }
};

namespace detail {

/// Homogeneous part of the homology in one bidegree: representatives plus a
/// linear map reading coordinates of a cycle modulo boundaries.
template <Field F>
struct HomologyPiece {
    std::vector<std::size_t> support; // basis indices of A in this bidegree
    EchelonBasis<F> boundaries;
    std::vector<Vec<F>> reps;   // local coordinates
    Matrix<F> left_inverse;     // reps.size() x support.size()
};

template <Field F>
Vec<F> restrict_to(const Vec<F>& v, const std::vector<std::size_t>& idx)
{
    Vec<F> out;
    out.reserve(idx.size());
    for (auto i : idx)
        out.push_back(v[i]);
    return out;
}

} // namespace detail

/// H(A, delta) with the induced product, the class of 1 first.  Needs
/// delta^2 = 0 and a homogeneous shift; the product is meaningful when delta
/// is a derivation.
template <Field F>
AlgebraHomology<F> homology(const BigradedAlgebra<F>& a, const Differential<F>& d, const Orientation<F>& o)
{
    const F& f = a.field();
    if (auto err = check_shift(a, d))
        throw AlgebraError(*err);
    if (!(d.map * d.map).is_zero())
        throw AlgebraError("delta^2 != 0");

    std::map<Bidegree, detail::HomologyPiece<F>> pieces;
    for (const auto& [deg, count] : a.profile()) {
        (void)count;
        const auto idx = a.indices_of(deg);
        const auto target = a.indices_of(deg + d.shift);
        const auto source = a.indices_of(deg - d.shift);

        detail::HomologyPiece<F> piece{idx, EchelonBasis<F>(f, idx.size()), {}, Matrix<F>(f, 0, idx.size())};
        for (auto s : source)
            piece.boundaries.insert(detail::restrict_to<F>(d.of(s), idx));

        Matrix<F> local(f, target.size(), idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (std::size_t r = 0; r < target.size(); ++r)
                local(r, c) = d.map(target[r], idx[c]);
        std::vector<Vec<F>> candidates;
        if (deg == Bidegree{0, 0} && is_zero_vector(f, d.of(0))) {
            Vec<F> unit(idx.size(), f.zero());
            unit[0] = f.one(); // index 0 of A is the first entry of (0,0)
            candidates.push_back(std::move(unit));
        }
        for (auto& z : rank_and_kernel(local).kernel_basis)
            candidates.push_back(std::move(z));

        EchelonBasis<F> span = piece.boundaries;
        for (auto& z : candidates)
            if (span.insert(z))
                piece.reps.push_back(std::move(z));
        if (piece.reps.empty())
            continue;

        // left inverse of the reduced representatives
        const std::size_t k = piece.reps.size(), m = idx.size();
        Matrix<F> aug(f, m, k + m);
        for (std::size_t c = 0; c < k; ++c) {
            const Vec<F> r = piece.boundaries.reduce(piece.reps[c]);
            for (std::size_t i = 0; i < m; ++i)
                aug(i, c) = r[i];
        }
        for (std::size_t i = 0; i < m; ++i)
            aug(i, k + i) = f.one();
        const Echelon<F> e = rref(std::move(aug));
        piece.left_inverse = Matrix<F>(f, k, m);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < m; ++c)
                piece.left_inverse(r, c) = e.reduced(r, k + c);
        pieces.emplace(deg, std::move(piece));
    }

    AlgebraHomology<F> out;
    if (pieces.empty())
        return out;
    auto unit_piece = pieces.find(Bidegree{0, 0});
    auto is_unit = [&](const Vec<F>& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!(i == 0 ? f.is_one(r[i]) : f.is_zero(r[i])))
                return false;
        return true;
    };
    if (unit_piece == pieces.end() || !is_unit(unit_piece->second.reps.front()))
        throw AlgebraError("unit is not a nonzero class but homology is nonzero; delta is not a derivation");

    std::vector<std::string> names;
    std::vector<Bidegree> degrees;
    std::map<Bidegree, std::size_t> offset;
    for (const auto& [deg, piece] : pieces) {
        offset[deg] = names.size();
        for (const auto& r : piece.reps) {
            Vec<F> full = a.zero_vector();
            for (std::size_t i = 0; i < r.size(); ++i)
                full[piece.support[i]] = r[i];
            std::size_t lead = 0;
            while (f.is_zero(full[lead]))
                ++lead;
            std::string nm = "[" + a.name(lead) + "]";
            while (std::find(names.begin(), names.end(), nm) != names.end())
                nm += "'";
            names.push_back(nm);
            degrees.push_back(deg);
            out.representatives.push_back(std::move(full));
        }
    }

    BigradedAlgebra<F> h(f, names, degrees);
    for (std::size_t x = 0; x < h.dim(); ++x)
        for (std::size_t y = 0; y < h.dim(); ++y) {
            const Bidegree deg = degrees[x] + degrees[y];
            Vec<F> value = h.zero_vector();
            auto it = pieces.find(deg);
            if (it != pieces.end()) {
                const auto& piece = it->second;
                const Vec<F> z = a.multiply(out.representatives[x], out.representatives[y]);
                const Vec<F> coords =
                    piece.left_inverse.apply(piece.boundaries.reduce(detail::restrict_to<F>(z, piece.support)));
                for (std::size_t i = 0; i < coords.size(); ++i)
                    value[offset[deg] + i] = coords[i];
            }
            h.set_product(x, y, std::move(value));
        }

    Orientation<F> oh{Vec<F>(h.dim(), f.zero()), o.n};
    bool nonzero = false;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        oh.phi[i] = evaluate(f, o, out.representatives[i]);
        nonzero = nonzero || !f.is_zero(oh.phi[i]);
    }
    out.algebra = std::move(h);
    if (nonzero)
        out.orientation = std::move(oh);
    return out;
}

template <Field F>
struct OddCongruenceReport {
    std::vector<Hypothesis> hypotheses;
    bool applicable = false;
    int n = 0;
    int m = 0;
    std::size_t dim_a = 0;
    std::size_t dim_h = 0;
    bool congruent = false;
    // gamma(x, y) = phi(x delta(y)) on the total-degree-even part
    bool gamma_skew = false;
    bool gamma_radical_is_cycles = false;
    std::size_t even_dim = 0;
    std::size_t even_cycles_dim = 0;

    std::string verdict() const { return applicable ? (congruent ? "PASS" : "FAIL") : "N/A"; }
};

/// dim A = dim H(A, delta) mod 4 under the odd-dimensional hypotheses, each
/// reported separately.  The congruence and the gamma mechanism are only
/// evaluated when every hypothesis holds.
template <Field F>
OddCongruenceReport<F> odd_congruence(const BigradedAlgebra<F>& a, const Differential<F>& d, const Orientation<F>& o)
{
    const F& f = a.field();
    OddCongruenceReport<F> rep;
    rep.n = o.n;
    rep.m = (o.n - 1) / 2;
    rep.dim_a = a.dim();
    auto& hs = rep.hypotheses;

    hs.push_back({"characteristic not 2", f.characteristic() != 2, "field " + f.name()});
    bool pd = false;
    try {
        pd = check_pd(a, o).is_pd();
        hs.push_back({"connected Poincare duality algebra", pd, "n = " + std::to_string(o.n)});
    } catch (const AlgebraError& e) {
        hs.push_back({"connected Poincare duality algebra", false, e.what()});
    }
    hs.push_back({"formal dimension odd", o.n % 2 != 0, "n = " + std::to_string(o.n)});
    const DerivationCheck dc = check_derivation(a, d);
    hs.push_back({"delta is a differential derivation", dc.valid, dc.valid ? "checked on all basis pairs" : dc.reason});
    hs.push_back({"delta has odd total degree", d.shift.parity() == 1, "shift " + to_string(d.shift)});
    hs.push_back({"delta lowers the second grading", d.shift.j < 0, "shift " + to_string(d.shift)});

    const auto profile = a.profile();
    auto vanishing = [&](int eps, int par) {
        std::string bad;
        for (int i = 1; i <= rep.m; ++i)
            if ((i & 1) == par) {
                auto it = profile.find(Bidegree{eps, i});
                if (it != profile.end())
                    bad += (bad.empty() ? "" : ", ") + std::string("dim A^{") + std::to_string(eps) + "," +
                           std::to_string(i) + "} = " + std::to_string(it->second);
            }
        return bad;
    };
    const std::string bad0 = vanishing(0, 0), bad1 = vanishing(1, 1);
    hs.push_back({"A^{0,i} = 0 for even 0 < i <= m", bad0.empty(), bad0.empty() ? "m = " + std::to_string(rep.m) : bad0});
    hs.push_back({"A^{1,i} = 0 for odd 0 < i <= m", bad1.empty(), bad1.empty() ? "m = " + std::to_string(rep.m) : bad1});

    std::optional<AlgebraHomology<F>> h;
    if (dc.valid) {
        h = homology(a, d, o);
        rep.dim_h = h->dim();
        hs.push_back({"H(A, delta) nonzero", !h->is_zero(), "dim H = " + std::to_string(h->dim())});
    } else {
        hs.push_back({"H(A, delta) nonzero", false, "homology undefined without a valid differential"});
    }

    rep.applicable = all_satisfied(hs);
    if (!rep.applicable)
        return rep;
    rep.congruent = mod4(static_cast<long>(rep.dim_a)) == mod4(static_cast<long>(rep.dim_h));

    std::vector<std::size_t> even;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.parity(i) == 0)
            even.push_back(i);
    const std::size_t e = even.size();
    Matrix<F> gamma(f, e, e);
    for (std::size_t x = 0; x < e; ++x)
        for (std::size_t y = 0; y < e; ++y)
            gamma(x, y) = evaluate(f, o, a.multiply(a.basis_vector(even[x]), d.of(even[y])));
    Matrix<F> dev(f, a.dim(), e);
    for (std::size_t y = 0; y < e; ++y)
        for (std::size_t r = 0; r < a.dim(); ++r)
            dev(r, y) = d.map(r, even[y]);
    rep.even_dim = e;
    rep.even_cycles_dim = e - rank(dev);
    Matrix<F> neg = Matrix<F>(f, e, e) - gamma;
    rep.gamma_skew = gamma.transpose() == neg;
    // Left radical = ker gamma^T.  It equals Z^even iff both have the same
    // dimension and every cycle lies in it.
    const auto left = rank_and_kernel(gamma.transpose());
    bool contains = true;
    for (const auto& z : rank_and_kernel(dev).kernel_basis)
        contains = contains && is_zero_vector(f, gamma.transpose().apply(z));
    rep.gamma_radical_is_cycles = contains && left.kernel_basis.size() == rep.even_cycles_dim;
    return rep;
}

} // namespace pdcong
