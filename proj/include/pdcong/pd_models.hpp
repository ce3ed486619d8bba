#pragma once

// Standard PD algebra models and random generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pdcong/pd_algebra.hpp"

namespace pdcong {

template <Field F>
struct PdModel {
    BigradedAlgebra<F> algebra;
    Orientation<F> orientation;
};

template <Field F>
struct DgModel {
    BigradedAlgebra<F> algebra;
    Orientation<F> orientation;
    Differential<F> differential;
};

/// 1 and v with v^2 = 0.  With top.eps = 1 this is only a tensor factor:
/// phi is the dual of v but is not an orientation on its own.
template <Field F>
PdModel<F> sphere_model(const F& f, Bidegree top, const std::string& name = "v")
{
    BigradedAlgebra<F> a(f, {"1", name}, {{0, 0}, top});
    return {a, Orientation<F>{a.basis_vector(1), top.j}};
}

/// Tensor product with (a x b)(a' x b') = (-1)^{|b||a'|} aa' x bb' and
/// phi = phi_A x phi_B.  Basis element (i, j) has index i * dim B + j.
template <Field F>
PdModel<F> tensor_model(const PdModel<F>& x, const PdModel<F>& y, const std::string& joiner = "*")
{
    const auto& a = x.algebra;
    const auto& b = y.algebra;
    const F& f = a.field();
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<std::string> names;
    std::vector<Bidegree> degrees;
    // prime the second factor's names until the combined names are distinct
    for (std::string mark;; mark += "'") {
        names.clear();
        degrees.clear();
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j) {
                if (i == 0)
                    names.push_back(j == 0 ? "1" : b.name(j) + mark);
                else
                    names.push_back(j == 0 ? a.name(i) : a.name(i) + joiner + b.name(j) + mark);
                degrees.push_back(a.degree(i) + b.degree(j));
            }
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
            break;
    }
    BigradedAlgebra<F> t(f, names, degrees);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l) {
                    const Vec<F>& pa = a.product(i, k);
                    const Vec<F>& pb = b.product(j, l);
                    const bool neg = koszul_sign(b.parity(j), a.parity(k)) < 0;
                    Vec<F> v = t.zero_vector();
                    for (std::size_t r = 0; r < na; ++r) {
                        if (f.is_zero(pa[r]))
                            continue;
                        for (std::size_t s = 0; s < nb; ++s)
                            if (!f.is_zero(pb[s])) {
                                const auto c = f.mul(pa[r], pb[s]);
                                v[r * nb + s] = neg ? f.neg(c) : c;
                            }
                    }
                    t.set_product(i * nb + j, k * nb + l, std::move(v));
                }
    Orientation<F> o{Vec<F>(na * nb, f.zero()), x.orientation.n + y.orientation.n};
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            o.phi[i * nb + j] = f.mul(x.orientation.phi[i], y.orientation.phi[j]);
    return {std::move(t), std::move(o)};
}

/// Exterior algebra on generators of the given bidegrees (x^2 = 0 for every
/// generator, whatever its parity).  Generator g is named names[g]; the
/// basis element for a subset is the ordered product, named by concatenation.
template <Field F>
PdModel<F> exterior_model(const F& f, const std::vector<Bidegree>& gens, std::vector<std::string> names = {})
{
    if (names.empty())
        for (std::size_t g = 0; g < gens.size(); ++g)
            names.push_back("x" + std::to_string(g + 1));
    BigradedAlgebra<F> unit(f, {"1"}, {{0, 0}});
    PdModel<F> out{unit, {Vec<F>{f.one()}, 0}};
    for (std::size_t g = gens.size(); g-- > 0;)
        out = tensor_model(sphere_model(f, gens[g], names[g]), out, "");
    return out;
}

/// Lambda(a, b) with a, b in bidegree (0,1).
template <Field F>
PdModel<F> torus_model(const F& f)
{
    return exterior_model(f, {{0, 1}, {0, 1}}, {"a", "b"});
}

/// k[x]/(x^{h+1}); x must have even total degree when h >= 2.
template <Field F>
PdModel<F> truncated_polynomial_model(const F& f, Bidegree x, int h)
{
    if (h < 1)
        throw AlgebraError("truncation height must be positive");
    if (h >= 2 && x.parity() != 0)
        throw AlgebraError("odd generators square to zero");
    std::vector<std::string> names{"1", "x"};
    std::vector<Bidegree> degrees{{0, 0}, x};
    Bidegree d = x;
    for (int k = 2; k <= h; ++k) {
        d = d + x;
        names.push_back("x^" + std::to_string(k));
        degrees.push_back(d);
    }
    BigradedAlgebra<F> a(f, names, degrees);
    for (int i = 0; i <= h; ++i)
        for (int j = 0; j <= h; ++j)
            a.set_product(i, j, i + j <= h ? a.basis_vector(i + j) : a.zero_vector());
    return {a, orientation_from_top(a, h)};
}

/// 1, x at (0,2), x^2 at (0,4).
template <Field F>
PdModel<F> cp2_model(const F& f)
{
    return truncated_polynomial_model(f, {0, 2}, 2);
}

/// Connected sum of "products" S^a_i x S^b_i: basis 1, a_i, b_i, c with
/// a_i b_i = c and every other product of positive-degree elements zero.
/// All pairs must add up to the same bidegree (0, n).
template <Field F>
PdModel<F> connected_sum_model(const F& f, const std::vector<std::pair<Bidegree, Bidegree>>& pairs)
{
    if (pairs.empty())
        throw AlgebraError("connected sum needs at least one pair");
    const Bidegree top = pairs[0].first + pairs[0].second;
    if (top.eps != 0)
        throw AlgebraError("pair degrees must add up to bidegree (0,n)");
    std::vector<std::string> names{"1"};
    std::vector<Bidegree> degrees{{0, 0}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first + pairs[i].second != top)
            throw AlgebraError("pairs do not share a top bidegree");
        if (pairs[i].first == Bidegree{0, 0} || pairs[i].second == Bidegree{0, 0})
            throw AlgebraError("a pair member in bidegree (0,0) would disconnect the algebra");
        names.push_back("a" + std::to_string(i + 1));
        degrees.push_back(pairs[i].first);
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        names.push_back("b" + std::to_string(i + 1));
        degrees.push_back(pairs[i].second);
    }
    names.push_back("c");
    degrees.push_back(top);
    BigradedAlgebra<F> a(f, names, degrees);
    const std::size_t g = pairs.size(), c = 2 * g + 1;
    for (std::size_t i = 0; i < g; ++i) {
        const std::size_t ai = 1 + i, bi = 1 + g + i;
        a.set_product(ai, bi, a.basis_vector(c));
        Vec<F> v = a.zero_vector();
        v[c] = koszul_sign(a.parity(ai), a.parity(bi)) < 0 ? f.neg(f.one()) : f.one();
        a.set_product(bi, ai, std::move(v));
    }
    return {a, orientation_from_top(a, c)};
}

/// (S^1 x S^{2m}) # (S^1 x S^{2m}) with delta(b1) = a2, delta(b2) = -a1:
/// dimensions (1,2,2,1) in degrees 0, 1, 2m, 2m+1 and homology of S^1.
template <Field F>
DgModel<F> odd_example_model(const F& f, int m = 1)
{
    const Bidegree a{0, 1}, b{0, 2 * m};
    PdModel<F> base = connected_sum_model(f, {{a, b}, {a, b}});
    Differential<F> d{Matrix<F>(f, 6, 6), Bidegree{0, 1 - 2 * m}};
    d.map(2, 3) = f.one();          // delta(b1) = a2
    d.map(1, 4) = f.neg(f.one());   // delta(b2) = -a1
    return {base.algebra, base.orientation, d};
}

/// Lambda(x3, x5, x9) with delta(x9) = x3 x5, all in the eps = 0 row.
template <Field F>
DgModel<F> lambda_359_model(const F& f)
{
    PdModel<F> base = exterior_model(f, {{0, 3}, {0, 5}, {0, 9}}, {"x3", "x5", "x9"});
    const auto& a = base.algebra;
    Differential<F> d{Matrix<F>(f, a.dim(), a.dim()), Bidegree{0, -1}};
    // basis order: 1, x9, x5, x5x9, x3, x3x9, x3x5, x3x5x9
    const std::size_t x9 = *a.index_of("x9"), x3x5 = *a.index_of("x3x5");
    d.map(x3x5, x9) = f.one();
    return {base.algebra, base.orientation, d};
}

/// Coordinates w_i = sum_k P(k, i) e_k; P must be invertible, preserve
/// bidegrees, and fix the unit.
template <Field F>
PdModel<F> change_basis(const PdModel<F>& m, const Matrix<F>& p)
{
    const auto& a = m.algebra;
    const F& f = a.field();
    const auto pinv = inverse(p);
    if (!pinv)
        throw AlgebraError("base change is not invertible");
    std::vector<Vec<F>> w(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        w[i] = p.col_vec(i);
        if (!a.is_homogeneous(w[i], a.degree(i)))
            throw AlgebraError("base change mixes bidegrees");
    }
    if (w[0] != a.basis_vector(0))
        throw AlgebraError("base change must fix the unit");
    BigradedAlgebra<F> b(f, a.names(), a.degrees());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            b.set_product(i, j, pinv->apply(a.multiply(w[i], w[j])));
    Orientation<F> o{Vec<F>(a.dim(), f.zero()), m.orientation.n};
    for (std::size_t i = 0; i < a.dim(); ++i)
        o.phi[i] = evaluate(f, m.orientation, w[i]);
    return {std::move(b), normalized(f, std::move(o))};
}

template <Field F>
DgModel<F> change_basis(const DgModel<F>& m, const Matrix<F>& p)
{
    PdModel<F> base = change_basis(PdModel<F>{m.algebra, m.orientation}, p);
    const auto pinv = *inverse(p);
    return {std::move(base.algebra), std::move(base.orientation),
            Differential<F>{pinv * m.differential.map * p, m.differential.shift}};
}

template <Field F, class Rng>
typename F::value_type random_scalar(const F& f, Rng& rng, bool nonzero = false)
{
    const long range = f.characteristic() == 0 ? 7 : static_cast<long>(f.characteristic());
    const long offset = f.characteristic() == 0 ? 3 : 0;
    for (;;) {
        const auto v = f.from_int(static_cast<long>(rng() % static_cast<std::uint64_t>(range)) - offset);
        if (!nonzero || !f.is_zero(v))
            return v;
    }
}

/// Random bidegree-preserving invertible matrix fixing the unit.
template <Field F, class Rng>
Matrix<F> random_base_change(const BigradedAlgebra<F>& a, Rng& rng)
{
    const F& f = a.field();
    Matrix<F> p = Matrix<F>::identity(f, a.dim());
    for (const auto& [deg, count] : a.profile()) {
        (void)count;
        auto idx = a.indices_of(deg);
        if (deg == Bidegree{0, 0})
            idx.erase(idx.begin());
        if (idx.empty())
            continue;
        Matrix<F> block(f, idx.size(), idx.size());
        do {
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c)
                    block(r, c) = random_scalar(f, rng);
        } while (!is_invertible(block));
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                p(idx[r], idx[c]) = block(r, c);
    }
    return p;
}

namespace detail {

template <Field F, class Rng>
PdModel<F> random_factor(const F& f, Rng& rng)
{
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    switch (pick(0, 4)) {
    case 0:
        return sphere_model(f, Bidegree{0, pick(1, 4)});
    case 1: {
        // two eps = 1 generators multiplying into the eps = 0 row
        return exterior_model(f, {Bidegree{1, pick(0, 3)}, Bidegree{1, pick(1, 3)}}, {"u", "w"});
    }
    case 2:
        return pick(0, 1) ? truncated_polynomial_model(f, Bidegree{0, 2 * pick(1, 2)}, pick(2, 3))
                          : truncated_polynomial_model(f, Bidegree{1, 1}, 2);
    case 3: {
        const int eps = pick(0, 1);
        const int a = pick(1, 3), b = pick(1, 4);
        std::vector<std::pair<Bidegree, Bidegree>> pairs(static_cast<std::size_t>(pick(1, 2)),
                                                          {Bidegree{eps, a}, Bidegree{eps, b}});
        return connected_sum_model(f, pairs);
    }
    default:
        return torus_model(f);
    }
}

} // namespace detail

/// Tensor product of random sphere, exterior, truncated-polynomial and
/// connected-sum factors, twisted by a random base change.  The formal
/// dimension has the requested parity and the total dimension stays at most
/// max_dim (at least 4).
template <Field F, class Rng>
PdModel<F> random_pd_model(const F& f, Rng& rng, bool even, std::size_t max_dim = 16)
{
    for (;;) {
        PdModel<F> m = detail::random_factor(f, rng);
        while (m.algebra.dim() * 2 <= max_dim && rng() % 3 != 0) {
            PdModel<F> next = detail::random_factor(f, rng);
            if (m.algebra.dim() * next.algebra.dim() > max_dim)
                break;
            m = tensor_model(m, next);
        }
        if ((m.orientation.n % 2 == 0) != even) {
            if (m.algebra.dim() * 2 > max_dim)
                continue;
            m = tensor_model(m, sphere_model(f, Bidegree{0, 1 + 2 * static_cast<int>(rng() % 2)}, "s"));
        }
        // an odd number of eps = 1 top factors leaves the top class outside (0, n)
        bool top_in_row = false;
        for (std::size_t i = 0; i < m.algebra.dim(); ++i)
            if (!f.is_zero(m.orientation.phi[i]))
                top_in_row = m.algebra.degree(i).eps == 0;
        // two eps = 1 classes in j = 0 multiply into a second class in (0,0)
        if (!top_in_row || m.algebra.indices_of({0, 0}).size() != 1)
            continue;
        return change_basis(m, random_base_change(m.algebra, rng));
    }
}

/// Lambda(x_1..x_k) x C with delta zero on C, delta(x_g) random in the
/// bidegree shifted by a random (eps, -j) and extended by the Leibniz rule.
/// Returns nullopt when the extension is not a differential derivation;
/// callers resample.  With nonzero_only, a zero delta is also rejected.
template <Field F, class Rng>
std::optional<DgModel<F>> random_dg_model_attempt(const F& f, Rng& rng, bool nonzero_only = true)
{
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const int k = pick(1, 3);
    std::vector<Bidegree> gens;
    for (int g = 0; g < k; ++g)
        gens.push_back({pick(0, 1), pick(1, 5)});
    std::sort(gens.begin(), gens.end(), [](Bidegree x, Bidegree y) { return x.j < y.j; });
    PdModel<F> c = k == 3 ? sphere_model(f, Bidegree{0, pick(1, 3)}, "s")
                          : random_pd_model(f, rng, pick(0, 1) == 0, 4);
    PdModel<F> ext = exterior_model(f, gens);
    int top_eps = 0;
    for (auto g : gens)
        top_eps ^= g.eps;
    if (top_eps != 0)
        return std::nullopt; // the top class of Lambda must lie in the eps = 0 row
    PdModel<F> base = tensor_model(ext, c, "*");
    const auto& a = base.algebra;
    const std::size_t nc = c.algebra.dim();
    const Bidegree shift{pick(0, 1), -pick(1, 5)};

    Matrix<F> dm(f, a.dim(), a.dim());
    std::vector<Vec<F>> image(a.dim(), a.zero_vector());
    // generator g is the subset {g}; subset masks use bit k-1-g for generator g
    auto gen_index = [&](int g) { return (std::size_t{1} << (k - 1 - g)) * nc; };
    bool nonzero = false;
    for (int g = 0; g < k; ++g) {
        const std::size_t gi = gen_index(g);
        Vec<F> v = a.zero_vector();
        for (auto t : a.indices_of(a.degree(gi) + shift))
            if (rng() % 2)
                v[t] = random_scalar(f, rng);
        nonzero = nonzero || !is_zero_vector(f, v);
        image[gi] = std::move(v);
    }
    if (nonzero_only && !nonzero)
        return std::nullopt;
    // delta(x_g e') = delta(x_g) e' + (-1)^{|x_g|} x_g delta(e'), g the first generator
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        int g = 0;
        while (!(mask & (std::size_t{1} << (k - 1 - g))))
            ++g;
        const std::size_t rest = mask & ~(std::size_t{1} << (k - 1 - g));
        for (std::size_t cc = 0; cc < nc; ++cc) {
            const std::size_t e = mask * nc + cc, ep = rest * nc + cc, gi = gen_index(g);
            if (e == gi)
                continue;
            Vec<F> v = a.multiply(image[gi], a.basis_vector(ep));
            const Vec<F> w = a.multiply(a.basis_vector(gi), image[ep]);
            const bool neg = a.parity(gi) == 1;
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = neg ? f.sub(v[i], w[i]) : f.add(v[i], w[i]);
            image[e] = std::move(v);
        }
    }
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t i = 0; i < a.dim(); ++i)
            dm(i, j) = image[j][i];
    DgModel<F> out{base.algebra, base.orientation, Differential<F>{dm, shift}};
    if (!check_derivation(out.algebra, out.differential))
        return std::nullopt;
    return change_basis(out, random_base_change(out.algebra, rng));
}

template <Field F, class Rng>
DgModel<F> random_dg_model(const F& f, Rng& rng)
{
    for (;;)
        if (auto m = random_dg_model_attempt(f, rng))
            return *m;
}

/// Instances meeting the odd-dimensional hypotheses: a connected sum of
/// pairs (a_i, b_i) with a_i in degree <= m and b_i above m, where delta maps
/// the b's of one degree class to the a's through a random skew matrix
/// (the Leibniz rule on b_i b_j forces skewness).
template <Field F, class Rng>
DgModel<F> random_odd_model(const F& f, Rng& rng)
{
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const int m = pick(1, 3), n = 2 * m + 1;
    // admissible low degrees: eps = 0 with odd i <= m, eps = 1 with even i <= m
    std::vector<Bidegree> lows;
    for (int i = 0; i <= m; ++i) {
        if (i % 2 == 1)
            lows.push_back({0, i});
        else
            lows.push_back({1, i});
    }
    const Bidegree main = lows[rng() % lows.size()];
    const int g = pick(1, 4);
    std::vector<std::pair<Bidegree, Bidegree>> pairs;
    for (int i = 0; i < g; ++i)
        pairs.push_back({main, Bidegree{0, n} - main});
    const int extra = pick(0, 2);
    for (int i = 0; i < extra; ++i) {
        const Bidegree lo = lows[rng() % lows.size()];
        pairs.push_back({lo, Bidegree{0, n} - lo});
    }
    PdModel<F> base = connected_sum_model(f, pairs);
    const auto& a = base.algebra;
    const std::size_t total = pairs.size();
    Differential<F> d{Matrix<F>(f, a.dim(), a.dim()), main - (Bidegree{0, n} - main)};
    // pairs with the main bidegree: indices i with pairs[i].first == main
    std::vector<std::size_t> cls;
    for (std::size_t i = 0; i < total; ++i)
        if (pairs[i].first == main)
            cls.push_back(i);
    for (std::size_t x = 0; x < cls.size(); ++x)
        for (std::size_t y = x + 1; y < cls.size(); ++y) {
            const auto v = random_scalar(f, rng);
            // delta(b_y) has a_x coefficient v, delta(b_x) has a_y coefficient -v
            d.map(1 + cls[x], 1 + total + cls[y]) = v;
            d.map(1 + cls[y], 1 + total + cls[x]) = f.neg(v);
        }
    DgModel<F> out{base.algebra, base.orientation, d};
    return change_basis(out, random_base_change(out.algebra, rng));
}

} // namespace pdcong
