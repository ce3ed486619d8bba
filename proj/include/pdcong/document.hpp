#pragma once

// Line-oriented input documents: complex, action and algebra blocks.
//
//   complex <name>
//   vertices <v1> <v2> ...
//   facet <v_i> <v_j> ...
//   end
//   action <name> on <complex> p <p>
//   map <v> -> <w>
//   end
//   algebra <name> field <Q | Fp | F<prime>>
//   basis <b> bidegree <eps> <j>
//   mult <a> <b> = <coeff> <c> [+ <coeff> <c> ...]
//   phi <b> = <coeff>
//   delta <b> = <coeff> <c> [+ ...]
//   end

#include <cstdint>
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pdcong/group_action.hpp"
#include "pdcong/pd_models.hpp"

namespace pdcong {

struct Location {
    std::size_t line = 0;
    std::size_t column = 0;
};

class DocumentError : public std::runtime_error {
public:
    DocumentError(Location at, const std::string& message);
    Location where() const { return at_; }
    const std::string& message() const { return message_; }

private:
    Location at_;
    std::string message_;
};

struct ComplexBlock {
    std::string name;
    Location at;
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> facets;
    SimplicialComplex complex = SimplicialComplex::empty();
};

struct ActionBlock {
    std::string name;
    Location at;
    std::string complex;
    std::uint32_t p = 0;
    std::vector<std::pair<std::string, std::string>> map;
    GroupAction action;
};

struct Term {
    mpq_class coeff;
    std::string basis;
};

struct ProductSpec {
    std::string a, b;
    std::vector<Term> terms;
};

struct DeltaSpec {
    std::string source;
    std::vector<Term> terms;
};

struct BasisSpec {
    std::string name;
    Bidegree degree;
};

struct AlgebraBlock {
    std::string name;
    Location at;
    std::string field; // "Q", "Fp" or "F<prime>"
    std::vector<BasisSpec> basis;
    std::vector<ProductSpec> mult;
    std::vector<std::pair<std::string, mpq_class>> phi;
    std::vector<DeltaSpec> delta;

    /// The coefficient field; "Fp" takes the prime from the argument.
    Coefficients coefficients(std::optional<std::uint32_t> p = std::nullopt) const;

    /// Products listed once are completed by graded commutativity; the
    /// orientation degree is that of the phi support (or the top eps = 0
    /// degree when phi is empty); the shift of delta is read off its first
    /// nonzero entry, (0,-1) when delta is zero.
    template <Field F>
    DgModel<F> build(const F& f) const;
};

enum class BlockKind { Complex, Action, Algebra };

struct InputDocument {
    std::vector<ComplexBlock> complexes;
    std::vector<ActionBlock> actions;
    std::vector<AlgebraBlock> algebras;
    std::vector<std::pair<BlockKind, std::size_t>> order; // declaration order

    const ComplexBlock* find_complex(const std::string& name) const;
    const ActionBlock* find_action(const std::string& name) const;
    const AlgebraBlock* find_algebra(const std::string& name) const;
};

/// Throws DocumentError with the location of the first problem.
InputDocument parse_document(const std::string& text);

/// Canonical text: one blank line between blocks, single spaces, no comments.
std::string serialize(const InputDocument& doc);

template <Field F>
DgModel<F> AlgebraBlock::build(const F& f) const
{
    std::vector<std::string> names;
    std::vector<Bidegree> degrees;
    for (const auto& b : basis) {
        names.push_back(b.name);
        degrees.push_back(b.degree);
    }
    BigradedAlgebra<F> a(f, names, degrees);
    const std::size_t n = a.dim();
    auto vec = [&](const std::vector<Term>& terms) {
        Vec<F> v(n, f.zero());
        for (const auto& t : terms) {
            const std::size_t i = *a.index_of(t.basis);
            v[i] = f.add(v[i], f.from_mpq(t.coeff));
        }
        return v;
    };

    std::vector<bool> given(n * n, false);
    for (const auto& m : mult) {
        const std::size_t i = *a.index_of(m.a), j = *a.index_of(m.b);
        a.set_product(i, j, vec(m.terms));
        given[i * n + j] = true;
    }
    for (const auto& m : mult) {
        const std::size_t i = *a.index_of(m.a), j = *a.index_of(m.b);
        if (given[j * n + i])
            continue;
        Vec<F> v = vec(m.terms);
        if (koszul_sign(a.parity(i), a.parity(j)) < 0)
            for (auto& x : v)
                x = f.neg(x);
        a.set_product(j, i, std::move(v));
        given[j * n + i] = true;
    }

    Orientation<F> o{Vec<F>(n, f.zero()), 0};
    for (std::size_t i = 0; i < n; ++i)
        if (a.degree(i).eps == 0)
            o.n = std::max(o.n, a.degree(i).j);
    bool first = true;
    for (const auto& [b, c] : phi) {
        const std::size_t i = *a.index_of(b);
        o.phi[i] = f.add(o.phi[i], f.from_mpq(c));
        if (first && !f.is_zero(o.phi[i])) {
            o.n = a.degree(i).j;
            first = false;
        }
    }

    Differential<F> d = Differential<F>::zero(a);
    bool shift_known = false;
    for (const auto& ds : delta) {
        const std::size_t i = *a.index_of(ds.source);
        const Vec<F> v = vec(ds.terms);
        for (std::size_t r = 0; r < n; ++r) {
            d.map(r, i) = f.add(d.map(r, i), v[r]);
            if (!shift_known && !f.is_zero(v[r])) {
                d.shift = a.degree(r) - a.degree(i);
                shift_known = true;
            }
        }
    }
    return {std::move(a), std::move(o), std::move(d)};
}

} // namespace pdcong
