#pragma once

// Hypothesis checklists and congruence verdicts for Z/p actions on
// simplicial complexes and for algebraic models of circle actions.

#include <optional>
#include <string>
#include <vector>

#include "pdcong/group_action.hpp"
#include "pdcong/hypothesis.hpp"
#include "pdcong/pd_algebra.hpp"

namespace pdcong {

enum class Relation { Mod4, Equal, AtMost };

std::string relation_suffix(Relation r); // "(mod 4)", "(=)", "(<=)"
bool relation_holds(Relation r, long lhs, long rhs);

/// A secondary assertion attached to a report (same verdict rules).
struct SideCheck {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    Relation relation = Relation::Equal;
    bool holds = false;
};

struct TheoremReport {
    std::string id;
    std::vector<Hypothesis> hypotheses;
    bool applicable = false;
    std::string lhs_label;
    std::string rhs_label;
    long lhs = 0;
    long rhs = 0;
    Relation relation = Relation::Mod4;
    bool holds = false; // the relation on lhs, rhs; evaluated even when not applicable
    std::vector<SideCheck> side_checks;

    /// PASS/FAIL when applicable, otherwise N/A.
    std::string verdict() const;
    bool failed() const;
    /// "CHECK <name>: <verdict> — <lhs> vs <rhs> (mod 4)", plus one line per side check.
    std::vector<std::string> check_lines(const std::string& name) const;
    /// Checklist, both sides and the verdict, in a fixed field order.
    std::string to_string(const std::string& name) const;
};

TheoremReport make_report(std::string id, std::vector<Hypothesis> hypotheses, std::string lhs_label, long lhs,
                          std::string rhs_label, long rhs, Relation relation = Relation::Mod4);

/// Fixed subcomplex of a regular model of the action.
SimplicialComplex fixed_point_set(const SimplicialComplex& x, const GroupAction& a);

/// Total Betti number; 0 for the empty complex.  p = 0 means Q.
std::size_t total_betti(const SimplicialComplex& x, std::uint32_t p);

/// dim H^*(X^G; F_p) against dim T^* + (number of ker-epsilon summands).
TheoremReport check_theorem2(const SimplicialComplex& x, const GroupAction& a);

/// The G = Z/p case of the p-group statement: F_p-PD of even formal
/// dimension with p > dim H^*(X; F_p) gives dim H^*(X^G) = dim H^*(X) mod 4.
TheoremReport check_theorem3_cyclic(const SimplicialComplex& x, const GroupAction& a);

/// dim H^*(X^G; F_p) = chi(X^G) = Lambda(g) = chi(X) = dim H^*(X; F_p) mod 4,
/// valid when g^* is trivial on H^*(X; Q) and X and every fixed component
/// are F_p-PD of even formal dimension.
TheoremReport check_euler_route(const SimplicialComplex& x, const GroupAction& a);

struct HomologyManifoldReport {
    int dim = -1;
    bool pure = false;
    bool is_hm = false;
    bool orientable = false;
    std::vector<Simplex> failures; // simplices whose link is not a homology sphere
};

/// Links of every simplex against spheres of the complementary dimension over
/// the given coefficients.  Orientability: H^d(X; Q) has rank 1 per component
/// and, for p > 0, H^d(X; Z) has no p-torsion.
HomologyManifoldReport homology_manifold_check(const SimplicialComplex& x, Coefficients c);

/// Rational total Betti numbers of X^G and X under the homology-manifold
/// hypotheses.
TheoremReport check_theorem4(const SimplicialComplex& x, const GroupAction& a);

struct FixedComponent {
    std::vector<std::string> vertices;
    int dim = -1;
    int codim = 0;
    bool is_hm = false;
    bool even_codim = false;
};

struct EvenCodimReport {
    std::vector<FixedComponent> components;
    bool holds = false;
};

EvenCodimReport check_even_codim(const SimplicialComplex& x, const GroupAction& a);

/// dim H^*(X^G; F_p) <= dim H^*(X; F_p).
TheoremReport smith_inequality_check(const SimplicialComplex& x, const GroupAction& a);

/// Lefschetz number of every nontrivial power against chi of its fixed set.
TheoremReport lefschetz_check(const SimplicialComplex& x, const GroupAction& a);

/// Algebraic form of the circle-action congruence: (A, phi) models H^*(X; Q)
/// in the eps = 0 row and delta the evaluated differential.  Even n: dim A =
/// chi(A) mod 4.  Odd n: dim A = dim H(A, delta) mod 4 under the odd
/// hypotheses, and, with fixed_set_dim, dim H(A, delta) = fixed_set_dim as a
/// side check.
template <Field F>
TheoremReport check_theorem1_algebraic(const BigradedAlgebra<F>& a, const Differential<F>& d,
                                       const Orientation<F>& o, std::optional<long> fixed_set_dim = std::nullopt)
{
    std::vector<Hypothesis> hs;
    std::size_t eps1 = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        eps1 += a.degree(i).eps == 1;
    const Hypothesis row{"model concentrated in the eps = 0 row", eps1 == 0,
                         "dim A^{1,*} = " + std::to_string(eps1)};
    const long dim_a = static_cast<long>(a.dim());

    if (o.n % 2 == 0) {
        hs.push_back(row);
        hs.push_back({"characteristic not 2", a.field().characteristic() != 2, "field " + a.field().name()});
        bool pd = false;
        std::string why = "n = " + std::to_string(o.n);
        try {
            pd = check_pd(a, o).is_pd();
        } catch (const AlgebraError& e) {
            why = e.what();
        }
        hs.push_back({"connected Poincare duality algebra", pd, why});
        hs.push_back({"formal dimension even", true, "n = " + std::to_string(o.n)});
        return make_report("theorem1-alg", std::move(hs), "dim A", dim_a, "chi(A)", euler_and_dim(a).chi);
    }

    const auto odd = odd_congruence(a, d, o);
    hs.push_back(row);
    for (const auto& h : odd.hypotheses)
        hs.push_back(h);
    long dim_h = static_cast<long>(odd.dim_h);
    TheoremReport r = make_report("theorem1-alg", std::move(hs), "dim A", dim_a, "dim H(A,delta)", dim_h);
    if (fixed_set_dim)
        r.side_checks.push_back({"fixed set", dim_h, *fixed_set_dim, Relation::Equal, dim_h == *fixed_set_dim});
    if (r.applicable)
        r.side_checks.push_back({"skew form on A^even/Z^even", static_cast<long>(odd.even_dim - odd.even_cycles_dim) % 2,
                                 0, Relation::Equal, odd.gamma_skew && odd.gamma_radical_is_cycles &&
                                                         (odd.even_dim - odd.even_cycles_dim) % 2 == 0});
    return r;
}

} // namespace pdcong
