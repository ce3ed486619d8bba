#include "pdcong/theorems.hpp"

#include <sstream>

#include "pdcong/cohomology.hpp"

namespace pdcong {

std::string relation_suffix(Relation r)
{
    switch (r) {
    case Relation::Mod4:
        return "(mod 4)";
    case Relation::Equal:
        return "(=)";
    case Relation::AtMost:
        return "(<=)";
    }
    return "";
}

bool relation_holds(Relation r, long lhs, long rhs)
{
    switch (r) {
    case Relation::Mod4:
        return mod4(lhs) == mod4(rhs);
    case Relation::Equal:
        return lhs == rhs;
    case Relation::AtMost:
        return lhs <= rhs;
    }
    return false;
}

std::string TheoremReport::verdict() const
{
    return applicable ? (holds ? "PASS" : "FAIL") : "N/A";
}

bool TheoremReport::failed() const
{
    if (!applicable)
        return false;
    if (!holds)
        return true;
    for (const auto& s : side_checks)
        if (!s.holds)
            return true;
    return false;
}

std::vector<std::string> TheoremReport::check_lines(const std::string& name) const
{
    std::vector<std::string> out;
    out.push_back("CHECK " + name + ": " + verdict() + " — " + std::to_string(lhs) + " vs " + std::to_string(rhs) +
                  " " + relation_suffix(relation));
    for (const auto& s : side_checks) {
        const std::string v = applicable ? (s.holds ? "PASS" : "FAIL") : "N/A";
        out.push_back("CHECK " + name + "/" + s.name + ": " + v + " — " + std::to_string(s.lhs) + " vs " +
                      std::to_string(s.rhs) + " " + relation_suffix(s.relation));
    }
    return out;
}

std::string TheoremReport::to_string(const std::string& name) const
{
    std::ostringstream os;
    os << "report " << name << " (" << id << ")\n";
    for (const auto& h : hypotheses)
        os << "  hypothesis " << h.name << ": " << (h.satisfied ? "yes" : "no") << " [" << h.evidence << "]\n";
    os << "  applicable: " << (applicable ? "yes" : "no") << "\n";
    os << "  lhs " << lhs_label << " = " << lhs << "\n";
    os << "  rhs " << rhs_label << " = " << rhs << "\n";
    os << "  relation " << relation_suffix(relation) << " " << (holds ? "holds" : "fails") << "\n";
    for (const auto& line : check_lines(name))
        os << line << "\n";
    return os.str();
}

TheoremReport make_report(std::string id, std::vector<Hypothesis> hypotheses, std::string lhs_label, long lhs,
                          std::string rhs_label, long rhs, Relation relation)
{
    TheoremReport r;
    r.id = std::move(id);
    r.applicable = all_satisfied(hypotheses);
    r.hypotheses = std::move(hypotheses);
    r.lhs_label = std::move(lhs_label);
    r.rhs_label = std::move(rhs_label);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = relation;
    r.holds = relation_holds(relation, lhs, rhs);
    return r;
}

SimplicialComplex fixed_point_set(const SimplicialComplex& x, const GroupAction& a)
{
    const RegularModel m = make_regular(x, a);
    return fixed_subcomplex(m.complex, m.action);
}

std::size_t total_betti(const SimplicialComplex& x, std::uint32_t p)
{
    return x.is_empty() ? 0 : cohomology(x, Coefficients{p}).total();
}

namespace {

struct PdFacts {
    bool connected = false;
    bool pd = false;
    int n = -1;
    std::string evidence;
};

PdFacts pd_facts(const SimplicialComplex& x, std::uint32_t p)
{
    PdFacts out;
    out.connected = !x.is_empty() && x.component_count() == 1;
    if (!out.connected) {
        out.evidence = "not evaluated: X has " + std::to_string(x.component_count()) + " components";
        return out;
    }
    if (p == 0) {
        const auto r = pd_check(x, RationalField{});
        out.pd = r.is_pd;
        out.n = r.formal_dim.value_or(-1);
        out.evidence = r.is_pd ? "n = " + std::to_string(out.n) : r.reason;
    } else {
        const auto r = pd_check(x, PrimeField(p));
        out.pd = r.is_pd;
        out.n = r.formal_dim.value_or(-1);
        out.evidence = r.is_pd ? "n = " + std::to_string(out.n) : r.reason;
    }
    return out;
}

Hypothesis connected_hypothesis(const SimplicialComplex& x)
{
    const std::size_t c = x.is_empty() ? 0 : x.component_count();
    return {"X connected", c == 1, std::to_string(c) + " component" + (c == 1 ? "" : "s")};
}

} // namespace

TheoremReport check_theorem2(const SimplicialComplex& x, const GroupAction& a)
{
    const std::uint32_t p = a.p;
    std::vector<Hypothesis> hs;
    hs.push_back(connected_hypothesis(x));
    const PdFacts pd = pd_facts(x, p);
    hs.push_back({"F_p Poincare duality", pd.pd, pd.evidence});
    const bool bock = bockstein_condition(x, p);
    hs.push_back({"no Z/p summand in H^*(X; Z_(p))", bock,
                  bock ? "no elementary divisor of p-valuation 1" : "an elementary divisor has p-valuation 1"});

    const TFRDecomposition tfr = tfr_decomposition(x, a);
    const SimplicialComplex fixed = fixed_point_set(x, a);
    const long lhs = static_cast<long>(total_betti(fixed, p));
    long t = 0, r = 0;
    for (const auto& d : tfr.degrees) {
        t += static_cast<long>(d.t);
        r += static_cast<long>(d.r);
    }

    if (pd.pd && pd.n % 2 == 0) {
        hs.push_back({"formal dimension even", true, "n = " + std::to_string(pd.n)});
    } else if (pd.pd) {
        const int m = (pd.n - 1) / 2;
        hs.push_back({"X^G nonempty", !fixed.is_empty(),
                      fixed.is_empty() ? "n = " + std::to_string(pd.n) + " odd and the fixed set is empty"
                                       : std::to_string(fixed.count(0)) + " fixed vertices"});
        std::string bad_t, bad_r;
        for (int i = 1; i <= m && i < static_cast<int>(tfr.degrees.size()); ++i) {
            if (i % 2 == 0 && tfr.degrees[i].t > 0)
                bad_t += (bad_t.empty() ? "" : ", ") + ("T^" + std::to_string(i) + " = " + std::to_string(tfr.degrees[i].t));
            if (i % 2 == 1 && tfr.degrees[i].r > 0)
                bad_r += (bad_r.empty() ? "" : ", ") +
                         ("R^" + std::to_string(i) + " has " + std::to_string(tfr.degrees[i].r) + " summands");
        }
        hs.push_back({"T^i = 0 for even 0 < i <= m", bad_t.empty(), bad_t.empty() ? "m = " + std::to_string(m) : bad_t});
        hs.push_back({"R^i = 0 for odd 0 < i <= m", bad_r.empty(), bad_r.empty() ? "m = " + std::to_string(m) : bad_r});
    }
    TheoremReport rep = make_report("theorem2", std::move(hs), "dim H^*(X^G; F_p)", lhs,
                                    "dim T^* + dim R^*/(p-1)", t + r);
    if (tfr.has_other())
        rep.hypotheses.push_back({"H^*(X; F_p) splits as F + T + R", false, tfr.to_string()});
    rep.applicable = all_satisfied(rep.hypotheses);
    return rep;
}

TheoremReport check_theorem3_cyclic(const SimplicialComplex& x, const GroupAction& a)
{
    const std::uint32_t p = a.p;
    std::vector<Hypothesis> hs;
    hs.push_back(connected_hypothesis(x));
    const PdFacts pd = pd_facts(x, p);
    hs.push_back({"F_p Poincare duality", pd.pd, pd.evidence});
    hs.push_back({"formal dimension even", pd.pd && pd.n % 2 == 0, "n = " + std::to_string(pd.n)});
    const long total = static_cast<long>(total_betti(x, p));
    hs.push_back({"p > dim H^*(X; F_p)", static_cast<long>(p) > total,
                  "p = " + std::to_string(p) + ", dim = " + std::to_string(total)});
    const long lhs = static_cast<long>(total_betti(fixed_point_set(x, a), p));
    TheoremReport r = make_report("theorem3", std::move(hs), "dim H^*(X^G; F_p)", lhs, "dim H^*(X; F_p)", total);
    if (r.applicable) {
        const bool trivial = trivial_rational_action_check(x, a);
        r.side_checks.push_back({"trivial action on H^*(X; Q)", trivial ? 1 : 0, 1, Relation::Equal, trivial});
    }
    return r;
}

TheoremReport check_euler_route(const SimplicialComplex& x, const GroupAction& a)
{
    const std::uint32_t p = a.p;
    std::vector<Hypothesis> hs;
    hs.push_back(connected_hypothesis(x));
    const PdFacts pd = pd_facts(x, p);
    hs.push_back({"F_p Poincare duality", pd.pd, pd.evidence});
    hs.push_back({"formal dimension even", pd.pd && pd.n % 2 == 0, "n = " + std::to_string(pd.n)});
    const bool trivial = pd.connected && trivial_rational_action_check(x, a);
    hs.push_back({"g^* trivial on H^*(X; Q)", trivial, trivial ? "Lambda(g) = chi(X)" : "nontrivial or not evaluated"});

    const SimplicialComplex fixed = fixed_point_set(x, a);
    bool comps_ok = true;
    std::string ev;
    for (const auto& c : fixed.components()) {
        const PdFacts f = pd_facts(c, p);
        const bool ok = f.pd && f.n % 2 == 0;
        comps_ok = comps_ok && ok;
        ev += (ev.empty() ? "" : "; ") + std::string(ok ? "PD n = " + std::to_string(f.n) : "not PD of even dimension");
    }
    hs.push_back({"fixed components F_p-PD of even formal dimension", comps_ok, ev.empty() ? "empty fixed set" : ev});

    const long lhs = static_cast<long>(total_betti(fixed, p));
    const long rhs = static_cast<long>(total_betti(x, p));
    TheoremReport r = make_report("euler-route", std::move(hs), "dim H^*(X^G; F_p)", lhs, "dim H^*(X; F_p)", rhs);
    if (r.applicable) {
        const long chi_fixed = fixed.is_empty() ? 0 : euler_characteristic(fixed);
        r.side_checks.push_back({"chi(X^G) = Lambda(g)", chi_fixed, lefschetz_number(x, a), Relation::Equal,
                                 chi_fixed == lefschetz_number(x, a)});
        r.side_checks.push_back({"Lambda(g) = chi(X)", lefschetz_number(x, a), euler_characteristic(x), Relation::Equal,
                                 lefschetz_number(x, a) == euler_characteristic(x)});
        r.side_checks.push_back({"dim H^*(X^G) = chi(X^G)", lhs, chi_fixed, Relation::Mod4,
                                 relation_holds(Relation::Mod4, lhs, chi_fixed)});
        r.side_checks.push_back({"chi(X) = dim H^*(X)", euler_characteristic(x), rhs, Relation::Mod4,
                                 relation_holds(Relation::Mod4, euler_characteristic(x), rhs)});
    }
    return r;
}

namespace {

bool is_homology_sphere(const SimplicialComplex& link, int s, Coefficients c)
{
    if (s < 0)
        return link.is_empty();
    if (link.is_empty())
        return false;
    const GradedBetti b = cohomology(link, c);
    for (int k = 0; k <= std::max(link.dim(), s); ++k) {
        std::size_t want = 0;
        if (k == 0)
            want = s == 0 ? 2 : 1;
        else if (k == s)
            want = 1;
        if (b.at(k) != want)
            return false;
    }
    return true;
}

} // namespace

HomologyManifoldReport homology_manifold_check(const SimplicialComplex& x, Coefficients c)
{
    HomologyManifoldReport out;
    out.dim = x.dim();
    out.pure = x.is_pure();
    if (x.is_empty())
        return out;
    const int d = x.dim();
    for (int k = 0; k <= d; ++k)
        for (const auto& s : x.simplices(k))
            if (!is_homology_sphere(x.link(s), d - k - 1, c))
                out.failures.push_back(s);
    out.is_hm = out.pure && out.failures.empty();

    const GradedBetti q = cohomology(x, Coefficients::rational());
    out.orientable = q.at(d) == x.component_count();
    if (c.p != 0 && out.orientable) {
        const GradedBetti z = integral_cohomology(x);
        if (d < static_cast<int>(z.torsion.size()))
            for (const auto& t : z.torsion[d])
                if (t % c.p == 0)
                    out.orientable = false;
    }
    return out;
}

TheoremReport check_theorem4(const SimplicialComplex& x, const GroupAction& a)
{
    const std::uint32_t p = a.p;
    std::vector<Hypothesis> hs;
    hs.push_back(connected_hypothesis(x));
    hs.push_back({"even dimension", x.dim() >= 0 && x.dim() % 2 == 0, "dim X = " + std::to_string(x.dim())});
    const HomologyManifoldReport hm = homology_manifold_check(x, Coefficients{p});
    hs.push_back({"Z_(p)-homology manifold", hm.is_hm,
                  hm.is_hm ? "all links are F_p-homology spheres"
                           : std::to_string(hm.failures.size()) + " bad links" +
                                 (hm.failures.empty() ? "" : ", first at " + x.simplex_name(hm.failures.front()))});
    hs.push_back({"orientable", hm.orientable, hm.orientable ? "top cohomology free of rank 1" : "top cohomology defective"});
    const long fp_total = static_cast<long>(total_betti(x, p));
    hs.push_back({"p > dim H^*(X; F_p)", static_cast<long>(p) > fp_total,
                  "p = " + std::to_string(p) + ", dim = " + std::to_string(fp_total)});
    const long lhs = static_cast<long>(total_betti(fixed_point_set(x, a), 0));
    const long rhs = static_cast<long>(total_betti(x, 0));
    return make_report("theorem4", std::move(hs), "dim H^*(X^G; Q)", lhs, "dim H^*(X; Q)", rhs);
}

EvenCodimReport check_even_codim(const SimplicialComplex& x, const GroupAction& a)
{
    EvenCodimReport out;
    out.holds = true;
    const RegularModel m = make_regular(x, a);
    const SimplicialComplex fixed = fixed_subcomplex(m.complex, m.action);
    for (const auto& c : fixed.components()) {
        FixedComponent fc;
        fc.vertices = c.labels();
        fc.dim = c.dim();
        fc.codim = x.dim() - c.dim();
        fc.is_hm = homology_manifold_check(c, Coefficients{a.p}).is_hm;
        fc.even_codim = fc.codim % 2 == 0;
        out.holds = out.holds && fc.is_hm && fc.even_codim;
        out.components.push_back(std::move(fc));
    }
    return out;
}

TheoremReport smith_inequality_check(const SimplicialComplex& x, const GroupAction& a)
{
    const long lhs = static_cast<long>(total_betti(fixed_point_set(x, a), a.p));
    const long rhs = static_cast<long>(total_betti(x, a.p));
    return make_report("smith", {}, "dim H^*(X^G; F_p)", lhs, "dim H^*(X; F_p)", rhs, Relation::AtMost);
}

TheoremReport lefschetz_check(const SimplicialComplex& x, const GroupAction& a)
{
    auto chi = [](const SimplicialComplex& f) { return f.is_empty() ? 0L : euler_characteristic(f); };
    const long l1 = lefschetz_number(x, a);
    TheoremReport r = make_report("lefschetz", {}, "Lambda(g)", l1, "chi(X^g)", chi(fixed_point_set(x, a)),
                                  Relation::Equal);
    for (unsigned k = 2; k < a.p; ++k) {
        const GroupAction g = a.power(k);
        const long lk = lefschetz_number(x, g);
        const long ck = chi(fixed_point_set(x, g));
        r.side_checks.push_back({"g^" + std::to_string(k), lk, ck, Relation::Equal, lk == ck});
    }
    return r;
}

} // namespace pdcong
