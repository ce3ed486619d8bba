#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "pdcong/corpus.hpp"
#include "pdcong/document.hpp"
#include "pdcong/equivariant.hpp"
#include "pdcong/theorems.hpp"

namespace pdcong {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::string file;
    std::string complex;
    std::string action;
    std::string algebra;
    std::optional<std::uint32_t> p;
    std::string field;
    bool strict = false;
    std::string degrees;
    std::string report;
};

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> all{"cohomology",  "pd-check",          "fixed-set",    "lefschetz",
                                              "tfr",         "bockstein",         "equivariant-betti",
                                              "localization", "theorem1-alg",     "theorem2",     "theorem4",
                                              "algebra-check", "suite"};
    return all;
}

// Collects report text and the failure / not-applicable state.
class Session {
public:
    std::ostringstream out;

    void add(const TheoremReport& r, const std::string& name, bool full = true)
    {
        if (full)
            out << r.to_string(name);
        else
            for (const auto& line : r.check_lines(name))
                out << line << "\n";
        failed_ = failed_ || r.failed();
        not_applicable_ = not_applicable_ || !r.applicable;
    }
    void fail() { failed_ = true; }

    int exit_code(bool strict) const
    {
        if (failed_)
            return kExitFailed;
        if (strict && not_applicable_)
            return kExitNotApplicable;
        return kExitOk;
    }

private:
    bool failed_ = false;
    bool not_applicable_ = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::pair<int, int> parse_degrees(const std::string& s)
{
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos)
            throw std::invalid_argument("");
        std::size_t used = 0;
        const int lo = std::stoi(s.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument("");
        const std::string rest = s.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size() || lo < 0 || hi < lo)
            throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw InputError("--degrees expects <lo>..<hi> with 0 <= lo <= hi, got '" + s + "'");
    }
}

const ComplexBlock& pick_complex(const InputDocument& doc, const Options& o)
{
    if (!o.complex.empty()) {
        if (const auto* c = doc.find_complex(o.complex))
            return *c;
        throw InputError("unknown complex '" + o.complex + "'");
    }
    if (!o.action.empty()) {
        if (const auto* a = doc.find_action(o.action))
            return *doc.find_complex(a->complex);
        throw InputError("unknown action '" + o.action + "'");
    }
    if (doc.complexes.size() == 1)
        return doc.complexes.front();
    throw InputError(doc.complexes.empty() ? "the document declares no complex"
                                           : "the document declares several complexes; choose one with --complex");
}

const ActionBlock& pick_action(const InputDocument& doc, const Options& o, const ComplexBlock& x)
{
    const ActionBlock* a = nullptr;
    if (!o.action.empty()) {
        a = doc.find_action(o.action);
        if (!a)
            throw InputError("unknown action '" + o.action + "'");
        if (a->complex != x.name)
            throw InputError("action '" + a->name + "' acts on '" + a->complex + "', not on '" + x.name + "'");
    } else {
        for (const auto& b : doc.actions)
            if (b.complex == x.name) {
                if (a)
                    throw InputError("several actions on '" + x.name + "'; choose one with --action");
                a = &b;
            }
        if (!a)
            throw InputError("no action on complex '" + x.name + "'");
    }
    if (o.p && *o.p != a->p)
        throw InputError("action '" + a->name + "' has p = " + std::to_string(a->p) + " but --p " +
                         std::to_string(*o.p) + " was given");
    return *a;
}

const AlgebraBlock& pick_algebra(const InputDocument& doc, const Options& o)
{
    if (!o.algebra.empty()) {
        if (const auto* a = doc.find_algebra(o.algebra))
            return *a;
        throw InputError("unknown algebra '" + o.algebra + "'");
    }
    if (doc.algebras.size() == 1)
        return doc.algebras.front();
    throw InputError(doc.algebras.empty() ? "the document declares no algebra"
                                          : "the document declares several algebras; choose one with --algebra");
}

// Coefficients from --field / --p; fallback_p is the prime of a selected action.
Coefficients pick_coefficients(const Options& o, std::optional<std::uint32_t> fallback_p = std::nullopt)
{
    const auto prime = o.p ? o.p : fallback_p;
    if (o.field.empty())
        return prime ? Coefficients::mod(*prime) : Coefficients::rational();
    if (o.field == "Q")
        return Coefficients::rational();
    if (o.field == "Fp") {
        if (!prime)
            throw InputError("--field Fp needs --p");
        return Coefficients::mod(*prime);
    }
    if (o.field.size() > 1 && o.field[0] == 'F') {
        try {
            std::size_t used = 0;
            const unsigned long p = std::stoul(o.field.substr(1), &used);
            if (used + 1 == o.field.size() && p > 2 && p < (1ul << 31) && is_prime(p))
                return Coefficients::mod(static_cast<std::uint32_t>(p));
        } catch (const std::exception&) {
        }
    }
    throw InputError("unknown field '" + o.field + "' (use Q, Fp or F<odd prime>)");
}

std::string join_labels(const std::vector<std::string>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + v[i];
    return s;
}

void describe_complex(std::ostream& os, const std::string& name, const SimplicialComplex& x)
{
    os << "complex " << name << ": " << x.vertex_count() << " vertices, dim " << x.dim() << ", f-vector (";
    for (int k = 0; k <= x.dim(); ++k)
        os << (k ? "," : "") << x.count(k);
    os << ")\n";
}

// ---- complex commands ----------------------------------------------------

void cmd_cohomology(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    describe_complex(s.out, x.name, x.complex);
    if (o.field == "Z") {
        const GradedBetti b = integral_cohomology(x.complex);
        for (int k = 0; k <= x.complex.dim(); ++k) {
            s.out << "H^" << k << "(" << x.name << "; Z) =";
            std::string sep = " ";
            if (b.at(k) > 0) {
                s.out << sep << "Z^" << b.at(k);
                sep = " + ";
            }
            if (k < static_cast<int>(b.torsion.size()))
                for (const auto& d : b.torsion[k]) {
                    s.out << sep << "Z/" << d.get_str();
                    sep = " + ";
                }
            if (sep == " ")
                s.out << " 0";
            s.out << "\n";
        }
        s.out << "euler characteristic = " << b.euler_characteristic() << "\n";
        return;
    }
    const Coefficients c = pick_coefficients(o);
    const GradedBetti b = cohomology(x.complex, c);
    for (int k = 0; k <= x.complex.dim(); ++k)
        s.out << "H^" << k << "(" << x.name << "; " << c.name() << ") = " << b.at(k) << "\n";
    s.out << "total = " << b.total() << "\n";
    s.out << "euler characteristic = " << b.euler_characteristic() << "\n";
}

void cmd_pd_check(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    const Coefficients c = pick_coefficients(o);
    describe_complex(s.out, x.name, x.complex);
    s.out << "coefficients " << c.name() << "\n";
    try {
        with_field(c, [&](const auto& f) {
            const auto r = pd_check(x.complex, f);
            s.out << "connected: yes\n";
            s.out << "betti: (";
            for (std::size_t k = 0; k < r.betti.size(); ++k)
                s.out << (k ? "," : "") << r.betti[k];
            s.out << ")\n";
            if (r.is_pd)
                s.out << "poincare duality: yes, formal dimension " << *r.formal_dim << "\n";
            else
                s.out << "poincare duality: no (" << r.reason << ")\n";
        });
    } catch (const DisconnectedError& e) {
        s.out << "connected: no (" << e.components() << " components)\n";
        s.out << "poincare duality: no (not connected)\n";
    }
}

void cmd_fixed_set(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    const ActionBlock& a = pick_action(doc, o, x);
    const RegularModel m = make_regular(x.complex, a.action);
    const SimplicialComplex fixed = fixed_subcomplex(m.complex, m.action);
    s.out << "action " << a.name << " on " << x.name << ", p = " << a.p << "\n";
    s.out << "barycentric subdivisions for regularity: " << m.subdivisions << "\n";
    if (fixed.is_empty()) {
        s.out << "fixed set: empty\n";
        return;
    }
    describe_complex(s.out, "X^G", fixed);
    const auto comps = fixed.components();
    s.out << "components: " << comps.size() << "\n";
    for (std::size_t i = 0; i < comps.size(); ++i)
        s.out << "  component " << i + 1 << ": dim " << comps[i].dim() << ", " << comps[i].vertex_count()
              << " vertices, F" << a.p << " betti " << cohomology(comps[i], Coefficients::mod(a.p)).to_string()
              << "\n";
    s.out << "dim H^*(X^G; F" << a.p << ") = " << total_betti(fixed, a.p) << "\n";
    for (const auto& f : fixed.facets())
        s.out << "facet " << join_labels(fixed.simplex_labels(f)) << "\n";
}

void cmd_lefschetz(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    const ActionBlock& a = pick_action(doc, o, x);
    s.add(lefschetz_check(x.complex, a.action), x.name + "/" + a.name + "/lefschetz");
}

TheoremReport block_structure_report(const SimplicialComplex& x, const GroupAction& a, const TFRDecomposition& t)
{
    const bool bock = bockstein_condition(x, a.p);
    std::size_t other = 0;
    for (const auto& d : t.degrees)
        other += d.other.size();
    return make_report("block-structure",
                       {{"no Z/p summand in H^*(X; Z_(p))", bock, bock ? "Bockstein vanishes" : "Bockstein nonzero"}},
                       "blocks of other sizes", static_cast<long>(other), "expected", 0, Relation::Equal);
}

void cmd_tfr(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    const ActionBlock& a = pick_action(doc, o, x);
    const TFRDecomposition t = tfr_decomposition(x.complex, a.action);
    s.out << t.to_string();
    if (!t.to_string().empty() && t.to_string().back() != '\n')
        s.out << "\n";
    s.add(block_structure_report(x.complex, a.action, t), x.name + "/" + a.name + "/tfr");
}

void cmd_bockstein(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    std::optional<std::uint32_t> p = o.p;
    if (!p && !o.action.empty())
        p = pick_action(doc, o, x).p;
    if (!p) {
        for (const auto& a : doc.actions)
            if (a.complex == x.name) {
                p = pick_action(doc, o, x).p;
                break;
            }
    }
    if (!p)
        throw InputError("bockstein needs --p or an action on the complex");
    const GradedBetti b = integral_cohomology(x.complex);
    s.out << "H^*(" << x.name << "; Z) = " << b.to_string() << "\n";
    const bool holds = bockstein_condition(x.complex, *p);
    s.out << "bockstein condition at p = " << *p << ": " << (holds ? "holds" : "fails") << "\n";
}

void cmd_equivariant_betti(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    const ActionBlock& a = pick_action(doc, o, x);
    auto [lo, hi] = o.degrees.empty() ? std::pair<int, int>{0, std::max(x.complex.dim(), 0) + 2}
                                      : parse_degrees(o.degrees);
    const auto b = equivariant_betti(x.complex, a.action, lo, hi);
    for (int n = lo; n <= hi; ++n)
        s.out << "H^" << n << "_G(" << x.name << "; F" << a.p << ") = " << b[n - lo] << "\n";
}

TheoremReport localization_report(const SimplicialComplex& x, const GroupAction& a)
{
    const LocalizationReport l = localization_check(x, a);
    const std::string d1 = "dim H^" + std::to_string(l.base_dim + 1) + "_G";
    TheoremReport r = make_report("localization", {}, d1, static_cast<long>(l.at_dim_plus_1), "dim H^*(X^G)",
                                  static_cast<long>(l.fixed_total), Relation::Equal);
    const long d2 = static_cast<long>(l.at_dim_plus_2), fx = static_cast<long>(l.fixed_total);
    r.side_checks.push_back({"degree " + std::to_string(l.base_dim + 2), d2, fx, Relation::Equal, d2 == fx});
    return r;
}

void cmd_localization(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    const ActionBlock& a = pick_action(doc, o, x);
    s.add(localization_report(x.complex, a.action), x.name + "/" + a.name + "/localization");
}

void cmd_theorem2(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    const ActionBlock& a = pick_action(doc, o, x);
    s.add(check_theorem2(x.complex, a.action), x.name + "/" + a.name + "/theorem2");
}

void cmd_theorem4(Session& s, const InputDocument& doc, const Options& o)
{
    const ComplexBlock& x = pick_complex(doc, o);
    const ActionBlock& a = pick_action(doc, o, x);
    s.add(check_theorem4(x.complex, a.action), x.name + "/" + a.name + "/theorem4");
}

// ---- algebra commands ----------------------------------------------------

template <Field F>
void algebra_summary(std::ostream& os, const std::string& name, const DgModel<F>& m)
{
    os << "algebra " << name << " over " << m.algebra.field().name() << ": dim " << m.algebra.dim()
       << ", orientation degree (0," << m.orientation.n << ")\n";
    os << "bidegrees:";
    for (const auto& [d, k] : m.algebra.profile())
        os << " " << to_string(d) << ":" << k;
    os << "\n";
}

template <Field F>
void algebra_check(Session& s, const std::string& name, const DgModel<F>& m, bool full)
{
    const auto& a = m.algebra;
    const auto& o = m.orientation;
    const auto& d = m.differential;
    if (auto err = a.validate()) {
        s.out << "algebra axioms: violated (" << *err << ")\n";
        s.out << "CHECK " << name << "/axioms: FAIL\n";
        s.fail();
        return;
    }
    std::optional<PdCheck> pd;
    try {
        pd = check_pd(a, o);
        s.out << "poincare duality: " << (pd->is_pd() ? "yes" : "no") << " (connected "
              << (pd->connected ? "yes" : "no") << ", nondegenerate " << (pd->nondegenerate ? "yes" : "no") << ")\n";
    } catch (const AlgebraError& e) {
        s.out << "poincare duality: no (" << e.what() << ")\n";
    }
    const DerivationCheck der = check_derivation(a, d);
    s.out << "differential: " << (der.valid ? "derivation with delta^2 = 0" : der.reason);
    if (der.pair)
        s.out << " at (" << a.name(der.pair->first) << ", " << a.name(der.pair->second) << ")";
    s.out << ", shift " << to_string(d.shift) << "\n";

    if (o.n % 2 == 0) {
        const bool char_ok = a.field().characteristic() != 2;
        const bool is_pd = pd && pd->is_pd();
        const auto ed = euler_and_dim(a);
        s.add(make_report("even-congruence",
                          {{"characteristic not 2", char_ok, "field " + a.field().name()},
                           {"connected Poincare duality algebra", is_pd, "n = " + std::to_string(o.n)},
                           {"formal dimension even", true, "n = " + std::to_string(o.n)}},
                          "dim A", static_cast<long>(ed.total_dim), "chi(A)", ed.chi),
              name + "/even-congruence", full);
    } else {
        const auto odd = odd_congruence(a, d, o);
        s.add(make_report("odd-congruence", odd.hypotheses, "dim A", static_cast<long>(odd.dim_a), "dim H(A,delta)",
                          static_cast<long>(odd.dim_h)),
              name + "/odd-congruence", full);
    }

    if (!der.valid || !pd || !pd->is_pd())
        return;
    const auto h = homology(a, d, o);
    long n_h = o.n;
    bool ok = true;
    std::string evidence = "H(A, delta) = 0";
    if (!h.is_zero()) {
        try {
            const PdCheck hp = check_pd(*h.algebra, *h.orientation);
            ok = hp.is_pd();
            n_h = hp.formal_dim;
            evidence = "dim H = " + std::to_string(h.dim());
        } catch (const AlgebraError& e) {
            ok = false;
            evidence = e.what();
        }
    }
    s.out << "homology: " << evidence << (ok ? "" : ", not Poincare duality") << "\n";
    TheoremReport r = make_report("homology-pd", {{"delta is a differential derivation", true, "checked"}},
                                  "formal dim H", ok ? n_h : -1, "n", o.n, Relation::Equal);
    s.add(r, name + "/homology-pd", full);
}

void cmd_algebra_check(Session& s, const InputDocument& doc, const Options& o)
{
    const AlgebraBlock& blk = pick_algebra(doc, o);
    with_field(blk.coefficients(o.p), [&](const auto& f) {
        const auto m = blk.build(f);
        algebra_summary(s.out, blk.name, m);
        algebra_check(s, blk.name, m, true);
    });
}

void cmd_theorem1_alg(Session& s, const InputDocument& doc, const Options& o)
{
    const AlgebraBlock& blk = pick_algebra(doc, o);
    with_field(blk.coefficients(o.p), [&](const auto& f) {
        const auto m = blk.build(f);
        algebra_summary(s.out, blk.name, m);
        s.add(check_theorem1_algebraic(m.algebra, m.differential, m.orientation), blk.name + "/theorem1-alg");
    });
}

// ---- suite ---------------------------------------------------------------

void cmd_suite(Session& s)
{
    for (const auto& inst : action_corpus()) {
        const auto& x = inst.complex;
        const auto& a = inst.action;
        s.add(check_theorem2(x, a), inst.name + "/theorem2", false);
        s.add(check_theorem4(x, a), inst.name + "/theorem4", false);
        s.add(check_euler_route(x, a), inst.name + "/euler-route", false);
        s.add(lefschetz_check(x, a), inst.name + "/lefschetz", false);
        s.add(smith_inequality_check(x, a), inst.name + "/smith", false);
        s.add(localization_report(x, a), inst.name + "/localization", false);
        s.add(block_structure_report(x, a, tfr_decomposition(x, a)), inst.name + "/tfr", false);
        const EvenCodimReport e = check_even_codim(x, a);
        const bool hm = homology_manifold_check(x, Coefficients::mod(a.p)).is_hm;
        std::size_t odd = 0;
        for (const auto& c : e.components)
            odd += !c.even_codim;
        s.add(make_report("even-codim", {{"X is a Z_(p)-homology manifold", hm, ""}}, "odd-codimension components",
                          static_cast<long>(odd), "expected", 0, Relation::Equal),
              inst.name + "/even-codim", false);
    }
    const RationalField q;
    algebra_check(s, "sphere-S2", [&] {
        auto m = sphere_model(q, {0, 2});
        return DgModel<RationalField>{m.algebra, m.orientation, Differential<RationalField>::zero(m.algebra)};
    }(), false);
    algebra_check(s, "cp2", [&] {
        auto m = cp2_model(q);
        return DgModel<RationalField>{m.algebra, m.orientation, Differential<RationalField>::zero(m.algebra)};
    }(), false);
    for (int mm : {1, 2})
        algebra_check(s, "odd-example-m" + std::to_string(mm), odd_example_model(q, mm), false);
    algebra_check(s, "lambda-3-5-9", lambda_359_model(q), false);
}

std::string render_help(const CLI::App& app)
{
    std::ostringstream os;
    os << app.help();
    os << "\ncommands:\n";
    for (const auto& c : commands())
        os << "  " << c << "\n";
    os << "\nexit codes: 0 all checks pass, 1 a check failed, 2 not applicable (--strict), 3 input error\n";
    return os.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Mod-4 congruence checks for Z/p actions and bigraded Poincare duality algebras", "pdcong"};
    app.add_option("command", o.command, "operation to run")->required();
    app.add_option("--file", o.file, "input document");
    app.add_option("--complex", o.complex, "complex block name");
    app.add_option("--action", o.action, "action block name");
    app.add_option("--algebra", o.algebra, "algebra block name");
    app.add_option("--p", o.p, "prime");
    app.add_option("--field", o.field, "Q, Fp, F<prime> (Z for cohomology)");
    app.add_flag("--strict", o.strict, "exit 2 when a hypothesis fails");
    app.add_option("--degrees", o.degrees, "degree range <lo>..<hi>");
    app.add_option("--report", o.report, "also write the report to this path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << render_help(app);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    Session s;
    try {
        if (std::find(commands().begin(), commands().end(), o.command) == commands().end())
            throw InputError("unknown command '" + o.command + "'");
        if (o.p && (*o.p < 3 || !is_prime(*o.p)))
            throw InputError("--p " + std::to_string(*o.p) + " is not an odd prime");
        if (o.command == "suite") {
            cmd_suite(s);
        } else {
            if (o.file.empty())
                throw InputError(o.command + " needs --file");
            const InputDocument doc = [&] {
                try {
                    return parse_document(read_file(o.file));
                } catch (const DocumentError& e) {
                    throw InputError(o.file + ":" + std::to_string(e.where().line) + ":" +
                                     std::to_string(e.where().column) + ": " + e.message());
                }
            }();
            if (o.command == "cohomology")
                cmd_cohomology(s, doc, o);
            else if (o.command == "pd-check")
                cmd_pd_check(s, doc, o);
            else if (o.command == "fixed-set")
                cmd_fixed_set(s, doc, o);
            else if (o.command == "lefschetz")
                cmd_lefschetz(s, doc, o);
            else if (o.command == "tfr")
                cmd_tfr(s, doc, o);
            else if (o.command == "bockstein")
                cmd_bockstein(s, doc, o);
            else if (o.command == "equivariant-betti")
                cmd_equivariant_betti(s, doc, o);
            else if (o.command == "localization")
                cmd_localization(s, doc, o);
            else if (o.command == "theorem1-alg")
                cmd_theorem1_alg(s, doc, o);
            else if (o.command == "theorem2")
                cmd_theorem2(s, doc, o);
            else if (o.command == "theorem4")
                cmd_theorem4(s, doc, o);
            else
                cmd_algebra_check(s, doc, o);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const std::string text = s.out.str();
    out << text;
    if (!o.report.empty()) {
        std::ofstream rep(o.report, std::ios::binary);
        if (!rep || !(rep << text)) {
            err << "error: cannot write " << o.report << "\n";
            return kExitInputError;
        }
    }
    return s.exit_code(o.strict);
}

} // namespace pdcong
