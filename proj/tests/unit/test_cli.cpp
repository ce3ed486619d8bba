#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace pdcong;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(PDCONG_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("pdcong_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("theorem2 on the sphere fixture")
{
    const Run r = run({"theorem2", "--file", data("s2_rotation.pdc"), "--complex", "S2", "--action", "rot", "--p", "3"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "CHECK S2/rot/theorem2: PASS — 2 vs 2 (mod 4)"));
    CHECK(r.err.empty());
    // the complex and action are found without naming them
    CHECK(run({"theorem2", "--file", data("s2_rotation.pdc")}).out == r.out);
}

TEST_CASE("free actions are not applicable")
{
    for (const auto& [file, line] : std::vector<std::pair<std::string, std::string>>{
             {"pentagon_free.pdc", "CHECK C5/shift/theorem2: N/A — 0 vs 2 (mod 4)"},
             {"s3_join.pdc", "CHECK S3/diag/theorem2: N/A — 0 vs 2 (mod 4)"}}) {
        CAPTURE(file);
        const Run strict = run({"theorem2", "--file", data(file), "--strict"});
        CHECK(strict.code == kExitNotApplicable);
        CHECK(has(strict.out, line));
        CHECK(has(strict.out, "hypothesis X^G nonempty: no"));
        CHECK(run({"theorem2", "--file", data(file)}).code == kExitOk);
    }
}

TEST_CASE("algebra-check on the odd example")
{
    const Run r = run({"algebra-check", "--file", data("odd_example.pdc")});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "CHECK odd_example/odd-congruence: PASS — 6 vs 2 (mod 4)"));
    CHECK(has(r.out, "CHECK odd_example/homology-pd: PASS — 3 vs 3 (=)"));

    const Run lam = run({"theorem1-alg", "--file", data("lambda359.pdc"), "--strict"});
    CHECK(lam.code == kExitNotApplicable);
    CHECK(has(lam.out, "N/A — 8 vs 6 (mod 4)"));
    CHECK(has(lam.out, "hypothesis A^{0,i} = 0 for even 0 < i <= m: no"));

    const Run cp2 = run({"algebra-check", "--file", data("cp2.pdc")});
    CHECK(cp2.code == kExitOk);
    CHECK(has(cp2.out, "over F5"));
    CHECK(has(cp2.out, "CHECK cp2/even-congruence: PASS — 3 vs 3 (mod 4)"));
}

TEST_CASE("a violated axiom exits 1")
{
    // two odd classes that commute instead of anticommuting
    const auto path = temp_file("noncomm.pdc", "algebra B field Q\n"
                                               "basis 1 bidegree 0 0\n"
                                               "basis a bidegree 0 1\n"
                                               "basis b bidegree 0 1\n"
                                               "basis c bidegree 0 2\n"
                                               "mult a b = 1 c\n"
                                               "mult b a = 1 c\n"
                                               "phi c = 1\n"
                                               "end\n");
    const Run r = run({"algebra-check", "--file", path});
    CHECK(r.code == kExitFailed);
    CHECK(has(r.out, "CHECK B/axioms: FAIL"));
}

TEST_CASE("complex commands")
{
    const auto s2 = data("s2_rotation.pdc");
    const Run coh = run({"cohomology", "--file", s2});
    CHECK(coh.code == kExitOk);
    CHECK(has(coh.out, "H^2(S2; Q) = 1"));
    CHECK(has(coh.out, "euler characteristic = 2"));

    const Run z = run({"cohomology", "--file", data("s3_join.pdc"), "--field", "Z"});
    CHECK(has(z.out, "H^3(S3; Z) = Z^1"));
    CHECK(has(z.out, "H^1(S3; Z) = 0"));

    const Run pd = run({"pd-check", "--file", s2, "--field", "F5"});
    CHECK(has(pd.out, "poincare duality: yes, formal dimension 2"));

    const Run fixed = run({"fixed-set", "--file", s2});
    CHECK(has(fixed.out, "dim H^*(X^G; F3) = 2"));
    CHECK(has(fixed.out, "facet N\nfacet S\n"));
    CHECK(has(run({"fixed-set", "--file", data("pentagon_free.pdc")}).out, "fixed set: empty"));

    const Run lef = run({"lefschetz", "--file", data("pentagon_free.pdc")});
    CHECK(lef.code == kExitOk);
    CHECK(has(lef.out, "CHECK C5/shift/lefschetz/g^4: PASS — 0 vs 0 (=)"));

    CHECK(run({"tfr", "--file", s2}).code == kExitOk);
    CHECK(has(run({"bockstein", "--file", s2}).out, "bockstein condition at p = 3: holds"));

    const Run eb = run({"equivariant-betti", "--file", s2, "--degrees", "0..4"});
    CHECK(has(eb.out, "H^0_G(S2; F3) = 1\nH^1_G(S2; F3) = 1\nH^2_G(S2; F3) = 2\nH^3_G(S2; F3) = 2\nH^4_G(S2; F3) = 2\n"));
    CHECK(run({"equivariant-betti", "--file", s2, "--degrees", "4..2"}).code == kExitInputError);

    const Run loc = run({"localization", "--file", s2});
    CHECK(has(loc.out, "CHECK S2/rot/localization: PASS — 2 vs 2 (=)"));

    const Run t4 = run({"theorem4", "--file", s2});
    CHECK(t4.code == kExitOk);
    CHECK(has(t4.out, "CHECK S2/rot/theorem4: PASS — 2 vs 2 (mod 4)"));
}

TEST_CASE("input errors exit 3 with a location")
{
    const auto bad = temp_file("undeclared.pdc", "complex X\nvertices a b\nfacet a q\nend\n");
    const Run r = run({"cohomology", "--file", bad});
    CHECK(r.code == kExitInputError);
    CHECK(has(r.err, ":3:9: undeclared vertex 'q'"));
    CHECK(r.out.empty());

    const auto swap = temp_file("swap.pdc", "complex X\nvertices a b c\nfacet a b c\nend\n"
                                            "action s on X p 3\nmap a -> b\nmap b -> a\nend\n");
    const Run s = run({"theorem2", "--file", swap});
    CHECK(s.code == kExitInputError);
    CHECK(has(s.err, "vertex cycle (a b)"));

    CHECK(run({"frobnicate", "--file", data("s2_rotation.pdc")}).code == kExitInputError);
    CHECK(run({"theorem2"}).code == kExitInputError);
    CHECK(run({"theorem2", "--file", "/nonexistent/x.pdc"}).code == kExitInputError);
    CHECK(run({"theorem2", "--file", data("s2_rotation.pdc"), "--p", "5"}).code == kExitInputError);
    CHECK(run({"theorem2", "--file", data("s2_rotation.pdc"), "--complex", "T2"}).code == kExitInputError);
    CHECK(run({"theorem2", "--file", data("s2_rotation.pdc"), "--bogus"}).code == kExitInputError);
    CHECK(run({"pd-check", "--file", data("s2_rotation.pdc"), "--field", "F4"}).code == kExitInputError);
    CHECK(run({"algebra-check", "--file", data("s2_rotation.pdc")}).code == kExitInputError);
    CHECK(run({"theorem2", "--file", data("odd_example.pdc")}).code == kExitInputError);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("reports are deterministic and mirrored to --report")
{
    const auto path = (std::filesystem::temp_directory_path() / "pdcong_test_report.txt").string();
    const Run a = run({"theorem2", "--file", data("s2_rotation.pdc"), "--report", path});
    const Run b = run({"theorem2", "--file", data("s2_rotation.pdc")});
    CHECK(a.out == b.out);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
}

TEST_CASE("suite over the built-in corpus")
{
    const Run a = run({"suite"});
    CHECK(a.code == kExitOk);
    CHECK(has(a.out, "CHECK s2-rotation-p3/theorem2: PASS — 2 vs 2 (mod 4)"));
    CHECK(has(a.out, "CHECK torus-rotation-p3/theorem2: PASS — 0 vs 4 (mod 4)"));
    CHECK(has(a.out, "CHECK pentagon-free-p5/theorem2: N/A — 0 vs 2 (mod 4)"));
    CHECK_FALSE(has(a.out, "FAIL"));
    CHECK(run({"suite", "--strict"}).code == kExitNotApplicable);
    CHECK(run({"suite"}).out == a.out);
}
