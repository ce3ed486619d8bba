#include <doctest.h>

#include "pdcong/corpus.hpp"
#include "pdcong/group_action.hpp"

using namespace pdcong;

namespace {

// Hopf trace: alternating sum over simplices of the chain-level trace of sigma.
long hopf_trace(const SimplicialComplex& x, const GroupAction& a)
{
    long total = 0;
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k)) {
            const auto [img, sign] = a.apply(s);
            if (img == s)
                total += (k % 2 == 0 ? 1 : -1) * sign;
        }
    return total;
}

std::size_t total_betti(const SimplicialComplex& x, std::uint32_t p)
{
    return x.is_empty() ? 0 : cohomology(x, Coefficients{p}).total();
}

} // namespace

TEST_CASE("validate_action")
{
    auto x = polygon(5);
    CHECK_NOTHROW(validate_action(x, {1, 2, 3, 4, 0}, 5));
    CHECK_THROWS_AS(validate_action(x, {1, 2, 3, 4, 0}, 3), ActionError);
    auto tri = polygon(3);
    try {
        validate_action(tri, {{"v0", "v1"}, {"v1", "v0"}}, 3);
        FAIL("transposition accepted");
    } catch (const ActionError& e) {
        CHECK(std::string(e.what()).find("(v0 v1)") != std::string::npos);
    }
    // a permutation of the right order that is not simplicial
    auto path = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}});
    CHECK_THROWS_AS(validate_action(path, {{"a", "b"}, {"b", "c"}, {"c", "a"}}, 3), ActionError);
    CHECK_THROWS_AS(validate_action(x, {0, 0, 1, 2, 3}, 5), ActionError);
    CHECK_THROWS_AS(validate_action(x, {0, 1, 2, 3, 4}, 2), ActionError);
    CHECK_THROWS_AS(validate_action(x, {{"zz", "v0"}}, 5), ActionError);
}

TEST_CASE("regularity")
{
    auto s = suspended_rotation(3, 3);
    CHECK(is_regular(s.complex, s.action));
    CHECK(make_regular(s.complex, s.action).subdivisions == 0);
    auto pg = polygon_rotation(5, 1, 5);
    CHECK(make_regular(pg.complex, pg.action).subdivisions == 0);

    auto simplex = full_simplex(2);
    auto a = validate_action(simplex, {1, 2, 0}, 3);
    CHECK_FALSE(is_regular(simplex, a));
    CHECK_THROWS_AS(fixed_subcomplex(simplex, a), ActionError);
    auto reg = make_regular(simplex, a);
    CHECK(reg.subdivisions == 1);
    auto fixed = fixed_subcomplex(reg.complex, reg.action);
    CHECK(fixed.count(0) == 1);
    CHECK(fixed.dim() == 0);

    for (const auto& inst : action_corpus()) {
        CAPTURE(inst.name);
        auto r = make_regular(inst.complex, inst.action);
        CHECK(r.subdivisions <= 1);
        CHECK(is_regular(r.complex, r.action));
        CHECK(cohomology(r.complex, Coefficients{}).betti == cohomology(inst.complex, Coefficients{}).betti);
    }
}

TEST_CASE("fixed subcomplexes")
{
    auto free5 = polygon_rotation(5, 1, 5);
    CHECK(fixed_subcomplex(free5.complex, free5.action).is_empty());

    auto s2 = suspended_rotation(3, 3);
    auto poles = fixed_subcomplex(s2.complex, s2.action);
    CHECK(poles.count(0) == 2);
    CHECK(poles.dim() == 0);

    auto prod = product_action(polygon(3, "a"), suspended_subdivided_rotation(3, 3, "b"), "x");
    auto fixed = fixed_subcomplex(prod.complex, prod.action);
    CHECK(fixed.component_count() == 2);
    CHECK(cohomology(fixed, Coefficients{}).total() == 4);

    // direct scan oracle and powers coprime to p
    for (const auto& inst : action_corpus()) {
        CAPTURE(inst.name);
        const auto f = fixed_subcomplex(inst.complex, inst.action);
        std::size_t expected = 0;
        for (Vertex v = 0; v < inst.complex.vertex_count(); ++v)
            if (inst.action(v) == v)
                ++expected;
        CHECK(f.count(0) == expected);
        for (unsigned k = 2; k < inst.action.p; ++k)
            CHECK(fixed_subcomplex(inst.complex, inst.action.power(k)) == f);
    }
}

TEST_CASE("induced cohomology action")
{
    RationalField q;
    auto pg = polygon_rotation(5, 1, 5);
    for (const auto& m : induced_cohomology_action(pg.complex, pg.action, q))
        CHECK(m == Matrix<RationalField>::identity(q, m.rows()));

    auto triv = trivial_action(product(polygon(3, "a"), polygon(3, "b")), 3, "t");
    for (const auto& m : induced_cohomology_action(triv.complex, triv.action, q))
        CHECK(m == Matrix<RationalField>::identity(q, m.rows()));

    auto s3 = s3_free_join();
    auto mats = induced_cohomology_action(s3.complex, s3.action, q);
    CHECK(mats[0] == Matrix<RationalField>::identity(q, 1));
    CHECK(mats[3] == Matrix<RationalField>::identity(q, 1));

    // (g*)^p = id over F_p and Q
    for (const auto& inst : action_corpus()) {
        CAPTURE(inst.name);
        PrimeField f(inst.action.p);
        for (const auto& m : induced_cohomology_action(inst.complex, inst.action, f))
            CHECK(m.power(inst.action.p) == Matrix<PrimeField>::identity(f, m.rows()));
        for (const auto& m : induced_cohomology_action(inst.complex, inst.action, q))
            CHECK(m.power(inst.action.p) == Matrix<RationalField>::identity(q, m.rows()));
    }

    // the permuted spheres: g* on H^2 is a cyclic permutation (trace 0)
    auto three = three_spheres_permuted();
    auto h2 = induced_cohomology_action(three.complex, three.action, q)[2];
    CHECK(h2.rows() == 3);
    CHECK(h2(0, 0) + h2(1, 1) + h2(2, 2) == 0);
}

TEST_CASE("Lefschetz numbers")
{
    auto pg = polygon_rotation(5, 1, 5);
    CHECK(lefschetz_number(pg.complex, pg.action) == 0);
    auto s2 = suspended_rotation(3, 3);
    CHECK(lefschetz_number(s2.complex, s2.action) == 2);
    auto t = trivial_action(product(polygon(3, "a"), polygon(3, "b")), 3, "t");
    CHECK(lefschetz_number(t.complex, t.action) == 0);

    for (const auto& inst : action_corpus()) {
        CAPTURE(inst.name);
        for (unsigned k = 0; k < inst.action.p; ++k) {
            const auto g = inst.action.power(k);
            const long lambda = lefschetz_number(inst.complex, g);
            CHECK(lambda == hopf_trace(inst.complex, g));
            const auto fixed = fixed_subcomplex(inst.complex, g);
            CHECK(lambda == (fixed.is_empty() ? 0 : euler_characteristic(fixed)));
        }
    }
}

TEST_CASE("trivial rational action")
{
    auto s2 = suspended_rotation(3, 3);
    CHECK(trivial_rational_action_check(s2.complex, s2.action));
    for (const auto& inst : action_corpus()) {
        CAPTURE(inst.name);
        if (cohomology(inst.complex, Coefficients{}).total() < inst.action.p)
            CHECK(trivial_rational_action_check(inst.complex, inst.action));
    }
    auto three = three_spheres_permuted();
    CHECK_FALSE(trivial_rational_action_check(three.complex, three.action));
}

TEST_CASE("Bockstein condition and the lens quotient")
{
    CHECK(bockstein_condition(suspension(polygon(3)), 3));
    CHECK(bockstein_condition(product(polygon(3), polygon(3)), 3));
    CHECK(bockstein_condition(projective_plane6(), 3));
    CHECK_FALSE(bockstein_condition(projective_plane6(), 2));

    auto s3 = s3_free_join();
    auto lens = quotient_complex(s3.complex, s3.action);
    CHECK_FALSE(bockstein_condition(lens.cochains, 3));
    CHECK(cohomology(lens.cochains, Coefficients{3}).betti == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(cohomology(lens.cochains, Coefficients{}).betti == std::vector<std::size_t>{1, 0, 0, 1});
    auto z = integral_cohomology(lens.cochains);
    CHECK(z.torsion[2] == std::vector<mpz_class>{3});
    CHECK(lens.cochains.euler_characteristic() * 3 == euler_characteristic(s3.complex));
}

TEST_CASE("quotients of free actions")
{
    auto pg = polygon_rotation(5, 1, 5);
    auto q = quotient_complex(pg.complex, pg.action);
    CHECK(cohomology(q.cochains, Coefficients{}).betti == std::vector<std::size_t>{1, 1});
    CHECK(q.representatives[0] == std::vector<Simplex>{{0}});

    auto torus = product_action(polygon(3, "a"), subdivided_rotation(3, 3, "b"), "t");
    auto tq = quotient_complex(torus.complex, torus.action);
    CHECK(cohomology(tq.cochains, Coefficients{}).betti == std::vector<std::size_t>{1, 2, 1});
    CHECK(tq.cochains.euler_characteristic() == 0);

    auto s2 = suspended_rotation(3, 3);
    CHECK_THROWS_AS(quotient_complex(s2.complex, s2.action), ActionError);
}

TEST_CASE("TFR decomposition")
{
    auto t = trivial_action(product(polygon(3, "a"), polygon(3, "b")), 3, "t");
    auto d = tfr_decomposition(t.complex, t.action);
    REQUIRE(d.degrees.size() == 3);
    CHECK(d.degrees[0].t == 1);
    CHECK(d.degrees[1].t == 2);
    CHECK(d.degrees[2].t == 1);
    CHECK(d.dim_t() == 4);
    CHECK(d.dim_f() == 0);
    CHECK(d.dim_r() == 0);

    auto s3 = s3_free_join();
    auto e = tfr_decomposition(s3.complex, s3.action);
    CHECK(e.dim_t() == 2);
    CHECK(e.degrees[0].t == 1);
    CHECK(e.degrees[3].t == 1);
    CHECK(e.dim_f() + e.dim_r() == 0);

    // H^2 of the permuted spheres is the regular representation: one free block
    auto three = three_spheres_permuted();
    auto g = tfr_decomposition(three.complex, three.action);
    CHECK(g.degrees[2].f == 1);
    CHECK(g.degrees[2].t == 0);
    CHECK(g.dim_f() == 3);

    for (const auto& inst : action_corpus()) {
        CAPTURE(inst.name);
        const auto& x = inst.complex;
        const std::uint32_t p = inst.action.p;
        auto tfr = tfr_decomposition(x, inst.action);
        const auto b = cohomology(x, Coefficients{p});
        PrimeField f(p);
        auto mats = induced_cohomology_action(x, inst.action, f);
        for (int i = 0; i <= x.dim(); ++i) {
            const auto& deg = tfr.degrees[i];
            CHECK(deg.dim(p) == b.at(i));
            // one invariant line per block
            auto y = mats[i];
            for (std::size_t r = 0; r < y.rows(); ++r)
                y(r, r) = f.sub(y(r, r), f.one());
            CHECK(y.rows() - rank(y) == deg.t + deg.f + deg.r + deg.other.size());
        }
        if (bockstein_condition(x, p))
            CHECK_FALSE(tfr.has_other());
        // Smith inequality
        CHECK(total_betti(fixed_subcomplex(x, inst.action), p) <= b.total());
    }
}
