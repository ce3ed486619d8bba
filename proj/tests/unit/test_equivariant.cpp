#include <doctest.h>

#include "oracles.hpp"
#include "pdcong/corpus.hpp"
#include "pdcong/equivariant.hpp"

using namespace pdcong;

namespace {

std::size_t fixed_total(const ActionInstance& inst)
{
    const RegularModel m = make_regular(inst.complex, inst.action);
    const SimplicialComplex fx = fixed_subcomplex(m.complex, m.action);
    return fx.is_empty() ? 0 : cohomology(fx, Coefficients{inst.action.p}).total();
}

oracle::IntGrid to_grid(const Matrix<PrimeField>& m)
{
    oracle::IntGrid g(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            g[r][c] = m(r, c);
    return g;
}

Matrix<PrimeField> cyclic_shift(const PrimeField& f, std::size_t n)
{
    Matrix<PrimeField> g(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        g((i + 1) % n, i) = 1;
    return g;
}

} // namespace

TEST_CASE("Borel complex is a complex")
{
    for (const auto& inst : {suspended_rotation(3, 3), polygon_rotation(5, 1, 5), s3_free_join()}) {
        CAPTURE(inst.name);
        const PrimeField f(inst.action.p);
        const EquivariantComplex ec(inst.complex, inst.action, 5);
        for (int j = 0; j <= inst.complex.dim(); ++j) {
            const auto y = ec.difference(j).to_field(f);
            const auto nm = ec.norm(j).to_field(f);
            CHECK((nm * y).is_zero());
            CHECK((y * nm).is_zero());
        }
        const auto& tot = ec.total();
        for (std::size_t n = 0; n + 1 < tot.coboundary.size(); ++n)
            CHECK((tot.coboundary[n + 1].to_field(f) * tot.coboundary[n].to_field(f)).is_zero());
    }
}

TEST_CASE("equivariant Betti numbers of small actions")
{
    // a point with the trivial action sees the cohomology of BZ/3
    const auto point = trivial_action(SimplicialComplex::from_facets({{"v"}}), 3, "point");
    CHECK(equivariant_betti(point.complex, point.action, 0, 6) == std::vector<std::size_t>(7, 1));

    // free actions: H_G = H(X/G)
    for (const auto& inst : {polygon_rotation(5, 1, 5), s3_free_join(), polygon_rotation(7, 2, 7)}) {
        CAPTURE(inst.name);
        const QuotientComplex q = quotient_complex(inst.complex, inst.action);
        const GradedBetti qb = cohomology(q.cochains, Coefficients{inst.action.p});
        const int top = inst.complex.dim() + 3;
        const auto eb = equivariant_betti(inst.complex, inst.action, 0, top);
        for (int n = 0; n <= top; ++n)
            CHECK(eb[n] == qb.at(n));
    }
    const auto pent = polygon_rotation(5, 1, 5);
    const auto pb = equivariant_betti(pent.complex, pent.action, 0, 4);
    CHECK(pb == std::vector<std::size_t>{1, 1, 0, 0, 0});

    const auto s2 = suspended_rotation(3, 3);
    const auto sb = equivariant_betti(s2.complex, s2.action, 3, 4);
    CHECK(sb == std::vector<std::size_t>{2, 2});
    CHECK(fixed_total(s2) == 2);
}

TEST_CASE("localization on the corpus")
{
    for (const auto& inst : action_corpus()) {
        CAPTURE(inst.name);
        const LocalizationReport r = localization_check(inst.complex, inst.action);
        CHECK(r.fixed_total == fixed_total(inst));
        CHECK(r.at_dim_plus_1 == r.fixed_total);
        CHECK(r.at_dim_plus_2 == r.fixed_total);
        CHECK(r.holds);
    }
}

TEST_CASE("two-periodicity above the dimension")
{
    for (const auto& inst : {suspended_rotation(3, 3), three_spheres_permuted(), polygon_rotation(5, 1, 5)}) {
        CAPTURE(inst.name);
        const int d = inst.complex.dim();
        const auto b = equivariant_betti(inst.complex, inst.action, d + 1, d + 4);
        CHECK(b[0] == b[2]);
        CHECK(b[1] == b[3]);
    }
}

TEST_CASE("localization examples")
{
    const auto pent = polygon_rotation(5, 1, 5);
    const auto r1 = localization_check(pent.complex, pent.action);
    CHECK(r1.fixed_total == 0);
    CHECK(r1.at_dim_plus_1 == 0);
    CHECK(r1.holds);

    const auto s2 = suspended_rotation(3, 3);
    const auto r2 = localization_check(s2.complex, s2.action);
    CHECK(r2.fixed_total == 2);
    CHECK(r2.holds);

    // torus = triangle boundary x rotated subdivided triangle: no fixed points
    const auto torus = product_action(polygon_rotation(3, 1, 3).complex, subdivided_rotation(3, 3, "b"), "torus");
    const auto r3 = localization_check(torus.complex, torus.action);
    CHECK(r3.fixed_total == 0);
    CHECK(r3.at_dim_plus_1 == 0);
    CHECK(r3.at_dim_plus_2 == 0);
}

TEST_CASE("group cohomology of small modules")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        CAPTURE(p);
        const PrimeField f(p);
        const auto trivial = group_cohomology_dims(Matrix<PrimeField>::identity(f, 1));
        CHECK(trivial.even == 1);
        CHECK(trivial.odd == 1);
        CHECK(trivial.evaluated_even == 1);
        CHECK(trivial.evaluated_odd == 0);

        const auto free = group_cohomology_dims(cyclic_shift(f, p));
        CHECK(free.even == 0);
        CHECK(free.odd == 0);
        CHECK(free.evaluated_even == 0);
        CHECK(free.evaluated_odd == 0);

        // ker of augmentation, basis e_i - e_0 (i = 1..p-1) of F_p[G]
        Matrix<PrimeField> aug(f, p - 1, p - 1);
        for (std::size_t i = 1; i < p; ++i) {
            // g(e_i - e_0) = e_{i+1} - e_1 = (e_{i+1} - e_0) - (e_1 - e_0)
            const std::size_t next = (i + 1) % p;
            if (next != 0)
                aug(next - 1, i - 1) = f.add(aug(next - 1, i - 1), 1);
            aug(0, i - 1) = f.sub(aug(0, i - 1), 1);
        }
        const auto r = group_cohomology_dims(aug);
        CHECK(r.evaluated_even == 0);
        CHECK(r.evaluated_odd == 1);
        CHECK(r.even == 1);
        CHECK(r.odd == 1);

        // raw dimensions against plain kernel/image counts
        for (const auto& g : {Matrix<PrimeField>::identity(f, 1), cyclic_shift(f, p), aug}) {
            const std::size_t n = g.rows();
            Matrix<PrimeField> norm(f, n, n), gk = Matrix<PrimeField>::identity(f, n);
            for (std::uint32_t k = 0; k < p; ++k) {
                norm = norm + gk;
                gk = gk * g;
            }
            const auto ry = oracle::rank_mod_p(to_grid(g - Matrix<PrimeField>::identity(f, n)), p);
            const auto rn = oracle::rank_mod_p(to_grid(norm), p);
            const auto d = group_cohomology_dims(g);
            CHECK(d.even == n - ry - rn);
            CHECK(d.odd == n - rn - ry);
        }

        Matrix<PrimeField> bad(f, 1, 1);
        bad(0, 0) = 2;
        CHECK_THROWS_AS(group_cohomology_dims(bad), std::invalid_argument);
    }
}

TEST_CASE("E2 rows match the TFR decomposition")
{
    for (const auto& inst : action_corpus()) {
        CAPTURE(inst.name);
        const std::uint32_t p = inst.action.p;
        const PrimeField f(p);
        const auto maps = induced_cohomology_action(inst.complex, inst.action, f);
        const TFRDecomposition tfr = tfr_decomposition(inst.complex, inst.action);
        for (std::size_t mu = 0; mu < maps.size(); ++mu) {
            CAPTURE(mu);
            const auto d = group_cohomology_dims(maps[mu]);
            CHECK(d.evaluated_even == tfr.degrees[mu].t);
            CHECK(d.evaluated_odd == tfr.degrees[mu].r);
            CHECK(d.even == tfr.degrees[mu].t + tfr.degrees[mu].r);
            CHECK(d.odd == tfr.degrees[mu].t + tfr.degrees[mu].r);
        }
    }
}
