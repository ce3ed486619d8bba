#include "pdcong/corpus.hpp"

namespace pdcong {

ActionInstance polygon_rotation(unsigned n, unsigned step, std::uint32_t p, const std::string& prefix)
{
    auto x = polygon(n, prefix);
    std::vector<Vertex> map(n);
    for (unsigned i = 0; i < n; ++i)
        map[i] = (i + step) % n;
    return {prefix + "-" + std::to_string(n) + "gon", x, validate_action(x, map, p)};
}

ActionInstance suspended_rotation(unsigned n, std::uint32_t p, const std::string& prefix)
{
    auto base = polygon_rotation(n, n / p, p, prefix);
    auto x = suspension(base.complex);
    std::vector<Vertex> map = base.action.map;
    map.push_back(n);
    map.push_back(n + 1);
    return {"susp-" + base.name, x, validate_action(x, map, p)};
}

ActionInstance subdivided_rotation(unsigned n, std::uint32_t p, const std::string& prefix)
{
    auto base = polygon_rotation(n, n / p, p, prefix);
    auto sd = subdivide_action(base.complex, base.action);
    return {"sd-" + base.name, sd.complex, validate_action(sd.complex, sd.action.map, p)};
}

ActionInstance suspended_subdivided_rotation(unsigned n, std::uint32_t p, const std::string& prefix)
{
    auto base = subdivided_rotation(n, p, prefix);
    auto x = suspension(base.complex);
    std::vector<Vertex> map = base.action.map;
    const auto k = static_cast<Vertex>(map.size());
    map.push_back(k);
    map.push_back(k + 1);
    return {"susp-" + base.name, x, validate_action(x, map, p)};
}

ActionInstance product_action(const SimplicialComplex& x, const ActionInstance& y, const std::string& name)
{
    auto xy = product(x, y.complex);
    std::vector<Vertex> map(xy.vertex_count());
    for (Vertex i = 0; i < x.vertex_count(); ++i)
        for (Vertex j = 0; j < y.complex.vertex_count(); ++j)
            map[product_vertex(x, y.complex, i, j)] = product_vertex(x, y.complex, i, y.action(j));
    return {name, xy, validate_action(xy, map, y.action.p)};
}

ActionInstance join_action(const ActionInstance& x, const ActionInstance& y, const std::string& name)
{
    auto j = join(x.complex, y.complex);
    std::vector<Vertex> map = x.action.map;
    const auto shift = static_cast<Vertex>(map.size());
    for (Vertex v : y.action.map)
        map.push_back(v + shift);
    return {name, j, validate_action(j, map, x.action.p)};
}

ActionInstance trivial_action(const SimplicialComplex& x, std::uint32_t p, const std::string& name)
{
    return {name, x, GroupAction::identity(x, p)};
}

ActionInstance three_spheres_permuted()
{
    std::vector<std::string> labels{"N"};
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < 3; ++i)
            labels.push_back(std::to_string(c) + ":v" + std::to_string(i));
        labels.push_back(std::to_string(c) + ":S");
    }
    auto at = [](int c, int i) { return static_cast<Vertex>(1 + 4 * c + i); }; // i == 3 is the south pole
    std::vector<Simplex> facets;
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 3; ++i) {
            const Vertex a = at(c, i), b = at(c, (i + 1) % 3);
            facets.push_back({0, std::min(a, b), std::max(a, b)});
            facets.push_back({std::min(a, b), std::max(a, b), at(c, 3)});
        }
    auto x = SimplicialComplex::from_index_facets(labels, facets);
    std::vector<Vertex> map(x.vertex_count());
    map[0] = 0;
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 4; ++i)
            map[at(c, i)] = at((c + 1) % 3, i);
    return {"three-spheres-permuted", x, validate_action(x, map, 3)};
}

SimplicialComplex figure_eight()
{
    return SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}, {"d", "e"}, {"a", "e"}});
}

ActionInstance s3_free_join()
{
    return join_action(polygon_rotation(3, 1, 3, "a"), polygon_rotation(3, 1, 3, "b"), "s3-join-free-p3");
}

std::vector<ActionInstance> action_corpus()
{
    auto named = [](ActionInstance a, const std::string& name) {
        a.name = name;
        return a;
    };
    const auto susp3 = suspension(polygon(3, "a"));
    return {
        named(polygon_rotation(5, 1, 5), "pentagon-free-p5"),
        named(suspended_rotation(3, 3), "s2-rotation-p3"),
        named(suspended_rotation(5, 5), "s2-rotation-p5"),
        product_action(polygon(3, "a"), subdivided_rotation(3, 3, "b"), "torus-rotation-p3"),
        product_action(polygon(3, "a"), subdivided_rotation(5, 5, "b"), "torus-rotation-p5"),
        product_action(susp3, suspended_subdivided_rotation(3, 3, "b"), "s2xs2-rotation-p3"),
        product_action(susp3, suspended_subdivided_rotation(7, 7, "b"), "s2xs2-rotation-p7"),
        s3_free_join(),
        three_spheres_permuted(),
        trivial_action(point(), 3, "point-trivial-p3"),
        trivial_action(product(polygon(3, "a"), polygon(3, "b")), 3, "torus-trivial-p3"),
        trivial_action(suspension(polygon(4)), 5, "s2-trivial-p5"),
        trivial_action(product(susp3, suspension(polygon(3, "b"))), 3, "s2xs2-trivial-p3"),
        trivial_action(projective_plane6(), 3, "rp2-trivial-p3"),
    };
}

} // namespace pdcong
