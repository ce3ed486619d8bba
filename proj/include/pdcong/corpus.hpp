#pragma once

// Standard complexes with Z/p actions used by the suite command and tests.

#include <string>
#include <vector>

#include "pdcong/group_action.hpp"

namespace pdcong {

struct ActionInstance {
    std::string name;
    SimplicialComplex complex;
    GroupAction action;
};

/// Rotation v_i -> v_{i+step} of polygon(n, prefix).
ActionInstance polygon_rotation(unsigned n, unsigned step, std::uint32_t p, const std::string& prefix = "v");
/// Suspension of a polygon with the rotation fixing both poles.
ActionInstance suspended_rotation(unsigned n, std::uint32_t p, const std::string& prefix = "v");
/// Action on the subdivided polygon, which preserves the vertex order on
/// every simplex (usable as a factor of a staircase product).
ActionInstance subdivided_rotation(unsigned n, std::uint32_t p, const std::string& prefix = "v");
/// Suspension of the subdivided rotation.
ActionInstance suspended_subdivided_rotation(unsigned n, std::uint32_t p, const std::string& prefix = "v");

/// x acted on trivially times (y, b).  b must preserve vertex order on simplices.
ActionInstance product_action(const SimplicialComplex& x, const ActionInstance& y, const std::string& name);
/// Diagonal action on the join.
ActionInstance join_action(const ActionInstance& x, const ActionInstance& y, const std::string& name);
ActionInstance trivial_action(const SimplicialComplex& x, std::uint32_t p, const std::string& name);

/// Three 2-spheres (suspended triangles) sharing the north pole, permuted
/// cyclically by Z/3.
ActionInstance three_spheres_permuted();

/// Two triangle boundaries sharing the vertex "a".
SimplicialComplex figure_eight();

/// Free diagonal Z/3 action on join(3-gon, 3-gon) = S^3.
ActionInstance s3_free_join();

/// The full list, in report order.
std::vector<ActionInstance> action_corpus();

} // namespace pdcong
