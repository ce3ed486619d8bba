#pragma once

// Finite simplicial complexes over an explicitly ordered vertex set.
//
// Simplices are sorted vectors of vertex indices; the index order is the
// declared vertex order and fixes every sign in the cochain formulas.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdcong/matrix.hpp"

namespace pdcong {

using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;

class ComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Cellular cochain complex with integer coboundaries: cells[k] generators in
/// degree k and coboundary[k] : C^k -> C^{k+1}.
struct CochainComplex {
    std::vector<std::size_t> cells;
    std::vector<SparseIntMatrix> coboundary;

    int dim() const { return static_cast<int>(cells.size()) - 1; }
    long euler_characteristic() const;
};

class SimplicialComplex {
public:
    /// Labelled constructor.  vertex_order lists every vertex; declared
    /// vertices that occur in no facet become isolated points.  Contained
    /// facets are dropped.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets,
                                         const std::vector<std::string>& vertex_order);
    /// As above with the lexicographic order on the labels that occur.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

    /// Index-based constructor used by the constructions; labels not used by
    /// any facet are discarded (indices are renumbered preserving order).
    /// An empty facet list yields the empty complex.
    static SimplicialComplex from_index_facets(const std::vector<std::string>& labels,
                                               const std::vector<Simplex>& facets);

    static SimplicialComplex empty() { return SimplicialComplex(); }

    bool is_empty() const { return simplices_.empty(); }
    int dim() const { return static_cast<int>(simplices_.size()) - 1; }
    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    std::optional<Vertex> vertex_index(const std::string& label) const;

    const std::vector<Simplex>& simplices(int k) const;
    std::size_t count(int k) const { return simplices(k).size(); }
    std::size_t total_simplices() const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }
    const std::vector<Simplex>& facets() const { return facets_; }
    bool is_pure() const;

    std::vector<std::string> simplex_labels(const Simplex& s) const;
    std::string simplex_name(const Simplex& s) const; // "{a,b,c}"

    /// Connected components as vertex sets (each sorted), ordered by least vertex.
    std::vector<std::vector<Vertex>> component_vertices() const;
    std::size_t component_count() const { return component_vertices().size(); }
    std::vector<SimplicialComplex> components() const;

    /// Subcomplex generated by the given simplices (they need not be facets).
    SimplicialComplex subcomplex(const std::vector<Simplex>& generators) const;

    /// Link of a simplex; the link of a facet is the empty complex.
    SimplicialComplex link(const Simplex& s) const;

    /// Integer coboundary C^k -> C^{k+1}: entry (tau, face_i(tau)) = (-1)^i.
    SparseIntMatrix coboundary(int k) const;
    CochainComplex cochain_complex() const;

    bool operator==(const SimplicialComplex& o) const
    {
        return labels_ == o.labels_ && facets_ == o.facets_;
    }

private:
    SimplicialComplex() = default;
    void build(const std::vector<Simplex>& facets);

    std::vector<std::string> labels_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    std::vector<Simplex> facets_;
};

long euler_characteristic(const SimplicialComplex& x);

/// Barycentric subdivision together with the simplex each new vertex is the
/// barycenter of.  New vertices are ordered by (dimension, lexicographic).
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> barycenter_of;
};
Subdivision subdivide(const SimplicialComplex& x);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x);

/// Join; labels are kept when disjoint and otherwise prefixed "1." / "2.".
/// Vertex order: all of x, then all of y.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);
/// Join with two new points (labels "N" and "S", primed until unused).
SimplicialComplex suspension(const SimplicialComplex& x);
/// Staircase triangulation of x * y on the vertex grid, labels "(a,b)", vertex
/// order lexicographic in (x order, y order).
SimplicialComplex product(const SimplicialComplex& x, const SimplicialComplex& y);

/// Vertex index of the grid point (i, j) in product(x, y).
inline Vertex product_vertex(const SimplicialComplex& /*x*/, const SimplicialComplex& y, Vertex i, Vertex j)
{
    return static_cast<Vertex>(i * y.vertex_count() + j);
}

// Small standard complexes.
SimplicialComplex polygon(unsigned n, const std::string& prefix = "v");
SimplicialComplex full_simplex(unsigned dim, const std::string& prefix = "v");
SimplicialComplex point(const std::string& label = "v0");
/// Six-vertex real projective plane (10 triangles).
SimplicialComplex projective_plane6();

} // namespace pdcong
