#include "pdcong/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pdcong {

long CochainComplex::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t k = 0; k < cells.size(); ++k)
        chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(cells[k]);
    return chi;
}

namespace {

// Removes facets contained in other facets; output sorted by (size desc, lex).
std::vector<Simplex> maximal_only(std::vector<Simplex> facets)
{
    for (auto& f : facets)
        std::sort(f.begin(), f.end());
    std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<Simplex> kept;
    for (const auto& f : facets) {
        const bool contained = std::any_of(kept.begin(), kept.end(), [&](const Simplex& g) {
            return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!contained)
            kept.push_back(f);
    }
    return kept;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a)
    {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets,
                                                 const std::vector<std::string>& vertex_order)
{
    if (facets.empty() && vertex_order.empty())
        throw ComplexError("complex needs at least one facet");
    std::map<std::string, Vertex> index;
    for (const auto& v : vertex_order) {
        if (!index.emplace(v, static_cast<Vertex>(index.size())).second)
            throw ComplexError("duplicate vertex '" + v + "'");
    }
    std::vector<Simplex> idx_facets;
    std::vector<bool> used(vertex_order.size(), false);
    for (const auto& f : facets) {
        if (f.empty())
            throw ComplexError("empty facet");
        Simplex s;
        for (const auto& v : f) {
            auto it = index.find(v);
            if (it == index.end())
                throw ComplexError("facet references unknown vertex '" + v + "'");
            s.push_back(it->second);
            used[it->second] = true;
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ComplexError("facet repeats a vertex");
        idx_facets.push_back(std::move(s));
    }
    for (Vertex v = 0; v < used.size(); ++v)
        if (!used[v])
            idx_facets.push_back({v});

    SimplicialComplex x;
    x.labels_ = vertex_order;
    x.build(idx_facets);
    return x;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets)
{
    std::set<std::string> seen;
    for (const auto& f : facets)
        seen.insert(f.begin(), f.end());
    return from_facets(facets, std::vector<std::string>(seen.begin(), seen.end()));
}

SimplicialComplex SimplicialComplex::from_index_facets(const std::vector<std::string>& labels,
                                                       const std::vector<Simplex>& facets)
{
    std::vector<bool> used(labels.size(), false);
    for (const auto& f : facets) {
        if (f.empty())
            throw ComplexError("empty facet");
        for (Vertex v : f) {
            if (v >= labels.size())
                throw ComplexError("facet references vertex index out of range");
            used[v] = true;
        }
    }
    std::vector<Vertex> renumber(labels.size(), 0);
    SimplicialComplex x;
    for (Vertex v = 0; v < labels.size(); ++v)
        if (used[v]) {
            renumber[v] = static_cast<Vertex>(x.labels_.size());
            x.labels_.push_back(labels[v]);
        }
    std::vector<Simplex> mapped;
    mapped.reserve(facets.size());
    for (const auto& f : facets) {
        Simplex s;
        for (Vertex v : f)
            s.push_back(renumber[v]);
        mapped.push_back(std::move(s));
    }
    x.build(mapped);
    return x;
}

void SimplicialComplex::build(const std::vector<Simplex>& facets)
{
    facets_ = maximal_only(facets);
    std::size_t top = 0;
    for (const auto& f : facets_)
        top = std::max(top, f.size());
    std::vector<std::set<Simplex>> by_dim(top);
    for (const auto& f : facets_) {
        const std::size_t n = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i))
                    s.push_back(f[i]);
            by_dim[s.size() - 1].insert(std::move(s));
        }
    }
    simplices_.assign(top, {});
    index_.assign(top, {});
    for (std::size_t k = 0; k < top; ++k) {
        simplices_[k].assign(by_dim[k].begin(), by_dim[k].end());
        for (std::size_t i = 0; i < simplices_[k].size(); ++i)
            index_[k].emplace(simplices_[k][i], i);
    }
}

std::optional<Vertex> SimplicialComplex::vertex_index(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const
{
    static const std::vector<Simplex> none;
    if (k < 0 || k >= static_cast<int>(simplices_.size()))
        return none;
    return simplices_[k];
}

std::size_t SimplicialComplex::total_simplices() const
{
    std::size_t n = 0;
    for (const auto& s : simplices_)
        n += s.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    if (s.empty() || s.size() > index_.size())
        return std::nullopt;
    const auto& m = index_[s.size() - 1];
    auto it = m.find(s);
    if (it == m.end())
        return std::nullopt;
    return it->second;
}

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Simplex& f) { return static_cast<int>(f.size()) - 1 == dim(); });
}

std::vector<std::string> SimplicialComplex::simplex_labels(const Simplex& s) const
{
    std::vector<std::string> out;
    for (Vertex v : s)
        out.push_back(labels_.at(v));
    return out;
}

std::string SimplicialComplex::simplex_name(const Simplex& s) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += labels_.at(s[i]);
    }
    return out + "}";
}

std::vector<std::vector<Vertex>> SimplicialComplex::component_vertices() const
{
    UnionFind uf(labels_.size());
    for (const auto& e : simplices(1))
        uf.unite(e[0], e[1]);
    std::map<std::size_t, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < labels_.size(); ++v)
        groups[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& [root, vs] : groups)
        out.push_back(std::move(vs));
    return out;
}

std::vector<SimplicialComplex> SimplicialComplex::components() const
{
    std::vector<SimplicialComplex> out;
    for (const auto& vs : component_vertices()) {
        std::vector<Simplex> gens;
        for (const auto& f : facets_)
            if (std::binary_search(vs.begin(), vs.end(), f.front()))
                gens.push_back(f);
        out.push_back(from_index_facets(labels_, gens));
    }
    return out;
}

SimplicialComplex SimplicialComplex::subcomplex(const std::vector<Simplex>& generators) const
{
    for (const auto& g : generators)
        if (!contains(g))
            throw ComplexError("subcomplex generator " + simplex_name(g) + " is not a simplex");
    if (generators.empty())
        return empty();
    return from_index_facets(labels_, generators);
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const
{
    if (!contains(s))
        throw ComplexError("link of a non-simplex " + simplex_name(s));
    std::vector<Simplex> gens;
    for (const auto& f : facets_) {
        if (!std::includes(f.begin(), f.end(), s.begin(), s.end()))
            continue;
        Simplex rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty())
            gens.push_back(std::move(rest));
    }
    if (gens.empty())
        return empty();
    return from_index_facets(labels_, gens);
}

SparseIntMatrix SimplicialComplex::coboundary(int k) const
{
    SparseIntMatrix m;
    m.rows = count(k + 1);
    m.cols = count(k);
    const auto& upper = simplices(k + 1);
    for (std::size_t r = 0; r < upper.size(); ++r) {
        const Simplex& tau = upper[r];
        for (std::size_t i = 0; i < tau.size(); ++i) {
            Simplex face;
            face.reserve(tau.size() - 1);
            for (std::size_t j = 0; j < tau.size(); ++j)
                if (j != i)
                    face.push_back(tau[j]);
            m.entries.push_back({r, *index_of(face), i % 2 == 0 ? 1L : -1L});
        }
    }
    return m;
}

CochainComplex SimplicialComplex::cochain_complex() const
{
    CochainComplex cc;
    for (int k = 0; k <= dim(); ++k) {
        cc.cells.push_back(count(k));
        cc.coboundary.push_back(coboundary(k));
    }
    return cc;
}

long euler_characteristic(const SimplicialComplex& x)
{
    long chi = 0;
    for (int k = 0; k <= x.dim(); ++k)
        chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(x.count(k));
    return chi;
}

Subdivision subdivide(const SimplicialComplex& x)
{
    Subdivision out{SimplicialComplex::empty(), {}};
    if (x.is_empty())
        return out;
    std::map<Simplex, Vertex> vertex_of;
    std::vector<std::string> labels;
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k)) {
            vertex_of.emplace(s, static_cast<Vertex>(labels.size()));
            out.barycenter_of.push_back(s);
            if (k == 0) {
                labels.push_back(x.label(s[0]));
            } else {
                std::string name = "[";
                for (std::size_t i = 0; i < s.size(); ++i)
                    name += (i ? "|" : "") + x.label(s[i]);
                labels.push_back(name + "]");
            }
        }

    // maximal chains: for each facet, all orderings of its vertices give the
    // flags {v0} < {v0,v1} < ... < facet
    std::vector<Simplex> facets;
    for (const auto& f : x.facets()) {
        Simplex order = f;
        do {
            Simplex chain;
            Simplex prefix;
            for (Vertex v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(vertex_of.at(prefix));
            }
            std::sort(chain.begin(), chain.end());
            facets.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    out.complex = SimplicialComplex::from_index_facets(labels, facets);
    return out;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x) { return subdivide(x).complex; }

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y)
{
    if (x.is_empty())
        return y;
    if (y.is_empty())
        return x;
    std::set<std::string> lx(x.labels().begin(), x.labels().end());
    const bool clash = std::any_of(y.labels().begin(), y.labels().end(),
                                   [&](const std::string& l) { return lx.count(l) > 0; });
    std::vector<std::string> labels;
    for (const auto& l : x.labels())
        labels.push_back(clash ? "1." + l : l);
    for (const auto& l : y.labels())
        labels.push_back(clash ? "2." + l : l);
    const auto shift = static_cast<Vertex>(x.vertex_count());
    std::vector<Simplex> facets;
    for (const auto& a : x.facets())
        for (const auto& b : y.facets()) {
            Simplex s = a;
            for (Vertex v : b)
                s.push_back(v + shift);
            facets.push_back(std::move(s));
        }
    return SimplicialComplex::from_index_facets(labels, facets);
}

SimplicialComplex suspension(const SimplicialComplex& x)
{
    std::string north = "N", south = "S";
    while (x.vertex_index(north))
        north += "'";
    while (x.vertex_index(south))
        south += "'";
    auto poles = SimplicialComplex::from_index_facets({north, south}, {{0}, {1}});
    return join(x, poles);
}

SimplicialComplex product(const SimplicialComplex& x, const SimplicialComplex& y)
{
    if (x.is_empty() || y.is_empty())
        return SimplicialComplex::empty();
    std::vector<std::string> labels;
    for (const auto& a : x.labels())
        for (const auto& b : y.labels())
            labels.push_back("(" + a + "," + b + ")");
    std::vector<Simplex> facets;
    for (const auto& a : x.facets())
        for (const auto& b : y.facets()) {
            const std::size_t p = a.size() - 1, q = b.size() - 1;
            // lattice paths from (0,0) to (p,q): choose which of the p+q steps go right
            std::vector<bool> steps(p + q, false);
            std::fill(steps.begin(), steps.begin() + static_cast<long>(p), true);
            std::sort(steps.begin(), steps.end());
            do {
                std::size_t i = 0, j = 0;
                Simplex s{product_vertex(x, y, a[0], b[0])};
                for (bool right : steps) {
                    right ? ++i : ++j;
                    s.push_back(product_vertex(x, y, a[i], b[j]));
                }
                std::sort(s.begin(), s.end());
                facets.push_back(std::move(s));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    return SimplicialComplex::from_index_facets(labels, facets);
}

SimplicialComplex polygon(unsigned n, const std::string& prefix)
{
    if (n < 3)
        throw ComplexError("polygon needs at least 3 vertices");
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    for (unsigned i = 0; i < n; ++i) {
        labels.push_back(prefix + std::to_string(i));
        facets.push_back({i, (i + 1) % n});
    }
    return SimplicialComplex::from_index_facets(labels, facets);
}

SimplicialComplex full_simplex(unsigned dim, const std::string& prefix)
{
    std::vector<std::string> labels;
    Simplex s;
    for (unsigned i = 0; i <= dim; ++i) {
        labels.push_back(prefix + std::to_string(i));
        s.push_back(i);
    }
    return SimplicialComplex::from_index_facets(labels, {s});
}

SimplicialComplex point(const std::string& label) { return SimplicialComplex::from_index_facets({label}, {{0}}); }

SimplicialComplex projective_plane6()
{
    const std::vector<std::vector<std::string>> tris = {
        {"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "6", "2"},
        {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"}, {"6", "2", "4"},
    };
    return SimplicialComplex::from_facets(tris, {"1", "2", "3", "4", "5", "6"});
}

} // namespace pdcong
