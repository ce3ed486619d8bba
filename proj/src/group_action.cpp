#include "pdcong/group_action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pdcong {

GroupAction GroupAction::power(unsigned k) const
{
    GroupAction out{p, {}};
    out.map.resize(map.size());
    std::iota(out.map.begin(), out.map.end(), Vertex{0});
    for (unsigned i = 0; i < k % p; ++i)
        for (auto& v : out.map)
            v = map[v];
    return out;
}

bool GroupAction::is_identity() const
{
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] != v)
            return false;
    return true;
}

std::pair<Simplex, int> GroupAction::apply(const Simplex& s) const
{
    Simplex img;
    img.reserve(s.size());
    for (Vertex v : s)
        img.push_back(map[v]);
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < img.size(); ++i)
        for (std::size_t j = i; j > 0 && img[j - 1] > img[j]; --j) {
            std::swap(img[j - 1], img[j]);
            sign = -sign;
        }
    return {std::move(img), sign};
}

std::vector<std::vector<Vertex>> GroupAction::cycles() const
{
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(map.size(), false);
    for (Vertex v = 0; v < map.size(); ++v) {
        if (seen[v])
            continue;
        std::vector<Vertex> cycle;
        for (Vertex w = v; !seen[w]; w = map[w]) {
            seen[w] = true;
            cycle.push_back(w);
        }
        if (cycle.size() > 1)
            out.push_back(std::move(cycle));
    }
    return out;
}

GroupAction GroupAction::identity(const SimplicialComplex& x, std::uint32_t p)
{
    GroupAction a{p, std::vector<Vertex>(x.vertex_count())};
    std::iota(a.map.begin(), a.map.end(), Vertex{0});
    return a;
}

namespace {

std::string cycle_name(const SimplicialComplex& x, const std::vector<Vertex>& c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? " " : "") + x.label(c[i]);
    return s + ")";
}

} // namespace

GroupAction validate_action(const SimplicialComplex& x, std::vector<Vertex> map, std::uint32_t p)
{
    if (p < 3 || !is_prime(p))
        throw ActionError("p = " + std::to_string(p) + " is not an odd prime");
    if (map.size() != x.vertex_count())
        throw ActionError("vertex map has " + std::to_string(map.size()) + " entries, complex has " +
                          std::to_string(x.vertex_count()) + " vertices");
    std::vector<bool> hit(map.size(), false);
    for (Vertex v = 0; v < map.size(); ++v) {
        if (map[v] >= map.size())
            throw ActionError("vertex " + x.label(v) + " mapped outside the complex");
        if (hit[map[v]])
            throw ActionError("vertex map is not a permutation: " + x.label(map[v]) + " is hit twice");
        hit[map[v]] = true;
    }
    GroupAction a{p, std::move(map)};
    for (const auto& c : a.cycles())
        if (c.size() != p)
            throw ActionError("vertex cycle " + cycle_name(x, c) + " has length " + std::to_string(c.size()) +
                              ", so sigma^" + std::to_string(p) + " is not the identity");
    for (const auto& f : x.facets()) {
        const auto img = a.apply(f).first;
        if (!x.contains(img))
            throw ActionError("image of simplex " + x.simplex_name(f) + " is " + x.simplex_name(img) +
                              ", which is not a simplex");
    }
    return a;
}

GroupAction validate_action(const SimplicialComplex& x, const std::vector<std::pair<std::string, std::string>>& map,
                            std::uint32_t p)
{
    std::vector<Vertex> m(x.vertex_count());
    std::iota(m.begin(), m.end(), Vertex{0});
    std::vector<bool> assigned(m.size(), false);
    for (const auto& [from, to] : map) {
        const auto a = x.vertex_index(from);
        const auto b = x.vertex_index(to);
        if (!a)
            throw ActionError("unknown vertex " + from);
        if (!b)
            throw ActionError("unknown vertex " + to);
        if (assigned[*a])
            throw ActionError("vertex " + from + " mapped twice");
        assigned[*a] = true;
        m[*a] = *b;
    }
    return validate_action(x, std::move(m), p);
}

bool is_regular(const SimplicialComplex& x, const GroupAction& a)
{
    for (int k = 1; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k)) {
            if (a.apply(s).first != s)
                continue;
            for (Vertex v : s)
                if (a(v) != v)
                    return false;
        }
    return true;
}

RegularModel subdivide_action(const SimplicialComplex& x, const GroupAction& a)
{
    Subdivision sd = subdivide(x);
    std::map<Simplex, Vertex> index;
    for (Vertex v = 0; v < sd.barycenter_of.size(); ++v)
        index.emplace(sd.barycenter_of[v], v);
    std::vector<Vertex> map(sd.barycenter_of.size());
    for (Vertex v = 0; v < map.size(); ++v)
        map[v] = index.at(a.apply(sd.barycenter_of[v]).first);
    return {std::move(sd.complex), GroupAction{a.p, std::move(map)}, 1};
}

RegularModel make_regular(const SimplicialComplex& x, const GroupAction& a)
{
    RegularModel m{x, a, 0};
    while (!is_regular(m.complex, m.action)) {
        const unsigned done = m.subdivisions;
        m = subdivide_action(m.complex, m.action);
        m.subdivisions = done + 1;
    }
    return m;
}

SimplicialComplex fixed_subcomplex(const SimplicialComplex& x, const GroupAction& a)
{
    if (!is_regular(x, a))
        throw ActionError("action is not regular; apply make_regular first");
    std::vector<Simplex> fixed;
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k))
            if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return a(v) == v; }))
                fixed.push_back(s);
    return x.subcomplex(fixed);
}

CochainPermutation cochain_permutation(const SimplicialComplex& x, const GroupAction& a, int k)
{
    CochainPermutation out;
    const auto& cells = x.simplices(k);
    out.image.reserve(cells.size());
    out.sign.reserve(cells.size());
    for (const auto& s : cells) {
        auto [img, sign] = a.apply(s);
        out.image.push_back(*x.index_of(img));
        out.sign.push_back(sign);
    }
    return out;
}

long lefschetz_number(const SimplicialComplex& x, const GroupAction& a)
{
    RationalField q;
    const auto mats = induced_cohomology_action(x, a, q);
    mpq_class total = 0;
    for (std::size_t k = 0; k < mats.size(); ++k) {
        mpq_class tr = 0;
        for (std::size_t i = 0; i < mats[k].rows(); ++i)
            tr += mats[k](i, i);
        total += (k % 2 == 0) ? tr : mpq_class(-tr);
    }
    return total.get_num().get_si();
}

bool trivial_rational_action_check(const SimplicialComplex& x, const GroupAction& a)
{
    RationalField q;
    for (const auto& m : induced_cohomology_action(x, a, q))
        if (!(m == Matrix<RationalField>::identity(q, m.rows())))
            return false;
    return true;
}

bool bockstein_condition(const CochainComplex& cc, std::uint32_t p)
{
    const auto h = integral_cohomology(cc);
    for (const auto& degree : h.torsion)
        for (const auto& d : degree)
            if (p_valuation(d, p) == 1)
                return false;
    return true;
}

bool bockstein_condition(const SimplicialComplex& x, std::uint32_t p)
{
    return bockstein_condition(x.cochain_complex(), p);
}

std::size_t TFRDegree::dim(std::uint32_t p) const
{
    std::size_t d = t + f * p + r * (p - 1);
    for (auto s : other)
        d += s;
    return d;
}

std::size_t TFRDecomposition::dim_t() const
{
    std::size_t d = 0;
    for (const auto& g : degrees)
        d += g.t;
    return d;
}

std::size_t TFRDecomposition::dim_f() const
{
    std::size_t d = 0;
    for (const auto& g : degrees)
        d += g.f * p;
    return d;
}

std::size_t TFRDecomposition::dim_r() const
{
    std::size_t d = 0;
    for (const auto& g : degrees)
        d += g.r * (p - 1);
    return d;
}

bool TFRDecomposition::has_other() const
{
    return std::any_of(degrees.begin(), degrees.end(), [](const TFRDegree& g) { return !g.other.empty(); });
}

std::string TFRDecomposition::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const auto& g = degrees[i];
        os << "H^" << i << ": t=" << g.t << " f=" << g.f << " r=" << g.r;
        if (!g.other.empty()) {
            os << " other=";
            for (std::size_t j = 0; j < g.other.size(); ++j)
                os << (j ? "," : "") << g.other[j];
        }
        os << "\n";
    }
    os << "dim T=" << dim_t() << " dim F=" << dim_f() << " dim R=" << dim_r() << "\n";
    return os.str();
}

TFRDecomposition tfr_decomposition(const SimplicialComplex& x, const GroupAction& a)
{
    const PrimeField f(a.p);
    TFRDecomposition out;
    out.p = a.p;
    for (auto& g : induced_cohomology_action(x, a, f)) {
        for (std::size_t i = 0; i < g.rows(); ++i)
            g(i, i) = f.sub(g(i, i), f.one());
        TFRDegree d;
        d.blocks = nilpotent_block_sizes(g, a.p);
        for (auto s : d.blocks) {
            if (s == 1)
                ++d.t;
            else if (s == a.p)
                ++d.f;
            else if (s == a.p - 1)
                ++d.r;
            else
                d.other.push_back(s);
        }
        out.degrees.push_back(std::move(d));
    }
    return out;
}

QuotientComplex quotient_complex(const SimplicialComplex& x, const GroupAction& a)
{
    QuotientComplex out;
    const int top = x.dim();
    // invariant cochain of each orbit: value +-1 on every member, +1 on the representative
    std::vector<std::vector<std::size_t>> orbit_of(top + 1);
    std::vector<std::vector<int>> sign_in_orbit(top + 1);
    for (int k = 0; k <= top; ++k) {
        const auto& cells = x.simplices(k);
        orbit_of[k].assign(cells.size(), SIZE_MAX);
        sign_in_orbit[k].assign(cells.size(), 0);
        out.representatives.emplace_back();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (orbit_of[k][i] != SIZE_MAX)
                continue;
            const std::size_t id = out.representatives[k].size();
            out.representatives[k].push_back(cells[i]); // lex-least: first one met
            // invariance: c[tau] = sign(sigma, tau) * c[sigma tau]
            std::size_t cur = i;
            int sign = 1;
            for (std::uint32_t step = 0; step < a.p; ++step) {
                if (step > 0 && cur == i)
                    throw ActionError("action is not free: simplex " + x.simplex_name(cells[i]) + " is invariant");
                orbit_of[k][cur] = id;
                sign_in_orbit[k][cur] = sign;
                const auto [img, s] = a.apply(cells[cur]);
                sign *= s;
                cur = *x.index_of(img);
            }
            if (cur != i)
                throw ActionError("orbit of " + x.simplex_name(cells[i]) + " does not close after p steps");
        }
        out.cochains.cells.push_back(out.representatives[k].size());
    }
    // delta e_O evaluated at each representative of the next degree
    for (int k = 0; k < top; ++k) {
        SparseIntMatrix d;
        d.rows = out.cochains.cells[k + 1];
        d.cols = out.cochains.cells[k];
        for (std::size_t r = 0; r < d.rows; ++r) {
            const Simplex& s = out.representatives[k + 1][r];
            std::map<std::size_t, long> row;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                const std::size_t idx = *x.index_of(face);
                row[orbit_of[k][idx]] += (i % 2 == 0 ? 1 : -1) * sign_in_orbit[k][idx];
            }
            for (const auto& [c, v] : row)
                if (v != 0)
                    d.entries.push_back({r, c, v});
        }
        out.cochains.coboundary.push_back(std::move(d));
    }
    return out;
}

} // namespace pdcong
