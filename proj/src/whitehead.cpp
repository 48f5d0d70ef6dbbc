#include "spine/whitehead.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace spine {

WhiteheadGraph::WhiteheadGraph(int rank) : n_(rank)
{
    if (rank < 1)
        throw std::invalid_argument("graph rank must be positive");
}

int WhiteheadGraph::pos(int i) const { return mod(i, n_); }
int WhiteheadGraph::neg(int i) const { return n_ + mod(i, n_); }

std::string WhiteheadGraph::vertex_name(int v) const
{
    return (is_pos(v) ? "p" : "m") + std::to_string(index(v));
}

void WhiteheadGraph::add_edge(int a, int b, long multiplicity)
{
    if (a < 0 || b < 0 || a >= 2 * n_ || b >= 2 * n_)
        throw std::invalid_argument("vertex out of range");
    if (multiplicity < 1)
        throw std::invalid_argument("edge multiplicity must be positive");
    if (a > b)
        std::swap(a, b);
    edges_[{a, b}] += multiplicity;
}

long WhiteheadGraph::multiplicity(int a, int b) const
{
    if (a > b)
        std::swap(a, b);
    auto it = edges_.find({a, b});
    return it == edges_.end() ? 0 : it->second;
}

long WhiteheadGraph::total_multiplicity() const
{
    long t = 0;
    for (const auto& [e, m] : edges_)
        t += m;
    return t;
}

std::vector<WhiteheadGraph::Edge> WhiteheadGraph::loops() const
{
    std::vector<Edge> out;
    for (const auto& [e, m] : edges_)
        if (e.first == e.second)
            out.push_back(e);
    return out;
}

WhiteheadGraph whitehead_graph(const CyclicPresentation& p)
{
    WhiteheadGraph g(p.rank());
    const Word& w = p.defining_word();
    const std::size_t len = w.size();
    for (int i = 0; i < p.rank(); ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const Letter& a = w[j];
            const Letter& b = w[(j + 1) % len];
            int exit_a = a.sign > 0 ? g.pos(a.gen + i) : g.neg(a.gen + i);
            int entry_b = b.sign > 0 ? g.neg(b.gen + i) : g.pos(b.gen + i);
            g.add_edge(exit_a, entry_b);
        }
    }
    return g;
}

WhiteheadGraph reduce_graph(const WhiteheadGraph& g)
{
    WhiteheadGraph r(g.rank());
    for (const auto& [e, m] : g.edges())
        r.add_edge(e.first, e.second, 1);
    return r;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

bool is_connected(const WhiteheadGraph& g)
{
    DisjointSets ds(g.vertex_count());
    int comps = g.vertex_count();
    for (const auto& [e, m] : g.edges())
        if (ds.unite(e.first, e.second))
            --comps;
    return comps == 1;
}

WhiteheadGraph shift_mixed_edges(const WhiteheadGraph& g, long d)
{
    WhiteheadGraph r(g.rank());
    for (const auto& [e, m] : g.edges()) {
        auto [a, b] = e;
        if (g.is_pos(a) && !g.is_pos(b))
            b = g.neg(g.index(b) + d);
        r.add_edge(a, b, m);
    }
    return r;
}

WhiteheadGraph shift_graph(const WhiteheadGraph& g, long s)
{
    WhiteheadGraph r(g.rank());
    auto move = [&](int v) {
        int i = mod(g.index(v) + s, g.rank());
        return g.is_pos(v) ? g.pos(i) : g.neg(i);
    };
    for (const auto& [e, m] : g.edges())
        r.add_edge(move(e.first), move(e.second), m);
    return r;
}

int RotationSystem::tail(int dart) const
{
    const auto& e = edge_ends[dart / 2];
    return dart % 2 == 0 ? e.first : e.second;
}

std::vector<std::vector<int>> RotationSystem::faces() const
{
    const int darts = 2 * static_cast<int>(edge_ends.size());
    std::vector<int> slot(darts, -1);
    for (const auto& rot : rotation)
        for (std::size_t i = 0; i < rot.size(); ++i)
            slot[rot[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    std::vector<char> seen(darts, 0);
    for (int d0 = 0; d0 < darts; ++d0) {
        if (seen[d0])
            continue;
        std::vector<int> face;
        int d = d0;
        while (!seen[d]) {
            seen[d] = 1;
            face.push_back(d);
            int back = d ^ 1;
            const auto& rot = rotation[tail(back)];
            d = rot[(slot[back] + 1) % rot.size()];
        }
        out.push_back(std::move(face));
    }
    return out;
}

int RotationSystem::component_count() const
{
    DisjointSets ds(vertex_count);
    int comps = vertex_count;
    for (const auto& [a, b] : edge_ends)
        if (ds.unite(a, b))
            --comps;
    return comps;
}

bool RotationSystem::is_spherical() const
{
    DisjointSets ds(vertex_count);
    for (const auto& [a, b] : edge_ends)
        ds.unite(a, b);
    std::map<int, long> euler;
    for (int v = 0; v < vertex_count; ++v) {
        euler[ds.find(v)] += 1;
        if (rotation[v].empty())
            euler[ds.find(v)] += 1;  // the single face around an isolated vertex
    }
    for (const auto& [a, b] : edge_ends)
        euler[ds.find(a)] -= 1;
    for (const auto& f : faces())
        euler[ds.find(tail(f[0]))] += 1;
    for (const auto& [root, chi] : euler)
        if (chi != 2)
            return false;
    return true;
}

PlanarityResult is_planar(const WhiteheadGraph& g)
{
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                        boost::property<boost::vertex_index_t, int>,
                                        boost::property<boost::edge_index_t, int>>;
    using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;

    const int nv = g.vertex_count();
    Graph bg(nv);
    std::vector<std::pair<WhiteheadGraph::Edge, long>> simple;
    for (const auto& [e, m] : g.edges()) {
        if (e.first == e.second)
            continue;
        auto [ed, ok] = boost::add_edge(e.first, e.second, bg);
        boost::put(boost::edge_index, bg, ed, static_cast<int>(simple.size()));
        simple.push_back({e, m});
    }
    std::vector<std::vector<EdgeDesc>> emb(nv);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));

    PlanarityResult res;
    res.planar = planar;
    if (!planar)
        return res;

    RotationSystem rs;
    rs.vertex_count = nv;
    rs.rotation.assign(nv, {});
    std::vector<int> first_edge(simple.size());
    for (std::size_t s = 0; s < simple.size(); ++s) {
        first_edge[s] = static_cast<int>(rs.edge_ends.size());
        for (long c = 0; c < simple[s].second; ++c)
            rs.edge_ends.push_back(simple[s].first);
    }
    for (int v = 0; v < nv; ++v) {
        for (const auto& ed : emb[v]) {
            int s = boost::get(boost::edge_index, bg, ed);
            long m = simple[s].second;
            bool at_first = simple[s].first.first == v;
            for (long c = 0; c < m; ++c) {
                int e = first_edge[s] + static_cast<int>(at_first ? c : m - 1 - c);
                rs.rotation[v].push_back(2 * e + (at_first ? 0 : 1));
            }
        }
    }
    if (!rs.is_spherical())
        throw std::logic_error("planar embedding failed the Euler check");
    res.embedding = std::move(rs);
    return res;
}

bool planarity_criterion_G(long k, long l, long n, long f)
{
    if (n < 4)
        throw std::invalid_argument("planarity criterion needs n >= 4");
    if (k < 1 || l < 1 || f < 0 || f >= n)
        throw std::invalid_argument("bad G parameters");
    long fk = (f * k) % n;
    return n % 2 == 0 && (fk == 0 || fk == 2);
}

FaceCensus face_census(const RotationSystem& rs)
{
    if (rs.component_count() != 1 || !rs.is_spherical())
        throw std::invalid_argument("face census needs a connected spherical rotation system");
    FaceCensus c;
    for (const auto& f : rs.faces())
        c[static_cast<int>(f.size())] += 1;
    return c;
}

std::string pattern_name(PatternType t)
{
    switch (t) {
    case PatternType::TypeI5:
        return "I.5";
    case PatternType::TypeII7:
        return "II.7";
    case PatternType::TypeII11:
        return "II.11";
    case PatternType::None:
        break;
    }
    return "none";
}

WhiteheadGraph h_target_graph(long r, int n)
{
    WhiteheadGraph g(n);
    for (int i = 0; i < n; ++i) {
        if (r > 1)
            g.add_edge(g.pos(i), g.neg(i + 1), r - 1);
        g.add_edge(g.pos(i), g.neg(mod(i - r + 1, n)), 1);
    }
    return g;
}

WhiteheadGraph g_target_graph(long k, long l, int n, long f)
{
    WhiteheadGraph g(n);
    const long lambda = 2 * l + k - 3;
    for (int i = 0; i < n; ++i) {
        g.add_edge(g.pos(i), g.pos(i + 1), 1);
        g.add_edge(g.neg(i), g.neg(i + 2), 1);
        if (lambda > 0)
            g.add_edge(g.pos(i), g.neg(mod(i + f, n)), lambda);
        g.add_edge(g.pos(i), g.neg(mod(i + f + 1, n)), 1);
    }
    return g;
}

namespace {

bool dihedral_match(const WhiteheadGraph& g, const WhiteheadGraph& target)
{
    const int n = g.rank();
    for (int eps : {1, -1}) {
        for (int c = 0; c < n; ++c) {
            WhiteheadGraph h(n);
            auto move = [&](int v) {
                int i = mod(static_cast<long>(eps) * g.index(v) + c, n);
                return g.is_pos(v) ? h.pos(i) : h.neg(i);
            };
            for (const auto& [e, m] : g.edges())
                h.add_edge(move(e.first), move(e.second), m);
            if (h == target)
                return true;
        }
    }
    return false;
}

}  // namespace

PatternType match_family_pattern(const WhiteheadGraph& g, const FamilySpec& spec)
{
    spec.validate();
    if (spec.n != g.rank())
        return PatternType::None;
    WhiteheadGraph clean(g.rank());
    for (const auto& [e, m] : g.edges())
        if (e.first != e.second)
            clean.add_edge(e.first, e.second, m);
    if (!is_planar(clean).planar)
        return PatternType::None;
    if (spec.family == Family::H) {
        if (is_connected(clean) && dihedral_match(clean, h_target_graph(spec.r, spec.n)))
            return PatternType::TypeI5;
        return PatternType::None;
    }
    if (!dihedral_match(clean, g_target_graph(spec.k, spec.l, spec.n, spec.f)))
        return PatternType::None;
    return 2 * spec.l + spec.k - 3 > 0 ? PatternType::TypeII7 : PatternType::TypeII11;
}

std::string to_dot(const WhiteheadGraph& g)
{
    std::ostringstream out;
    out << "graph whitehead {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << g.vertex_name(v) << ";\n";
    for (const auto& [e, m] : g.edges())
        out << "  " << g.vertex_name(e.first) << " -- " << g.vertex_name(e.second)
            << " [label=" << m << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace spine
