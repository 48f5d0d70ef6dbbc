#include "spine/scheme.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace spine {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
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

Check make_check(std::string name, bool passed, std::string detail = {})
{
    return {std::move(name), passed, std::move(detail)};
}

}  // namespace

std::string face_name(int i, int sign)
{
    return "F_" + std::to_string(i) + (sign > 0 ? "^+" : "^-");
}

FaceSide FacePairingScheme::side_at(const Face& f, std::size_t j) const
{
    return f.boundary[(f.basepoint + j) % f.boundary.size()];
}

int FacePairingScheme::vertex_index(const std::string& name) const
{
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == name)
            return static_cast<int>(v);
    return -1;
}

bool ValidationReport::ok() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

const Check* ValidationReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

std::string ValidationReport::str() const
{
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty())
            out << ": " << c.detail;
        out << '\n';
    }
    return out.str();
}

ValidationReport validate_scheme(const FacePairingScheme& s, const CyclicPresentation& p)
{
    ValidationReport rep;
    const int n = p.rank();
    const Word& w = p.defining_word();
    const long len = static_cast<long>(w.size());
    const long nv = static_cast<long>(s.vertices.size());
    const long na = static_cast<long>(s.arcs.size());

    // Structural sanity first; later checks index through these fields.
    std::string bad;
    if (s.rank != n)
        bad = "scheme rank " + std::to_string(s.rank) + " differs from presentation rank " + std::to_string(n);
    for (long a = 0; a < na && bad.empty(); ++a) {
        const Arc& arc = s.arcs[a];
        if (arc.id != a || arc.tail < 0 || arc.tail >= nv || arc.head < 0 || arc.head >= nv ||
            arc.label < 0 || arc.label >= n)
            bad = "malformed arc " + std::to_string(a);
    }
    if (bad.empty() && static_cast<long>(s.faces.size()) != 2L * n)
        bad = "expected " + std::to_string(2 * n) + " faces, found " + std::to_string(s.faces.size());
    for (std::size_t fi = 0; fi < s.faces.size() && bad.empty(); ++fi) {
        const Face& f = s.faces[fi];
        int i = static_cast<int>(fi / 2), sign = fi % 2 == 0 ? 1 : -1;
        if (f.relator != i || f.sign != sign || f.name != face_name(i, sign))
            bad = "face " + std::to_string(fi) + " should be " + face_name(i, sign);
        else if (f.boundary.empty() || f.basepoint < 0 || f.basepoint >= static_cast<int>(f.boundary.size()))
            bad = "bad boundary or basepoint on " + f.name;
        for (const auto& side : f.boundary)
            if (bad.empty() && (side.arc < 0 || side.arc >= na || (side.dir != 1 && side.dir != -1)))
                bad = "bad boundary entry on " + f.name;
    }
    rep.checks.push_back(make_check("structure", bad.empty(), bad));
    if (!bad.empty())
        return rep;

    // Spelling.
    std::string mismatch;
    for (const auto& f : s.faces) {
        Word rel = p.relator(f.relator);
        bool same = static_cast<long>(f.boundary.size()) == len;
        for (long j = 0; same && j < len; ++j) {
            FaceSide side = s.side_at(f, j);
            same = s.arcs[side.arc].label == rel[j].gen && side.dir == rel[j].sign;
        }
        if (!same) {
            mismatch = "relator mismatch at " + f.name;
            break;
        }
    }
    rep.checks.push_back(make_check("spelling", mismatch.empty(), mismatch));

    // Each boundary is a closed edge path.
    std::string open;
    for (const auto& f : s.faces) {
        const std::size_t m = f.boundary.size();
        for (std::size_t t = 0; t < m && open.empty(); ++t) {
            const FaceSide& x = f.boundary[t];
            const FaceSide& y = f.boundary[(t + 1) % m];
            int end = x.dir > 0 ? s.arcs[x.arc].head : s.arcs[x.arc].tail;
            int start = y.dir > 0 ? s.arcs[y.arc].tail : s.arcs[y.arc].head;
            if (end != start)
                open = f.name + " is not closed at position " + std::to_string(t);
        }
    }
    rep.checks.push_back(make_check("closed boundaries", open.empty(), open));

    rep.checks.push_back(make_check("arc count", na == n * len,
                                    std::to_string(na) + " arcs, expected " + std::to_string(n * len)));
    rep.checks.push_back(make_check("vertex count", nv == n * (len - 2) + 2,
                                    std::to_string(nv) + " vertices, expected " +
                                        std::to_string(n * (len - 2) + 2)));

    // Incidence and orientation: every arc on two face slots, traversed once
    // each way when F^+ is read along the orientation and F^- against it.
    std::vector<std::vector<int>> flow(na);
    for (const auto& f : s.faces)
        for (const auto& side : f.boundary)
            flow[side.arc].push_back(side.dir * f.sign);
    std::string incidence, orient;
    for (long a = 0; a < na; ++a) {
        if (flow[a].size() != 2) {
            if (incidence.empty())
                incidence = "arc " + std::to_string(a) + " lies on " + std::to_string(flow[a].size()) + " face slots";
        } else if (flow[a][0] != -flow[a][1] && orient.empty()) {
            orient = "arc " + std::to_string(a) + " is traversed twice in the same direction";
        }
    }
    rep.checks.push_back(make_check("arc incidence", incidence.empty(), incidence));
    if (!incidence.empty() && orient.empty())
        orient = "undetermined while arc incidence fails";
    rep.checks.push_back(make_check("orientation", orient.empty(), orient));

    // Sphere: chi = 2 and connected.
    UnionFind uf(static_cast<int>(nv));
    long comps = nv;
    for (const auto& arc : s.arcs)
        if (uf.unite(arc.tail, arc.head))
            --comps;
    long chi = nv - na + static_cast<long>(s.faces.size());
    rep.checks.push_back(make_check("sphere", chi == 2 && comps == 1,
                                    "chi " + std::to_string(chi) + ", components " + std::to_string(comps)));

    // Stored pairing equals the basepoint alignment.
    std::string pairing;
    if (static_cast<int>(s.pairing.size()) != n)
        pairing = "pairing lists " + std::to_string(s.pairing.size()) + " relators";
    for (int i = 0; i < n && pairing.empty(); ++i) {
        const Face& fp = s.plus(i);
        const Face& fm = s.minus(i);
        if (static_cast<long>(s.pairing[i].size()) != len || static_cast<long>(fp.boundary.size()) != len ||
            static_cast<long>(fm.boundary.size()) != len) {
            pairing = "pairing of relator " + std::to_string(i) + " has the wrong length";
            break;
        }
        for (long j = 0; j < len; ++j) {
            std::pair<int, int> want{s.side_at(fp, j).arc, s.side_at(fm, j).arc};
            if (s.pairing[i][j] != want) {
                pairing = "pairing of " + fp.name + " and " + fm.name + " disagrees at position " + std::to_string(j);
                break;
            }
        }
    }
    rep.checks.push_back(make_check("pairing", pairing.empty(), pairing));
    return rep;
}

OrbitResult edge_orbits(const FacePairingScheme& s)
{
    OrbitResult res;
    const int na = static_cast<int>(s.arcs.size());
    // occurrences: arc -> (face index, relator position)
    std::vector<std::vector<std::pair<int, int>>> occ(na);
    for (std::size_t fi = 0; fi < s.faces.size(); ++fi) {
        const Face& f = s.faces[fi];
        for (std::size_t j = 0; j < f.boundary.size(); ++j) {
            int a = s.side_at(f, j).arc;
            if (a >= 0 && a < na)
                occ[a].push_back({static_cast<int>(fi), static_cast<int>(j)});
        }
    }
    for (int a = 0; a < na; ++a)
        if (occ[a].size() != 2) {
            res.errors.push_back("arc " + std::to_string(a) + " lies on " + std::to_string(occ[a].size()) +
                                 " face slots");
            return res;
        }

    std::vector<char> seen(na, 0);
    for (int a0 = 0; a0 < na; ++a0) {
        if (seen[a0])
            continue;
        ArcOrbit orbit;
        orbit.label = s.arcs[a0].label;
        int a = a0;
        auto via = occ[a0][0];
        for (int steps = 0;; ++steps) {
            if (steps > na) {
                res.errors.push_back("identification cycle through arc " + std::to_string(a0) + " does not close");
                return res;
            }
            seen[a] = 1;
            const int fi = via.first, j = via.second;
            const int i = fi / 2;
            const bool from_plus = fi % 2 == 0;
            if (i >= static_cast<int>(s.pairing.size()) || j >= static_cast<int>(s.pairing[i].size())) {
                res.errors.push_back("no pairing entry for " + s.faces[fi].name + " position " + std::to_string(j));
                return res;
            }
            const auto [pa, ma] = s.pairing[i][j];
            if ((from_plus ? pa : ma) != a) {
                res.errors.push_back("pairing of " + s.plus(i).name + " and " + s.minus(i).name +
                                     " does not contain arc " + std::to_string(a) + " at position " +
                                     std::to_string(j));
                return res;
            }
            const int partner = from_plus ? ma : pa;
            const int other_face = from_plus ? fi + 1 : fi - 1;
            if (partner < 0 || partner >= na) {
                res.errors.push_back("pairing of relator " + std::to_string(i) + " names a missing arc");
                return res;
            }
            FaceSide here = s.side_at(s.faces[fi], j);
            FaceSide there = s.side_at(s.faces[other_face], j);
            if (there.arc != partner || s.arcs[partner].label != s.arcs[a].label || here.dir != there.dir) {
                res.errors.push_back("inconsistent pairing between " + s.plus(i).name + " and " + s.minus(i).name +
                                     " at position " + std::to_string(j));
                return res;
            }
            orbit.arcs.push_back(a);
            orbit.relators.push_back(i);
            const auto& o = occ[partner];
            std::pair<int, int> skip{other_face, j};
            auto next = o[0] == skip ? o[1] : o[0];
            a = partner;
            via = next;
            if (a == a0)
                break;
        }
        res.orbits.push_back(std::move(orbit));
    }
    return res;
}

QuotientComplex quotient(const FacePairingScheme& s)
{
    QuotientComplex q;
    OrbitResult orbits = edge_orbits(s);
    q.errors = orbits.errors;
    const int nv = static_cast<int>(s.vertices.size());
    UnionFind uf(nv);
    long comps = nv;
    for (std::size_t i = 0; i < s.pairing.size(); ++i)
        for (const auto& [pa, ma] : s.pairing[i]) {
            if (pa < 0 || ma < 0 || pa >= static_cast<int>(s.arcs.size()) || ma >= static_cast<int>(s.arcs.size()))
                continue;
            if (uf.unite(s.arcs[pa].tail, s.arcs[ma].tail))
                --comps;
            if (uf.unite(s.arcs[pa].head, s.arcs[ma].head))
                --comps;
        }
    q.V = comps;
    q.E = static_cast<long>(orbits.orbits.size());
    q.F = static_cast<long>(s.faces.size() / 2);
    q.C = 1;
    for (int v = 0; v < nv; ++v)
        q.vertex_orbit.push_back(uf.find(v));
    q.arc_orbit.assign(s.arcs.size(), -1);
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o)
        for (int a : orbits.orbits[o].arcs)
            q.arc_orbit[a] = static_cast<int>(o);
    return q;
}

bool seifert_threlfall(const FacePairingScheme& s)
{
    QuotientComplex q = quotient(s);
    return q.errors.empty() && q.euler() == 0;
}

std::string scheme_to_dot(const FacePairingScheme& s)
{
    std::ostringstream out;
    out << "digraph polyhedron {\n";
    for (std::size_t v = 0; v < s.vertices.size(); ++v)
        out << "  v" << v << " [label=\"" << s.vertices[v] << "\"];\n";
    for (const auto& a : s.arcs)
        out << "  v" << a.tail << " -> v" << a.head << " [label=\"x" << a.label << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace spine
