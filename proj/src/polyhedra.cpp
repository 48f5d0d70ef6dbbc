#include "spine/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spine {

namespace {

enum EndType { N = 0, P = 1 };

// Ends of the link graph: (type, generator, letter position). The end of
// letter j at a vertex of generator g belongs to relator g - gen_j.
class Link {
public:
    Link(const Word& w, const LinkRotation& rot)
        : n_(w.rank()), L_(static_cast<int>(w.size())), w_(w), rot_(rot), pos_in_(L_)
    {
        for (int t = 0; t < L_; ++t)
            pos_in_[rot.order[t]] = t;
    }

    int n() const { return n_; }
    int L() const { return L_; }
    int end(int t, int g, int j) const { return (t * n_ + g) * L_ + j; }
    int type(int e) const { return e / (n_ * L_); }
    int gen(int e) const { return (e / L_) % n_; }
    int letter(int e) const { return e % L_; }
    int ends() const { return 2 * n_ * L_; }

    bool reversed(int t, int g) const { return (t == P) != (rot_.alternating && g % 2 == 1); }

    int succ(int t, int g, int j) const
    {
        int idx = pos_in_[j];
        int step = reversed(t, g) ? L_ - 1 : 1;
        return rot_.order[(idx + step) % L_];
    }
    int pred(int t, int g, int j) const
    {
        int idx = pos_in_[j];
        int step = reversed(t, g) ? 1 : L_ - 1;
        return rot_.order[(idx + step) % L_];
    }

    // Corner from letter j to letter j+1 of relator i: exit end of j, entry end of j+1.
    int exit_type(int j) const { return w_[j].sign > 0 ? P : N; }
    int entry_type(int j) const { return w_[j].sign > 0 ? N : P; }
    int alpha(int e) const
    {
        int t = type(e), g = gen(e), j = letter(e);
        int i = mod(g - w_[j].gen, n_);
        if (t == exit_type(j)) {
            int j2 = (j + 1) % L_;
            return end(entry_type(j2), mod(w_[j2].gen + i, n_), j2);
        }
        int j0 = (j + L_ - 1) % L_;
        return end(exit_type(j0), mod(w_[j0].gen + i, n_), j0);
    }

    std::vector<std::vector<int>> faces(std::vector<int>& face_of) const
    {
        face_of.assign(ends(), -1);
        std::vector<std::vector<int>> out;
        for (int e = 0; e < ends(); ++e) {
            if (face_of[e] >= 0)
                continue;
            std::vector<int> f;
            int x = e;
            while (face_of[x] < 0) {
                face_of[x] = static_cast<int>(out.size());
                f.push_back(x);
                int y = alpha(x);
                x = end(type(y), gen(y), succ(type(y), gen(y), letter(y)));
            }
            out.push_back(std::move(f));
        }
        return out;
    }

private:
    int n_;
    int L_;
    const Word& w_;
    const LinkRotation& rot_;
    std::vector<int> pos_in_;
};

long target_faces(const Word& w)
{
    long n = w.rank(), L = static_cast<long>(w.size());
    return 2 - 2 * n + n * L;
}

// Genus of the sub-embedding spanned by corners whose two letters are both
// among order[0..placed-1], with the rotation restricted to those letters.
bool partial_genus_zero(const Word& w, const std::vector<int>& order, int placed, bool alternating)
{
    const int n = w.rank(), L = static_cast<int>(w.size());
    std::vector<char> in(L, 0);
    for (int t = 0; t < placed; ++t)
        in[order[t]] = 1;
    auto corner_on = [&](int j) { return in[j] && in[(j + 1) % L]; };
    long corners = 0;
    for (int j = 0; j < L; ++j)
        corners += corner_on(j);
    if (corners == 0)
        return true;

    // An end is active when its corner is present. Exit ends sit on corner j,
    // entry ends on corner j-1.
    auto active = [&](int t, int j) {
        bool exit = (t == P) == (w[j].sign > 0);
        return exit ? corner_on(j) : corner_on((j + L - 1) % L);
    };
    // Restricted cyclic order per type, forward direction.
    std::vector<int> seq[2];
    for (int t = 0; t < 2; ++t)
        for (int s = 0; s < placed; ++s)
            if (active(t, order[s]))
                seq[t].push_back(order[s]);
    std::vector<int> at[2];
    for (int t = 0; t < 2; ++t) {
        at[t].assign(L, -1);
        for (std::size_t s = 0; s < seq[t].size(); ++s)
            at[t][seq[t][s]] = static_cast<int>(s);
    }
    auto next = [&](int t, int g, int j) {
        const auto& q = seq[t];
        int m = static_cast<int>(q.size());
        bool rev = (t == P) != (alternating && g % 2 == 1);
        int s = at[t][j];
        return q[(s + (rev ? m - 1 : 1)) % m];
    };
    auto exit_type = [&](int j) { return w[j].sign > 0 ? P : N; };
    auto entry_type = [&](int j) { return w[j].sign > 0 ? N : P; };
    auto id = [&](int t, int g, int j) { return (t * n + g) * L + j; };

    std::vector<char> seen(2 * n * L, 0);
    long faces = 0;
    for (int t = 0; t < 2; ++t)
        for (int g = 0; g < n; ++g)
            for (int j : seq[t]) {
                if (seen[id(t, g, j)])
                    continue;
                ++faces;
                int ct = t, cg = g, cj = j;
                while (!seen[id(ct, cg, cj)]) {
                    seen[id(ct, cg, cj)] = 1;
                    int i = mod(cg - w[cj].gen, n);
                    int at_, ag, aj;
                    if (ct == exit_type(cj)) {
                        aj = (cj + 1) % L;
                        at_ = entry_type(aj);
                    } else {
                        aj = (cj + L - 1) % L;
                        at_ = exit_type(aj);
                    }
                    ag = mod(w[aj].gen + i, n);
                    ct = at_;
                    cg = ag;
                    cj = next(at_, ag, aj);
                }
            }

    // Components over the vertices carrying at least one corner.
    std::vector<int> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> used(2 * n, 0);
    long comps = 0;
    long verts = 0;
    for (int j = 0; j < L; ++j) {
        if (!corner_on(j))
            continue;
        int j2 = (j + 1) % L;
        for (int i = 0; i < n; ++i) {
            int a = exit_type(j) * n + mod(w[j].gen + i, n);
            int b = entry_type(j2) * n + mod(w[j2].gen + i, n);
            for (int v : {a, b})
                if (!used[v]) {
                    used[v] = 1;
                    ++verts;
                    ++comps;
                }
            int ra = find(a), rb = find(b);
            if (ra != rb) {
                parent[std::max(ra, rb)] = std::min(ra, rb);
                --comps;
            }
        }
    }
    long edges = corners * n;
    return 2 * comps - verts + edges - faces == 0;
}

struct Occurrence {
    int relator;
    int side;  // 0 plus, 1 minus
    int dir;
};

}  // namespace

long link_face_count(const Word& w, const LinkRotation& rot)
{
    if (static_cast<int>(rot.order.size()) != static_cast<int>(w.size()))
        throw std::invalid_argument("rotation length differs from word length");
    Link link(w, rot);
    std::vector<int> face_of;
    return static_cast<long>(link.faces(face_of).size());
}

FacePairingScheme scheme_from_rotation(const CyclicPresentation& p, const LinkRotation& rot)
{
    const Word& w = p.defining_word();
    const int n = p.rank(), L = static_cast<int>(w.size());
    if (static_cast<int>(rot.order.size()) != L)
        throw std::invalid_argument("rotation length differs from word length");
    if (rot.alternating && n % 2 != 0)
        throw std::invalid_argument("alternating rotation needs an even rank");
    Link link(w, rot);
    std::vector<int> face_of;
    auto gfaces = link.faces(face_of);
    if (static_cast<long>(gfaces.size()) != target_faces(w))
        throw std::invalid_argument("rotation does not give a spherical link");

    FacePairingScheme s;
    s.rank = n;
    auto arc_id = [&](int g, int b) { return g * L + b; };
    for (int g = 0; g < n; ++g)
        for (int b = 0; b < L; ++b) {
            int b2 = link.succ(N, g, b);
            Arc a;
            a.id = arc_id(g, b);
            a.tail = face_of[link.end(N, g, b2)];
            a.head = face_of[link.end(P, g, b)];
            a.label = g;
            s.arcs.push_back(a);
        }

    std::vector<std::vector<FaceSide>> side[2];
    side[0].resize(n);
    side[1].resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < L; ++j) {
            int g = mod(w[j].gen + i, n);
            int sg = w[j].sign;
            int before = arc_id(g, link.pred(N, g, j));
            int here = arc_id(g, j);
            side[0][i].push_back({sg > 0 ? before : here, sg});
            side[1][i].push_back({sg > 0 ? here : before, sg});
        }

    // Orient: each arc is traversed once along and once against the
    // orientation. Swapping F_i^+ and F_i^- flips relator i.
    std::vector<std::vector<Occurrence>> occ(s.arcs.size());
    for (int i = 0; i < n; ++i)
        for (int sd = 0; sd < 2; ++sd)
            for (const auto& fs : side[sd][i])
                occ[fs.arc].push_back({i, sd, fs.dir});
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (relator, parity)
    for (const auto& o : occ) {
        if (o.size() != 2)
            throw std::invalid_argument("arc does not lie on two faces");
        int s0 = o[0].side ? -1 : 1, s1 = o[1].side ? -1 : 1;
        // eps_i * eps_m must equal -s0*s1*d0*d1
        int prod = -s0 * s1 * o[0].dir * o[1].dir;
        adj[o[0].relator].push_back({o[1].relator, prod});
        adj[o[1].relator].push_back({o[0].relator, prod});
    }
    std::vector<int> eps(n, 0);
    for (int start = 0; start < n; ++start) {
        if (eps[start])
            continue;
        eps[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (auto [m, prod] : adj[i]) {
                int want = eps[i] * prod;
                if (eps[m] == 0) {
                    eps[m] = want;
                    stack.push_back(m);
                } else if (eps[m] != want) {
                    throw std::invalid_argument("faces admit no consistent orientation");
                }
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (eps[i] < 0)
            std::swap(side[0][i], side[1][i]);

    auto is_pole = [&](int v) {
        for (int e : gfaces[v])
            if (link.type(e) != N)
                return false;
        return true;
    };
    auto source_of = [&](const std::vector<FaceSide>& b) {
        const Arc& a = s.arcs[b[0].arc];
        return b[0].dir > 0 ? a.tail : a.head;
    };
    const bool has_negative =
        std::any_of(w.letters().begin(), w.letters().end(), [](const Letter& a) { return a.sign < 0; });
    if (has_negative && !is_pole(source_of(side[1][0])) && is_pole(source_of(side[0][0])))
        std::swap(side[0], side[1]);

    for (int i = 0; i < n; ++i) {
        for (int sd = 0; sd < 2; ++sd) {
            Face f;
            f.relator = i;
            f.sign = sd == 0 ? 1 : -1;
            f.name = face_name(i, f.sign);
            f.boundary = side[sd][i];
            s.faces.push_back(std::move(f));
        }
        std::vector<std::pair<int, int>> pr;
        for (int j = 0; j < L; ++j)
            pr.push_back({side[0][i][j].arc, side[1][i][j].arc});
        s.pairing.push_back(std::move(pr));
    }

    // Names.
    const int V = static_cast<int>(gfaces.size());
    std::vector<std::string> name(V);
    std::set<std::string> taken;
    auto assign = [&](int v, const std::string& nm) {
        if (name[v].empty() && !taken.count(nm)) {
            name[v] = nm;
            taken.insert(nm);
        }
    };
    auto sup = [](const std::string& base, int sub, int up) {
        return base + "_" + std::to_string(sub) + "^" + std::to_string(up);
    };
    if (has_negative) {
        int north = source_of(side[1][0]);
        if (is_pole(north)) {
            assign(north, "N");
            for (int v = 0; v < V; ++v)
                if (v != north && is_pole(v))
                    assign(v, "S");
        }
        for (int a = 0; a < n; ++a) {
            int b = (a + 1) % n;
            for (int e = 0; e < link.ends(); ++e) {
                int x = link.alpha(e);
                if (link.type(e) != P || link.type(x) != P)
                    continue;
                if (!(link.gen(e) == a && link.gen(x) == b))
                    continue;
                for (int v : {face_of[e], face_of[x]}) {
                    if (gfaces[v].size() == 3)
                        assign(v, "v_" + std::to_string(a));
                    else if (gfaces[v].size() == 4)
                        assign(v, "u_" + std::to_string(a));
                }
            }
        }
        for (int a = 0; a < n; ++a) {
            int count = 0;
            for (int t = 0; t < L; ++t) {
                // rotation order at pos(a) starting from order[0]
                int j = link.reversed(P, a) ? rot.order[(L - t) % L] : rot.order[t];
                int v = face_of[link.end(P, a, j)];
                if (gfaces[v].size() == 2 && name[v].empty())
                    assign(v, sup("w", a, ++count));
            }
        }
    } else {
        const Arc& a0 = s.arcs[side[0][0][0].arc];
        int head = side[0][0][0].dir > 0 ? a0.head : a0.tail;
        int tail = side[0][0][0].dir > 0 ? a0.tail : a0.head;
        assign(head, "N");
        assign(tail, "S");
        for (int i = 0; i < n; ++i)
            for (int m = 1; m <= L - 2; ++m) {
                const FaceSide& fs = side[0][i][m];
                const Arc& a = s.arcs[fs.arc];
                int v = fs.dir > 0 ? a.head : a.tail;
                if (gfaces[v].size() == 2)
                    assign(v, sup("w", i, L - m));
            }
    }
    int z = 0;
    for (int v = 0; v < V; ++v)
        while (name[v].empty())
            assign(v, "z_" + std::to_string(z++));

    // Poles first, then the remaining vertices in discovery order.
    std::vector<int> perm;
    for (const char* pole : {"N", "S"})
        for (int v = 0; v < V; ++v)
            if (name[v] == pole)
                perm.push_back(v);
    for (int v = 0; v < V; ++v)
        if (name[v] != "N" && name[v] != "S")
            perm.push_back(v);
    std::vector<int> renum(V);
    for (int t = 0; t < V; ++t) {
        renum[perm[t]] = t;
        s.vertices.push_back(name[perm[t]]);
    }
    for (auto& a : s.arcs) {
        a.tail = renum[a.tail];
        a.head = renum[a.head];
    }
    return s;
}

std::optional<LinkRotation> find_link_rotation(const CyclicPresentation& p, bool alternating)
{
    const Word& w = p.defining_word();
    const int L = static_cast<int>(w.size());
    if (L < 2 || !is_cyclically_reduced(w))
        throw std::invalid_argument("rotation search needs a cyclically reduced word of length >= 2");
    if (alternating && p.rank() % 2 != 0)
        throw std::invalid_argument("alternating rotation needs an even rank");

    const long want = target_faces(w);
    auto accept = [&](const LinkRotation& r) {
        if (link_face_count(w, r) != want)
            return false;
        try {
            return validate_scheme(scheme_from_rotation(p, r), p).ok();
        } catch (const std::invalid_argument&) {
            return false;
        }
    };

    // Rotations found for one rank usually work for the same word shape at
    // other ranks, so try those before searching.
    static std::mutex cache_mutex;
    static std::map<std::pair<std::vector<Letter>, bool>, std::vector<LinkRotation>> cache;
    std::vector<Letter> shape;
    for (const auto& a : w.letters())
        shape.push_back({0, a.sign});
    auto key = std::make_pair(shape, alternating);
    std::vector<LinkRotation> hints;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end())
            hints = it->second;
    }
    for (const auto& h : hints)
        if (accept(h))
            return h;

    LinkRotation rot;
    rot.alternating = alternating;
    rot.order.assign(L, 0);
    std::vector<char> used(L, 0);
    used[0] = 1;
    std::optional<LinkRotation> found;

    auto dfs = [&](auto&& self, int placed) -> void {
        if (found)
            return;
        if (placed == L) {
            if (accept(rot))
                found = rot;
            return;
        }
        for (int j = 1; j < L && !found; ++j) {
            if (used[j])
                continue;
            used[j] = 1;
            rot.order[placed] = j;
            if (partial_genus_zero(w, rot.order, placed + 1, alternating))
                self(self, placed + 1);
            used[j] = 0;
        }
    };
    dfs(dfs, 1);
    if (found) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache[key].push_back(*found);
    }
    return found;
}

bool is_supported_shape(long k, long l)
{
    if (k < 1 || l < 1)
        return false;
    return k == 1 || l == 1 || (k == 5 && l == 2) || (k == 2 && l == 5);
}

FacePairingScheme build_scheme(const FamilySpec& spec)
{
    spec.validate();
    const CyclicPresentation p = build_family(spec);
    bool alternating = false;
    if (spec.family == Family::H) {
        if (spec.r < 2 || std::gcd(spec.r, spec.n) != 1)
            throw std::invalid_argument("H(r,n) schemes need r > 1 and gcd(r,n) = 1");
    } else {
        if (!is_supported_shape(spec.k, spec.l))
            throw std::invalid_argument("no scheme for shape (k,l) = (" + std::to_string(spec.k) + "," +
                                        std::to_string(spec.l) + ")");
        if (spec.n < 4 || spec.n % 2 != 0)
            throw std::invalid_argument("G schemes need n >= 4 even");
        if (spec.f % 2 != 0)
            throw std::invalid_argument("G schemes need f even");
        if ((static_cast<long>(spec.f) * spec.k) % spec.n != 0)
            throw std::invalid_argument("G schemes need fk = 0 mod n");
        alternating = true;
    }
    auto rot = find_link_rotation(p, alternating);
    if (!rot)
        throw std::runtime_error("no spherical link rotation found for " + spec.str());
    return scheme_from_rotation(p, *rot);
}

bool spine_decision(long k, long l, long n, long f)
{
    if (n < 4)
        throw std::invalid_argument("spine decision needs n >= 4");
    if (!is_supported_shape(k, l))
        throw std::invalid_argument("unsupported shape (k,l)");
    long fk = mod(f * k, n);
    if (fk == 2 % n)
        throw std::invalid_argument("fk = 2 mod n is outside theorem scope");
    return n % 2 == 0 && mod(f, 2) == 0 && fk == 0;
}

OddFObstruction odd_f_obstruction(long k, long l, long n, long f)
{
    if (k < 1 || l < 1 || std::gcd(k, l) != 1)
        throw std::invalid_argument("obstruction needs coprime k,l >= 1");
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("obstruction needs n even");
    if (mod(f * k, n) != 0)
        throw std::invalid_argument("obstruction needs fk = 0 mod n");
    if (mod(f, 2) == 0)
        throw std::invalid_argument("obstruction needs f odd");
    OddFObstruction o;
    o.duplicated_face_index = mod(l * f + 1, n);
    o.even = o.duplicated_face_index % 2 == 0;
    auto y = [&](long i) { return "y_" + std::to_string(mod(i, n)); };
    o.trace.push_back("f odd and fk = 0 mod n with n even force k even, so l is odd");
    o.trace.push_back("degree 4 vertex v: incoming " + y((l - 1) * f + 1) + ", " + y((l - 1) * f + 2) +
                      "; outgoing " + y(l * f + 1) + ", " + y(l * f + 3));
    o.trace.push_back("the face of relator " + std::to_string(o.duplicated_face_index) +
                      " through v has its source at N");
    o.trace.push_back("lf+1 = " + std::to_string(o.duplicated_face_index) + " mod " + std::to_string(n) +
                      (o.even ? " is even, so N carries two copies of F_" : " is odd, no collision at N for F_") +
                      std::to_string(o.duplicated_face_index) + "^-");
    return o;
}

}  // namespace spine
