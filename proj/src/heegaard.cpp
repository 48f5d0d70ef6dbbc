#include "spine/heegaard.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spine/polyhedra.hpp"

namespace spine {

namespace {

struct DiscName {
    int index = 0;
    int sign = 1;
};

DiscName parse_disc(const std::string& name)
{
    // F_i^+ or F_i^-
    if (name.size() < 5 || name.compare(0, 2, "F_") != 0)
        throw std::invalid_argument("bad disc name " + name);
    auto caret = name.find('^');
    if (caret == std::string::npos || caret + 2 != name.size())
        throw std::invalid_argument("bad disc name " + name);
    DiscName d;
    d.index = std::stoi(name.substr(2, caret - 2));
    d.sign = name.back() == '+' ? 1 : -1;
    return d;
}

Strand oriented(Strand s)
{
    bool a_plus = s.a.back() == '+';
    bool b_plus = s.b.back() == '+';
    if ((!a_plus && b_plus) || (a_plus == b_plus && std::tie(s.b, s.b_label) < std::tie(s.a, s.a_label))) {
        std::swap(s.a, s.b);
        std::swap(s.a_label, s.b_label);
    }
    return s;
}

}  // namespace

std::vector<Bundle> HeegaardDiagram::bundles() const
{
    std::map<std::pair<std::string, std::string>, long> count;
    for (const auto& s : strands)
        ++count[{s.a, s.b}];
    std::vector<Bundle> out;
    for (const auto& [k, m] : count)
        out.push_back({k.first, k.second, m});
    return out;
}

std::map<std::string, long> HeegaardDiagram::degrees() const
{
    std::map<std::string, long> deg;
    for (const auto& d : discs)
        deg[d] = 0;
    for (const auto& s : strands) {
        ++deg[s.a];
        ++deg[s.b];
    }
    return deg;
}

std::string HeegaardDiagram::str() const
{
    std::ostringstream out;
    out << "discs:";
    for (const auto& d : discs)
        out << ' ' << d;
    out << '\n';
    for (const auto& b : bundles())
        out << b.a << " -- " << b.b << " x" << b.multiplicity << '\n';
    for (const auto& s : strands)
        out << "  " << s.a << '[' << s.a_label << "] -- " << s.b << '[' << s.b_label << "]\n";
    return out.str();
}

HeegaardDiagram heegaard_from_scheme(const FacePairingScheme& s)
{
    std::vector<std::vector<std::pair<int, int>>> where(s.arcs.size());  // (face, label)
    for (std::size_t fi = 0; fi < s.faces.size(); ++fi) {
        const Face& f = s.faces[fi];
        const int L = static_cast<int>(f.boundary.size());
        for (int j = 0; j < L; ++j)
            where[s.side_at(f, j).arc].push_back({static_cast<int>(fi), L - j});
    }
    HeegaardDiagram d;
    for (const auto& f : s.faces)
        d.discs.push_back(f.name);
    for (std::size_t a = 0; a < where.size(); ++a) {
        if (where[a].size() != 2)
            throw std::invalid_argument("arc " + std::to_string(a) + " does not lie on two faces");
        const auto& [f0, l0] = where[a][0];
        const auto& [f1, l1] = where[a][1];
        d.strands.push_back(oriented({s.faces[f0].name, l0, s.faces[f1].name, l1}));
    }
    std::sort(d.strands.begin(), d.strands.end());
    return d;
}

HeegaardDiagram heegaard_H(int r, int n)
{
    if (r < 2 || n < 2 || std::gcd(r, n) != 1)
        throw std::invalid_argument("heegaard_H needs r > 1, n > 1 and gcd(r,n) = 1");
    HeegaardDiagram d = heegaard_from_scheme(build_scheme(FamilySpec::H(r, n)));
    d.discs.clear();
    for (int i = 0; i < n; ++i)
        d.discs.push_back(face_name(mod(static_cast<long>(i) * r, n), 1));
    for (int i = 0; i < n; ++i)
        d.discs.push_back(face_name(mod(static_cast<long>(i) * r + 1, n), -1));
    return d;
}

HeegaardDiagram rotate_diagram(const HeegaardDiagram& d, int n, int shift)
{
    auto move = [&](const std::string& name) {
        DiscName dn = parse_disc(name);
        return face_name(mod(static_cast<long>(dn.index) + shift, n), dn.sign);
    };
    HeegaardDiagram out;
    for (const auto& disc : d.discs)
        out.discs.push_back(move(disc));
    for (const auto& s : d.strands)
        out.strands.push_back(oriented({move(s.a), s.a_label, move(s.b), s.b_label}));
    std::sort(out.strands.begin(), out.strands.end());
    return out;
}

HeegaardDiagram rho_quotient(const HeegaardDiagram& d, int n, int r)
{
    if (n < 1 || std::gcd(r, n) != 1)
        throw std::invalid_argument("rho_quotient needs gcd(r,n) = 1");
    HeegaardDiagram turned = rotate_diagram(d, n, r);
    if (turned.strands != d.strands) {
        auto before = d.bundles();
        auto after = turned.bundles();
        std::string which = "strand labels";
        for (const auto& b : before)
            if (std::find(after.begin(), after.end(), b) == after.end()) {
                which = b.a + " -- " + b.b + " x" + std::to_string(b.multiplicity);
                break;
            }
        throw std::domain_error("diagram is not invariant under rho: " + which);
    }
    // gcd(r,n) = 1, so rho is transitive on each disc row and free on strands.
    std::map<Strand, long> folded;
    for (const auto& s : d.strands) {
        Strand q{parse_disc(s.a).sign > 0 ? "F^+" : "F^-", s.a_label, parse_disc(s.b).sign > 0 ? "F^+" : "F^-",
                 s.b_label};
        ++folded[q];
    }
    HeegaardDiagram out;
    out.discs = {"F^+", "F^-"};
    for (const auto& [s, m] : folded) {
        if (m % n != 0)
            throw std::domain_error("strand orbit of size other than n at " + s.a + "[" + std::to_string(s.a_label) +
                                    "]");
        for (long t = 0; t < m / n; ++t)
            out.strands.push_back(s);
    }
    return out;
}

HeegaardDiagram canonical_lens_diagram(int r)
{
    if (r < 1)
        throw std::invalid_argument("lens diagram needs r >= 1");
    HeegaardDiagram d;
    d.discs = {"F^+", "F^-"};
    for (int j = 1; j <= r; ++j)
        d.strands.push_back({"F^+", j, "F^-", j % r + 1});
    std::sort(d.strands.begin(), d.strands.end());
    return d;
}

}  // namespace spine
