// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spine/enumeration.hpp"
#include "spine/heegaard.hpp"
#include "spine/homology.hpp"
#include "spine/polyhedra.hpp"
#include "spine/whitehead.hpp"

using namespace spine;

namespace {

// Every check is exact. These are the only tunables.
constexpr long enumeration_cap = 2000000;
constexpr double budget_finite_orders_s = 30.0;
constexpr double budget_lemma_s = 5.0;
constexpr double budget_spines_s = 60.0;
constexpr int mutants_per_kind = 200;
constexpr unsigned mutation_seed = 20240517;

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> notes;

    void fail(const std::string& why)
    {
        pass = false;
        if (notes.size() < 8)
            notes.push_back(why);
    }
};

Outcome finite_orders()
{
    Outcome o;
    EnumerationOptions opts;
    opts.max_cosets = enumeration_cap;
    auto expect = [&](const FamilySpec& spec, long want) {
        EnumerationResult r = order_of(build_family(spec), opts);
        if (!r.finite() || r.order != want)
            o.fail(spec.str() + ": " + r.str() + ", expected " + std::to_string(want));
    };
    expect(FamilySpec::G(3, 1, 3, 0), 3528);
    expect(FamilySpec::G(3, 1, 3, 1), 3528);
    expect(FamilySpec::G(3, 2, 3, 0), 504);
    expect(FamilySpec::G(3, 2, 3, 1), 504);
    int h = 0;
    for (int r = 2; r <= 10; ++r)
        for (int n = 2; n <= 10; ++n)
            if (std::gcd(r, n) == 1) {
                expect(FamilySpec::H(r, n), r);
                ++h;
            }
    for (int l = 1; l <= 5; ++l)
        expect(FamilySpec::G(1, l, 4, 0), 4L * l * l + 1);
    o.summary = "3528 x2, 504 x2, " + std::to_string(h) + " H(r,n) = r, G(1,l,4,0) = 4l^2+1 for l <= 5";
    return o;
}

Outcome abelianization_equivalence()
{
    Outcome o;
    long count = 0, infinite = 0;
    auto compare = [&](const FamilySpec& spec) {
        CyclicPresentation p = build_family(spec);
        GroupOrder snf = abelian_invariants(p).order();
        IntPolynomial rp = representer_polynomial(p);
        BigInt res = rp.is_zero() ? BigInt(0) : resultant(rp, IntPolynomial::binomial(spec.n, -1));
        GroupOrder by_res = res == 0 ? GroupOrder::infinity() : GroupOrder::finite(abs(res));
        ++count;
        if (snf.infinite)
            ++infinite;
        if (!(snf == by_res))
            o.fail(spec.str() + ": Smith " + snf.str() + " vs resultant " + by_res.str());
    };
    for (int n = 2; n <= 12; ++n) {
        for (int r = 1; r <= 5; ++r)
            compare(FamilySpec::H(r, n));
        for (int k = 1; k <= 5; ++k)
            for (int l = 1; l <= 5; ++l)
                for (int f = 0; f < n; ++f)
                    compare(FamilySpec::G(k, l, n, f));
    }
    o.summary = std::to_string(count) + " presentations, " + std::to_string(infinite) + " infinite";
    return o;
}

Outcome lemma_suite()
{
    Outcome o;
    long cases = 0, closed_mismatch = 0;
    for (long k : {2, 4, 6})
        for (long l : {1, 3, 5})
            for (long n = 4; n <= 12; n += 2) {
                if (std::gcd(k, l) != 1)
                    continue;
                ++cases;
                const std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(n) + ")";
                for (long f : {0L, n / 2}) {
                    IntPolynomial p = family_polynomial(k, l, f);
                    auto [minus, plus] = resultant_split(p, n);
                    if (abs(resultant(p, IntPolynomial::binomial(n, -1))) != minus * plus)
                        o.fail(tag + " f=" + std::to_string(f) + ": splitting");
                }
                Lemma42Forms fm = lemma42_closed_forms({k, l}, n);
                if (fm.res_f0_plus != fm.direct_f0_plus)
                    o.fail(tag + ": f=0 closed form " + fm.res_f0_plus.str() + " vs " + fm.direct_f0_plus.str());
                if (fm.res_fhalf_plus != fm.direct_fhalf_plus) {
                    ++closed_mismatch;
                    o.fail(tag + ": f=n/2 closed form " + fm.res_fhalf_plus.str() + " vs direct " +
                           fm.direct_fhalf_plus.str());
                }
                if (fm.direct_f0_minus != fm.direct_fhalf_minus)
                    o.fail(tag + ": minus factors differ");
                if (!distinguish_f0_fhalf({k, l}, n))
                    o.fail(tag + ": Res(p_0) = Res(p_n/2)");
            }
    o.summary = std::to_string(cases) + " cases, f=n/2 closed form off in " + std::to_string(closed_mismatch);
    return o;
}

Outcome planarity_equivalence()
{
    Outcome o;
    long count = 0, disagree = 0;
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int l = 1; l <= 4; ++l)
                for (int f = 0; f < n; ++f) {
                    ++count;
                    bool generic = is_planar(whitehead_graph(build_family(FamilySpec::G(k, l, n, f)))).planar;
                    if (generic != planarity_criterion_G(k, l, n, f)) {
                        ++disagree;
                        o.fail(FamilySpec::G(k, l, n, f).str() + ": generic " + (generic ? "planar" : "non-planar"));
                    }
                }
    o.summary = std::to_string(count) + " graphs, " + std::to_string(disagree) + " disagreements";
    return o;
}

std::vector<FamilySpec> spine_grid()
{
    std::vector<FamilySpec> out;
    for (int r = 2; r <= 10; ++r)
        for (int n = 2; n <= 10; ++n)
            if (std::gcd(r, n) == 1)
                out.push_back(FamilySpec::H(r, n));
    std::vector<std::pair<int, int>> shapes;
    for (int k = 1; k <= 6; ++k)
        shapes.emplace_back(k, 1);
    for (int l = 2; l <= 6; ++l)
        shapes.emplace_back(1, l);
    shapes.emplace_back(5, 2);
    shapes.emplace_back(2, 5);
    for (auto [k, l] : shapes)
        for (int n = 4; n <= 12; n += 2)
            for (int f = 0; f < n; f += 2)
                if ((f * k) % n == 0)
                    out.push_back(FamilySpec::G(k, l, n, f));
    return out;
}

Outcome spine_certificates()
{
    Outcome o;
    long schemes = 0, obstructions = 0;
    for (const auto& spec : spine_grid()) {
        ++schemes;
        CyclicPresentation p = build_family(spec);
        const long L = static_cast<long>(p.defining_word().size());
        FacePairingScheme s;
        try {
            s = build_scheme(spec);
        } catch (const std::exception& e) {
            o.fail(spec.str() + ": " + e.what());
            continue;
        }
        ValidationReport vr = validate_scheme(s, p);
        if (!vr.ok())
            o.fail(spec.str() + ": " + vr.first_failure()->name + ": " + vr.first_failure()->detail);
        OrbitResult orbits = edge_orbits(s);
        if (!orbits.ok())
            o.fail(spec.str() + ": " + orbits.errors.front());
        for (const auto& orb : orbits.orbits) {
            bool single = true;
            for (int a : orb.arcs)
                single = single && s.arcs[a].label == orb.label;
            if (static_cast<long>(orb.arcs.size()) != L || !single)
                o.fail(spec.str() + ": orbit of x" + std::to_string(orb.label));
        }
        QuotientComplex q = quotient(s);
        if (q.V != 1 || q.E != spec.n || q.F != spec.n || q.C != 1 || q.euler() != 0)
            o.fail(spec.str() + ": quotient (" + std::to_string(q.V) + "," + std::to_string(q.E) + "," +
                   std::to_string(q.F) + "," + std::to_string(q.C) + ")");
    }
    std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {1, 2},
                                            {1, 3}, {1, 4}, {1, 5}, {1, 6}, {5, 2}, {2, 5}};
    for (auto [k, l] : shapes)
        for (long n = 4; n <= 12; n += 2)
            for (long f = 1; f < n; f += 2)
                if ((f * k) % n == 0) {
                    ++obstructions;
                    OddFObstruction ob = odd_f_obstruction(k, l, n, f);
                    if (!ob.even || ob.duplicated_face_index != (l * f + 1) % n)
                        o.fail(FamilySpec::G(k, l, n, f).str() + ": obstruction index " +
                               std::to_string(ob.duplicated_face_index));
                }
    o.summary = std::to_string(schemes) + " schemes with chi = 0, " + std::to_string(obstructions) +
                " odd-f obstructions";
    return o;
}

Outcome heegaard_quotients()
{
    Outcome o;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
        const std::string tag = "(" + std::to_string(r) + "," + std::to_string(n) + ")";
        HeegaardDiagram d = heegaard_H(r, n);
        if (rotate_diagram(d, n, r).strands != d.strands) {
            o.fail(tag + ": not invariant under the rotation");
            continue;
        }
        try {
            if (!(rho_quotient(d, n, r) == canonical_lens_diagram(r)))
                o.fail(tag + ": quotient differs from L(r,1)");
        } catch (const std::exception& e) {
            o.fail(tag + ": " + e.what());
        }
    }
    o.summary = "5 diagrams fold onto the canonical L(r,1) diagram";
    return o;
}

Outcome kernel_round_trip()
{
    Outcome o;
    long count = 0;
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k <= 5; ++k)
            for (int l = 1; l <= 5; ++l)
                for (int f = 0; f < n; ++f) {
                    if ((f * k) % n != 0)
                        continue;
                    ++count;
                    CyclicPresentation got = rewrite_kernel(shift_extension(k, l, n, f), f);
                    if (!equivalent(got, build_family(FamilySpec::G(k, l, n, f))))
                        o.fail(FamilySpec::G(k, l, n, f).str() + ": " + format_word(got.defining_word(), 'y'));
                }
    o.summary = std::to_string(count) + " grid points";
    return o;
}

Outcome order_independence()
{
    Outcome o;
    std::ostringstream s;
    for (auto [k, l, n, f1, f2] : std::vector<std::array<int, 5>>{{3, 1, 3, 0, 1}, {3, 2, 3, 0, 1}, {2, 1, 4, 0, 2}}) {
        OrderIndependence oi = verify_order_independence(k, l, n, f1, f2, enumeration_cap);
        const std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(n) +
                                ",{" + std::to_string(f1) + "," + std::to_string(f2) + "})";
        const char* verdict = oi.verdict == OrderComparison::Equal       ? "equal"
                              : oi.verdict == OrderComparison::Different ? "different"
                                                                         : "inconclusive";
        s << tag << " " << verdict << "; ";
        if (!oi.passed())
            o.fail(tag + ": " + verdict + " (" + oi.first.str() + " / " + oi.second.str() + ")");
    }
    GroupOrder a = abelianization_order(build_family(FamilySpec::G(2, 1, 4, 0)));
    GroupOrder b = abelianization_order(build_family(FamilySpec::G(2, 1, 4, 2)));
    s << "(2,1,4) abelianizations " << a.str() << " vs " << b.str();
    if (!(a == GroupOrder::finite(32) && b == GroupOrder::finite(16)))
        o.fail("(2,1,4) abelianization orders " + a.str() + ", " + b.str());
    o.summary = s.str();
    return o;
}

Outcome fault_injection()
{
    Outcome o;
    std::mt19937 rng(mutation_seed);
    const std::vector<FamilySpec> bases{FamilySpec::H(3, 4),       FamilySpec::H(4, 7),       FamilySpec::G(1, 1, 6, 0),
                                        FamilySpec::G(3, 1, 6, 2), FamilySpec::G(5, 2, 10, 0), FamilySpec::G(1, 3, 8, 0)};
    std::vector<std::pair<CyclicPresentation, FacePairingScheme>> pool;
    for (const auto& spec : bases)
        pool.emplace_back(build_family(spec), build_scheme(spec));
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    long mutants = 0, caught = 0;
    for (int kind = 0; kind < 3; ++kind)
        for (int t = 0; t < mutants_per_kind; ++t) {
            const auto& [p, base] = pool[pick(pool.size())];
            FacePairingScheme m = base;
            const int na = static_cast<int>(m.arcs.size());
            std::string what;
            if (kind == 0) {
                Arc& a = m.arcs[pick(m.arcs.size())];
                a.label = mod(a.label + 1 + static_cast<long>(pick(m.rank - 1)), m.rank);
                what = "arc label";
            } else if (kind == 1) {
                auto& row = m.pairing[pick(m.pairing.size())];
                auto& e = row[pick(row.size())];
                int& slot = rng() % 2 ? e.first : e.second;
                slot = (slot + 1 + static_cast<int>(pick(na - 1))) % na;
                what = "pairing entry";
            } else {
                Face& f = m.faces[pick(m.faces.size())];
                FaceSide& side = f.boundary[pick(f.boundary.size())];
                if (rng() % 2)
                    side.dir = -side.dir;
                else
                    side.arc = (side.arc + 1 + static_cast<int>(pick(na - 1))) % na;
                what = "face word";
            }
            ++mutants;
            if (!validate_scheme(m, p).ok() || !edge_orbits(m).ok())
                ++caught;
            else
                o.fail("undetected " + what + " mutant");
        }
    o.summary = std::to_string(caught) + "/" + std::to_string(mutants) + " mutants detected";
    if (mutants < 500)
        o.fail("corpus too small");
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget_s;  // 0 = none
    };
    const std::vector<Criterion> criteria{
        {1, "finite orders", finite_orders, budget_finite_orders_s},
        {2, "abelianization oracle equivalence", abelianization_equivalence, 0},
        {3, "resultant closed forms", lemma_suite, budget_lemma_s},
        {4, "planarity criterion equivalence", planarity_equivalence, 0},
        {5, "spine certificates", spine_certificates, budget_spines_s},
        {6, "Heegaard quotient", heegaard_quotients, 0},
        {7, "kernel rewriting round trip", kernel_round_trip, 0},
        {8, "order independence of f", order_independence, 0},
        {9, "fault injection", fault_injection, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs > c.budget_s)
            o.fail("over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
        if (!o.pass)
            ++failed;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.summary << " ["
                  << timing << "]\n";
        for (const auto& note : o.notes)
            std::cout << "    " << note << '\n';
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed;
}
