#include "spine/certify.hpp"

#include <numeric>
#include <sstream>

#include "spine/enumeration.hpp"
#include "spine/polyhedra.hpp"

namespace spine {

std::string status_name(StageStatus s)
{
    switch (s) {
    case StageStatus::Pass:
        return "pass";
    case StageStatus::Fail:
        return "fail";
    case StageStatus::Skipped:
        return "skipped";
    }
    return "?";
}

bool CertifyReport::passed() const
{
    for (const auto& s : stages)
        if (s.status == StageStatus::Fail)
            return false;
    return true;
}

const Stage* CertifyReport::stage(const std::string& name) const
{
    for (const auto& s : stages)
        if (s.name == name)
            return &s;
    return nullptr;
}

std::string CertifyReport::str() const
{
    std::ostringstream out;
    out << "G(" << k << ',' << l << ',' << n << ',' << f << ")\n";
    for (const auto& s : stages) {
        out << "  " << s.name << ": " << status_name(s.status);
        if (!s.detail.empty())
            out << " (" << s.detail << ')';
        out << '\n';
    }
    out << "verdict: " << verdict << '\n';
    return out.str();
}

Json CertifyReport::to_json() const
{
    Json stages_json = Json::array();
    for (const auto& s : stages)
        stages_json.push_back({{"name", s.name}, {"status", status_name(s.status)}, {"detail", s.detail}});
    return {{"schema", json_schema_version},
            {"parameters", {{"k", k}, {"l", l}, {"n", n}, {"f", f}}},
            {"stages", stages_json},
            {"verdict", verdict},
            {"pass", passed()}};
}

CertifyReport certify(long k, long l, long n, long f, const CertifyOptions& options)
{
    const FamilySpec spec = FamilySpec::G(static_cast<int>(k), static_cast<int>(l), static_cast<int>(n),
                                          static_cast<int>(f));
    spec.validate();
    CertifyReport rep;
    rep.k = k;
    rep.l = l;
    rep.n = n;
    rep.f = f;
    const CyclicPresentation p = build_family(spec);
    const long fk = mod(f * k, n);

    // Planarity: generic test against the closed-form criterion.
    const WhiteheadGraph graph = whitehead_graph(p);
    const bool planar = is_planar(reduce_graph(graph)).planar;
    {
        Stage s{"planarity", StageStatus::Pass, planar ? "planar" : "non-planar"};
        if (n >= 4) {
            bool expected = planarity_criterion_G(k, l, n, f);
            if (expected != planar) {
                s.status = StageStatus::Fail;
                s.detail += expected ? ", criterion says planar" : ", criterion says non-planar";
            }
        } else {
            s.detail += ", criterion needs n >= 4";
        }
        rep.stages.push_back(s);
    }

    {
        Stage s{"pattern", StageStatus::Skipped, "needs a planar graph with fk = 0 mod n"};
        if (planar && fk == 0) {
            PatternType t = match_family_pattern(graph, spec);
            s.status = t == PatternType::None ? StageStatus::Fail : StageStatus::Pass;
            s.detail = pattern_name(t);
        }
        rep.stages.push_back(s);
    }

    {
        Stage s{"abelianization", StageStatus::Pass, ""};
        GroupOrder by_snf = abelian_invariants(p).order();
        GroupOrder by_res = abelianization_order(p);
        s.detail = by_res.str();
        if (!(by_snf == by_res)) {
            s.status = StageStatus::Fail;
            s.detail = "resultant " + by_res.str() + " but Smith form " + by_snf.str();
        }
        rep.stages.push_back(s);
    }

    std::optional<bool> decision;
    {
        Stage s{"spine_decision", StageStatus::Skipped, "outside theorem scope"};
        try {
            decision = spine_decision(k, l, n, f);
            s.status = StageStatus::Pass;
            s.detail = *decision ? "spine" : "not a spine";
        } catch (const std::invalid_argument& e) {
            s.detail = std::string("outside theorem scope: ") + e.what();
        }
        rep.stages.push_back(s);
    }

    {
        Stage scheme{"scheme", StageStatus::Skipped, "no scheme unless the decision is positive"};
        Stage st{"seifert_threlfall", StageStatus::Skipped, "no scheme"};
        if (decision && *decision) {
            try {
                FacePairingScheme s = build_scheme(spec);
                ValidationReport vr = validate_scheme(s, p);
                scheme.status = vr.ok() ? StageStatus::Pass : StageStatus::Fail;
                scheme.detail = vr.ok() ? std::to_string(s.vertices.size()) + " vertices, " +
                                              std::to_string(s.arcs.size()) + " arcs"
                                        : vr.first_failure()->name + ": " + vr.first_failure()->detail;
                QuotientComplex q = quotient(s);
                bool ok = vr.ok() && seifert_threlfall(s);
                st.status = ok ? StageStatus::Pass : StageStatus::Fail;
                st.detail = "(V,E,F,C) = (" + std::to_string(q.V) + "," + std::to_string(q.E) + "," +
                            std::to_string(q.F) + "," + std::to_string(q.C) + "), chi = " +
                            std::to_string(q.euler());
            } catch (const std::exception& e) {
                scheme.status = StageStatus::Fail;
                scheme.detail = e.what();
            }
        }
        rep.stages.push_back(scheme);
        rep.stages.push_back(st);
    }

    {
        Stage s{"odd_f_obstruction", StageStatus::Skipped, "needs n even, fk = 0 mod n, f odd"};
        if (n % 2 == 0 && fk == 0 && f % 2 != 0 && std::gcd(k, l) == 1) {
            OddFObstruction o = odd_f_obstruction(k, l, n, f);
            s.status = o.even ? StageStatus::Pass : StageStatus::Fail;
            s.detail = "duplicated face F_" + std::to_string(o.duplicated_face_index) + "^-";
        }
        rep.stages.push_back(s);
    }

    if (options.enumerate) {
        Stage s{"enumeration", StageStatus::Skipped, ""};
        EnumerationOptions eo;
        eo.max_cosets = options.max_cosets;
        EnumerationResult r = order_of(p, eo);
        if (r.finite()) {
            s.status = StageStatus::Pass;
            s.detail = "order " + std::to_string(r.order);
        } else {
            s.detail = "cap of " + std::to_string(options.max_cosets) + " cosets reached";
        }
        rep.stages.push_back(s);
    }

    if (!rep.passed())
        rep.verdict = "FAIL";
    else if (!decision)
        rep.verdict = "outside theorem scope";
    else
        rep.verdict = *decision ? "spine" : "not a spine";
    return rep;
}

std::string sweep_csv_header()
{
    return "k,l,n,f,planarity,pattern,abelianization,spine_decision,scheme,seifert_threlfall,"
           "odd_f_obstruction,enumeration,verdict";
}

std::string sweep_csv_row(const CertifyReport& r)
{
    auto cell = [&](const char* name) {
        const Stage* s = r.stage(name);
        return s ? status_name(s->status) : std::string("skipped");
    };
    std::ostringstream out;
    out << r.k << ',' << r.l << ',' << r.n << ',' << r.f;
    for (const char* name : {"planarity", "pattern", "abelianization", "spine_decision", "scheme",
                             "seifert_threlfall", "odd_f_obstruction", "enumeration"})
        out << ',' << cell(name);
    out << ',' << r.verdict;
    return out.str();
}

long sweep(const SweepRange& range, const CertifyOptions& options, std::ostream& out)
{
    long failed = 0;
    out << sweep_csv_header() << '\n';
    for (long k = range.k_min; k <= range.k_max; ++k)
        for (long l = range.l_min; l <= range.l_max; ++l)
            for (long n = range.n_min; n <= range.n_max; ++n)
                for (long f = 0; f < n; ++f) {
                    CertifyReport r = certify(k, l, n, f, options);
                    if (!r.passed())
                        ++failed;
                    out << sweep_csv_row(r) << std::endl;
                }
    return failed;
}

}  // namespace spine
