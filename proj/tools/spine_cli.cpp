// spine: command-line front end for the cyclic presentation toolkit.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "spine/certify.hpp"
#include "spine/enumeration.hpp"
#include "spine/heegaard.hpp"
#include "spine/polyhedra.hpp"

using namespace spine;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

Json with_schema(Json j)
{
    j["schema"] = json_schema_version;
    return j;
}

std::vector<long> parse_coeffs(const std::string& text)
{
    std::vector<long> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(part, &used));
            if (used != part.size())
                throw UsageError("bad coefficient '" + part + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad coefficient '" + part + "'");
        }
    }
    if (out.empty())
        throw UsageError("empty coefficient list");
    return out;
}

std::pair<long, long> parse_range(const std::string& text)
{
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + text + "', expected a or a:b");
    }
}

Strategy parse_strategy(const std::string& s)
{
    if (s == "hlt")
        return Strategy::Hlt;
    if (s == "felsch")
        return Strategy::Felsch;
    if (s == "hlt+felsch")
        return Strategy::HltThenFelsch;
    throw UsageError("unknown strategy '" + s + "'");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

int cmd_family(const std::string& spec_text, bool json)
{
    FamilySpec spec = parse_family(spec_text);
    CyclicPresentation p = build_family(spec);
    if (json) {
        Json rels = Json::array();
        for (const auto& r : relators(p))
            rels.push_back(format_word(r));
        emit(with_schema({{"family", spec.str()}, {"defining_word", word_to_json(p.defining_word())},
                          {"relators", rels}}));
        return exit_ok;
    }
    std::cout << spec.str() << ": " << p.rank() << " generators\n";
    int i = 0;
    for (const auto& r : relators(p))
        std::cout << "  r" << i++ << " = " << format_word(r) << '\n';
    return exit_ok;
}

int cmd_whitehead(const std::string& spec_text, bool reduced, bool dot, bool census, bool json)
{
    FamilySpec spec = parse_family(spec_text);
    CyclicPresentation p = build_family(spec);
    WhiteheadGraph g = whitehead_graph(p);
    WhiteheadGraph shown = reduced ? reduce_graph(g) : g;
    if (dot) {
        std::cout << to_dot(shown);
        return exit_ok;
    }
    PlanarityResult pl = is_planar(g);
    PatternType pattern = match_family_pattern(g, spec);
    std::optional<FaceCensus> faces;
    std::string census_error;
    if (census && pl.planar) {
        try {
            faces = face_census(*pl.embedding);
        } catch (const std::invalid_argument& e) {
            census_error = e.what();
        }
    }
    if (json) {
        Json j = {{"family", spec.str()}, {"graph", graph_to_json(shown)}, {"reduced", reduced},
                  {"planar", pl.planar}, {"pattern", pattern_name(pattern)}};
        if (faces)
            j["census"] = census_to_json(*faces);
        if (!census_error.empty())
            j["census_error"] = census_error;
        emit(with_schema(j));
        return exit_ok;
    }
    std::cout << spec.str() << '\n';
    for (const auto& [e, m] : shown.edges())
        std::cout << "  " << shown.vertex_name(e.first) << " -- " << shown.vertex_name(e.second) << " x" << m << '\n';
    std::cout << (pl.planar ? "planar" : "non-planar") << '\n';
    std::cout << "pattern: " << pattern_name(pattern) << '\n';
    if (faces) {
        std::cout << "census:";
        for (const auto& [size, count] : *faces)
            std::cout << ' ' << size << "-gons x" << count;
        std::cout << '\n';
    } else if (!census_error.empty()) {
        std::cout << "census: " << census_error << '\n';
    }
    return exit_ok;
}

int cmd_abelian(const std::string& spec_text, bool json)
{
    FamilySpec spec = parse_family(spec_text);
    CyclicPresentation p = build_family(spec);
    AbelianInvariants inv = abelian_invariants(p);
    GroupOrder by_res = abelianization_order(p);
    bool agree = inv.order() == by_res;
    if (json) {
        Json torsion = Json::array();
        for (const auto& t : inv.torsion)
            torsion.push_back(bigint_to_json(t));
        emit(with_schema({{"family", spec.str()},
                          {"polynomial", representer_polynomial(p).str()},
                          {"torsion", torsion},
                          {"free_rank", inv.free_rank},
                          {"order_smith", order_to_json(inv.order())},
                          {"order_resultant", order_to_json(by_res)},
                          {"agree", agree}}));
    } else {
        std::cout << spec.str() << ": " << inv.str() << '\n';
        std::cout << "  p(t) = " << representer_polynomial(p).str() << '\n';
        std::cout << "  order (Smith) = " << inv.order().str() << ", |Res(p, t^n - 1)| = " << by_res.str() << '\n';
    }
    return agree ? exit_ok : exit_violation;
}

int cmd_resultant(const std::string& spec_text, const std::string& p_text, const std::string& q_text, long n,
                  bool json)
{
    IntPolynomial p, q;
    std::string label;
    if (!spec_text.empty()) {
        FamilySpec spec = parse_family(spec_text);
        CyclicPresentation pres = build_family(spec);
        p = representer_polynomial(pres);
        q = IntPolynomial::binomial(static_cast<std::size_t>(spec.n), -1);
        label = spec.str();
    } else {
        if (p_text.empty())
            throw UsageError("give a family spec or --p");
        auto to_poly = [](const std::vector<long>& c) {
            std::vector<BigInt> b(c.begin(), c.end());
            return IntPolynomial(b);
        };
        p = to_poly(parse_coeffs(p_text));
        if (!q_text.empty())
            q = to_poly(parse_coeffs(q_text));
        else if (n > 0)
            q = IntPolynomial::binomial(static_cast<std::size_t>(n), -1);
        else
            throw UsageError("give --q or --n");
    }
    BigInt value;
    bool zero_input = p.is_zero() || q.is_zero();
    if (!zero_input)
        value = resultant(p, q);
    if (json) {
        Json j = {{"p", p.str()}, {"q", q.str()}};
        if (!label.empty())
            j["family"] = label;
        j["resultant"] = zero_input ? Json(nullptr) : bigint_to_json(value);
        emit(with_schema(j));
    } else {
        std::cout << "|Res(" << p.str() << ", " << q.str() << ")| = " << (zero_input ? "undefined" : value.str())
                  << '\n';
    }
    return exit_ok;
}

int cmd_lemma42(long k, long l, long n, bool json)
{
    FractionalParams fp{k, l};
    Lemma42Forms forms = lemma42_closed_forms(fp, n);
    bool distinct = distinguish_f0_fhalf(fp, n);
    bool ok = forms.consistent() && distinct;
    if (json) {
        emit(with_schema({{"parameters", {{"k", k}, {"l", l}, {"n", n}}},
                          {"closed_form_f0_plus", bigint_to_json(forms.res_f0_plus)},
                          {"closed_form_fhalf_plus", bigint_to_json(forms.res_fhalf_plus)},
                          {"common_minus", bigint_to_json(forms.res_common_minus)},
                          {"direct_f0_plus", bigint_to_json(forms.direct_f0_plus)},
                          {"direct_fhalf_plus", bigint_to_json(forms.direct_fhalf_plus)},
                          {"consistent", forms.consistent()},
                          {"distinguishes", distinct}}));
    } else {
        std::cout << "k=" << k << " l=" << l << " n=" << n << '\n';
        std::cout << "  f=0:   Res(p, t^m+1) = " << forms.res_f0_plus << " (direct " << forms.direct_f0_plus
                  << ")\n";
        std::cout << "  f=n/2: Res(p, t^m+1) = " << forms.res_fhalf_plus << " (direct "
                  << forms.direct_fhalf_plus << ")\n";
        std::cout << "  Res(p, t^m-1) = " << forms.res_common_minus << '\n';
        std::cout << (distinct ? "abelianizations differ" : "abelianizations agree") << '\n';
    }
    return ok ? exit_ok : exit_violation;
}

int cmd_scheme_build(const std::string& spec_text, const std::string& out, bool dot)
{
    FacePairingScheme s = build_scheme(parse_family(spec_text));
    write_text(out, dot ? scheme_to_dot(s) : scheme_to_json(s).dump(2) + "\n");
    return exit_ok;
}

int cmd_scheme_verify(const std::string& path, const std::string& spec_text, const std::string& certificate,
                      bool json)
{
    FamilySpec spec = parse_family(spec_text);
    Json doc;
    try {
        doc = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    FacePairingScheme s;
    try {
        s = scheme_from_json(doc);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    CyclicPresentation p = build_family(spec);
    ValidationReport vr = validate_scheme(s, p);
    OrbitResult orbits = vr.ok() ? edge_orbits(s) : OrbitResult{};
    QuotientComplex q = vr.ok() ? quotient(s) : QuotientComplex{};
    Json cert = certificate_to_json(s, vr, orbits, q);
    if (!certificate.empty())
        write_text(certificate, cert.dump(2) + "\n");
    bool pass = cert["pass"].get<bool>();
    if (json) {
        emit(cert);
    } else {
        std::cout << vr.str();
        if (vr.ok()) {
            std::cout << "(V,E,F,C) = (" << q.V << ',' << q.E << ',' << q.F << ',' << q.C << "), chi = " << q.euler()
                      << '\n';
            for (const auto& e : q.errors)
                std::cout << "orbit error: " << e << '\n';
        }
        std::cout << (pass ? "Seifert-Threlfall condition holds" : "not certified") << '\n';
    }
    return pass ? exit_ok : exit_violation;
}

int cmd_heegaard(int r, int n, bool json)
{
    HeegaardDiagram d = heegaard_H(r, n);
    std::optional<HeegaardDiagram> q;
    std::string error;
    try {
        q = rho_quotient(d, n, r);
    } catch (const std::domain_error& e) {
        error = e.what();
    }
    bool canonical = q && *q == canonical_lens_diagram(r);
    if (json) {
        auto diagram_json = [](const HeegaardDiagram& h) {
            Json bundles = Json::array();
            for (const auto& b : h.bundles())
                bundles.push_back({{"from", b.a}, {"to", b.b}, {"multiplicity", b.multiplicity}});
            Json strands = Json::array();
            for (const auto& s : h.strands)
                strands.push_back({{"from", s.a}, {"from_label", s.a_label}, {"to", s.b}, {"to_label", s.b_label}});
            return Json{{"discs", h.discs}, {"bundles", bundles}, {"strands", strands}};
        };
        Json j = {{"r", r}, {"n", n}, {"diagram", diagram_json(d)}, {"canonical_lens", canonical}};
        if (q)
            j["quotient"] = diagram_json(*q);
        if (!error.empty())
            j["error"] = error;
        emit(with_schema(j));
    } else {
        std::cout << d.str();
        if (q)
            std::cout << "quotient by rho:\n" << q->str();
        else
            std::cout << error << '\n';
        std::cout << (canonical ? "quotient is the canonical L(" + std::to_string(r) + ",1) diagram"
                                : "quotient differs from the canonical lens diagram")
                  << '\n';
    }
    return canonical ? exit_ok : exit_violation;
}

int cmd_enumerate(const std::string& spec_text, bool extension, long max_cosets, const std::string& strategy,
                  bool trace, bool json)
{
    FamilySpec spec = parse_family(spec_text);
    EnumerationOptions opts = default_options();
    if (max_cosets > 0)
        opts.max_cosets = max_cosets;
    opts.strategy = parse_strategy(strategy);
    if (trace)
        opts.trace = [](const std::string& line) { std::cerr << line << '\n'; };
    EnumerationResult r;
    if (extension) {
        if (spec.family == Family::H)
            throw UsageError("--extension needs a G or F family");
        r = order_of(shift_extension(spec.k, spec.l, spec.n, spec.f), opts);
    } else {
        r = order_of(build_family(spec), opts);
    }
    if (json) {
        Json j = {{"family", spec.str()}, {"extension", extension}, {"finite", r.finite()},
                  {"strategy", strategy_name(r.strategy)}, {"max_live", r.max_live},
                  {"total_defined", r.total_defined}, {"max_cosets", opts.max_cosets}};
        j["order"] = r.finite() ? Json(r.order) : Json("EXCEEDED");
        emit(with_schema(j));
    } else {
        std::cout << spec.str() << (extension ? " shift extension" : "") << ": " << r.str() << '\n';
    }
    return exit_ok;
}

int cmd_certify(long k, long l, long n, long f, bool enumerate, long max_cosets, bool json)
{
    CertifyOptions opts;
    opts.enumerate = enumerate;
    opts.max_cosets = max_cosets > 0 ? max_cosets : default_max_cosets();
    CertifyReport rep = certify(k, l, n, f, opts);
    if (json)
        emit(rep.to_json());
    else
        std::cout << rep.str();
    return rep.exit_code();
}

int cmd_sweep(const std::string& k, const std::string& l, const std::string& n, bool enumerate, long max_cosets)
{
    SweepRange range;
    std::tie(range.k_min, range.k_max) = parse_range(k);
    std::tie(range.l_min, range.l_max) = parse_range(l);
    std::tie(range.n_min, range.n_max) = parse_range(n);
    CertifyOptions opts;
    opts.enumerate = enumerate;
    opts.max_cosets = max_cosets > 0 ? max_cosets : default_max_cosets();
    long failed = sweep(range, opts, std::cout);
    return failed == 0 ? exit_ok : exit_violation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclic presentations as 3-manifold spines"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    std::string spec, p_text, q_text, out, file, certificate, strategy = "hlt+felsch";
    std::string k_range = "1", l_range = "1", n_range = "4";
    bool reduced = false, dot = false, census = false, enumerate = false, trace = false, extension = false;
    long k = 0, l = 0, n = 0, f = 0, max_cosets = 0;
    int r = 0, rank = 0;

    auto* family = app.add_subcommand("family", "Print the relators of a family");
    family->add_option("spec", spec, "H:r,n | G:k,l,n,f | F:k,l,n")->required();
    family->add_flag("--json", json);

    auto* whitehead = app.add_subcommand("whitehead", "Whitehead graph, planarity and pattern");
    whitehead->add_option("spec", spec)->required();
    whitehead->add_flag("--reduced", reduced, "Clamp multiplicities to 1");
    whitehead->add_flag("--dot", dot, "Emit the graph as DOT");
    whitehead->add_flag("--census", census, "Face sizes of the planar embedding");
    whitehead->add_flag("--json", json);

    auto* abelian = app.add_subcommand("abelian", "Abelianization by Smith form and by resultant");
    abelian->add_option("spec", spec)->required();
    abelian->add_flag("--json", json);

    auto* res = app.add_subcommand("resultant", "|Res(p, q)| for a family or explicit coefficients");
    res->add_option("spec", spec, "family spec; uses p(t) and t^n - 1");
    res->add_option("--p", p_text, "coefficients of p, constant term first");
    res->add_option("--q", q_text, "coefficients of q, constant term first");
    res->add_option("--n", rank, "use q = t^n - 1");
    res->add_flag("--json", json);

    auto* lemma = app.add_subcommand("lemma42", "Closed forms for f = 0 and f = n/2");
    lemma->add_option("k", k)->required();
    lemma->add_option("l", l)->required();
    lemma->add_option("n", n)->required();
    lemma->add_flag("--json", json);

    auto* scheme = app.add_subcommand("scheme", "Face pairing schemes");
    scheme->require_subcommand(1);
    auto* build = scheme->add_subcommand("build", "Write scheme.json for a family");
    build->add_option("spec", spec)->required();
    build->add_option("-o,--output", out, "output file, default stdout");
    build->add_flag("--dot", dot, "Emit the boundary 1-skeleton as DOT");
    auto* verify = scheme->add_subcommand("verify", "Validate a scheme.json and certify it");
    verify->add_option("file", file)->required();
    verify->add_option("--family", spec, "family whose relators the faces must spell")->required();
    verify->add_option("--certificate", certificate, "write certificate.json here");
    verify->add_flag("--json", json);

    auto* heegaard = app.add_subcommand("heegaard", "Heegaard diagram of H(r,n) and its rho quotient");
    heegaard->add_option("r", r)->required();
    heegaard->add_option("n", rank)->required();
    heegaard->add_flag("--json", json);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Todd-Coxeter order of a family");
    enumerate_cmd->add_option("spec", spec)->required();
    enumerate_cmd->add_flag("--extension", extension, "Enumerate the shift extension instead");
    enumerate_cmd->add_option("--max-cosets", max_cosets, "cap on live cosets");
    enumerate_cmd->add_option("--strategy", strategy, "hlt, felsch or hlt+felsch");
    enumerate_cmd->add_flag("--trace", trace, "Log definitions and coincidences to stderr");
    enumerate_cmd->add_flag("--json", json);

    auto* cert = app.add_subcommand("certify", "Run every check on G(k,l,n,f)");
    cert->add_option("k", k)->required();
    cert->add_option("l", l)->required();
    cert->add_option("n", n)->required();
    cert->add_option("f", f)->required();
    cert->add_flag("--enumerate", enumerate, "Also run coset enumeration");
    cert->add_option("--max-cosets", max_cosets);
    cert->add_flag("--json", json);

    auto* sweep_cmd = app.add_subcommand("sweep", "certify over a grid, CSV output");
    sweep_cmd->add_option("--k", k_range, "a or a:b");
    sweep_cmd->add_option("--l", l_range, "a or a:b");
    sweep_cmd->add_option("--n", n_range, "a or a:b");
    sweep_cmd->add_flag("--enumerate", enumerate);
    sweep_cmd->add_option("--max-cosets", max_cosets);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*family)
            return cmd_family(spec, json);
        if (*whitehead)
            return cmd_whitehead(spec, reduced, dot, census, json);
        if (*abelian)
            return cmd_abelian(spec, json);
        if (*res)
            return cmd_resultant(spec, p_text, q_text, rank, json);
        if (*lemma)
            return cmd_lemma42(k, l, n, json);
        if (*build)
            return cmd_scheme_build(spec, out, dot);
        if (*verify)
            return cmd_scheme_verify(file, spec, certificate, json);
        if (*heegaard)
            return cmd_heegaard(r, rank, json);
        if (*enumerate_cmd)
            return cmd_enumerate(spec, extension, max_cosets, strategy, trace, json);
        if (*cert)
            return cmd_certify(k, l, n, f, enumerate, max_cosets, json);
        if (*sweep_cmd)
            return cmd_sweep(k_range, l_range, n_range, enumerate, max_cosets);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
