#include "spine/io.hpp"

#include <limits>
#include <stdexcept>

namespace spine {

namespace {

template <class T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

Json word_to_json(const Word& w)
{
    Json letters = Json::array();
    for (const Letter& a : w.letters())
        letters.push_back({a.gen, a.sign});
    return {{"rank", w.rank()}, {"word", letters}};
}

Word word_from_json(const Json& j)
{
    const int rank = field<int>(j, "rank");
    if (rank < 1)
        throw std::invalid_argument("rank must be positive");
    const auto letters = field<std::vector<std::vector<int>>>(j, "word");
    Word w(rank);
    for (const auto& a : letters) {
        if (a.size() != 2 || a[0] < 0 || a[0] >= rank || (a[1] != 1 && a[1] != -1))
            throw std::invalid_argument("word letters are [generator, +-1] pairs");
        w.push_back({a[0], a[1]});
    }
    return w;
}

Json graph_to_json(const WhiteheadGraph& g)
{
    Json edges = Json::array();
    for (const auto& [e, m] : g.edges())
        edges.push_back({{"a", g.vertex_name(e.first)}, {"b", g.vertex_name(e.second)}, {"multiplicity", m}});
    return {{"rank", g.rank()}, {"edges", edges}};
}

Json census_to_json(const FaceCensus& c)
{
    Json out = Json::object();
    for (const auto& [size, count] : c)
        out[std::to_string(size)] = count;
    return out;
}

Json bigint_to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Json order_to_json(const GroupOrder& o)
{
    if (o.infinite)
        return "INFINITE";
    return bigint_to_json(o.value);
}

Json scheme_to_json(const FacePairingScheme& s)
{
    Json j;
    j["schema"] = json_schema_version;
    j["rank"] = s.rank;
    j["vertices"] = s.vertices;
    Json arcs = Json::array();
    for (const auto& a : s.arcs)
        arcs.push_back({{"id", a.id},
                        {"tail", s.vertices.at(a.tail)},
                        {"head", s.vertices.at(a.head)},
                        {"label", a.label}});
    j["arcs"] = arcs;
    Json faces = Json::array();
    Json basepoints = Json::object();
    for (const auto& f : s.faces) {
        Json boundary = Json::array();
        for (const auto& side : f.boundary)
            boundary.push_back({side.arc, side.dir});
        faces.push_back({{"name", f.name}, {"relator", f.relator}, {"sign", f.sign}, {"boundary", boundary}});
        basepoints[f.name] = f.basepoint;
    }
    j["faces"] = faces;
    j["basepoints"] = basepoints;
    Json pairing = Json::array();
    for (std::size_t i = 0; i < s.pairing.size(); ++i) {
        Json arcs_map = Json::array();
        for (const auto& [a, b] : s.pairing[i])
            arcs_map.push_back({a, b});
        pairing.push_back({{"plus", face_name(static_cast<int>(i), 1)},
                           {"minus", face_name(static_cast<int>(i), -1)},
                           {"arcs", arcs_map}});
    }
    j["pairing"] = pairing;
    return j;
}

FacePairingScheme scheme_from_json(const Json& j)
{
    if (field<int>(j, "schema") != json_schema_version)
        throw std::invalid_argument("unsupported scheme schema version");
    FacePairingScheme s;
    s.rank = field<int>(j, "rank");
    s.vertices = field<std::vector<std::string>>(j, "vertices");
    auto vertex = [&](const std::string& name) {
        int v = s.vertex_index(name);
        if (v < 0)
            throw std::invalid_argument("unknown vertex '" + name + "'");
        return v;
    };
    for (const auto& a : field<Json>(j, "arcs")) {
        Arc arc;
        arc.id = field<int>(a, "id");
        arc.tail = vertex(field<std::string>(a, "tail"));
        arc.head = vertex(field<std::string>(a, "head"));
        arc.label = field<int>(a, "label");
        s.arcs.push_back(arc);
    }
    Json basepoints = j.contains("basepoints") ? j.at("basepoints") : Json::object();
    for (const auto& fj : field<Json>(j, "faces")) {
        Face f;
        f.name = field<std::string>(fj, "name");
        f.relator = field<int>(fj, "relator");
        f.sign = field<int>(fj, "sign");
        for (const auto& side : field<Json>(fj, "boundary")) {
            if (!side.is_array() || side.size() != 2)
                throw std::invalid_argument("boundary entries are [arc, dir] pairs");
            f.boundary.push_back({side[0].get<int>(), side[1].get<int>()});
        }
        f.basepoint = basepoints.contains(f.name) ? basepoints.at(f.name).get<int>() : 0;
        s.faces.push_back(std::move(f));
    }
    for (const auto& pj : field<Json>(j, "pairing")) {
        std::vector<std::pair<int, int>> row;
        for (const auto& e : field<Json>(pj, "arcs")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("pairing entries are [plus arc, minus arc] pairs");
            row.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        s.pairing.push_back(std::move(row));
    }
    return s;
}

Json report_to_json(const ValidationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"ok", r.ok()}, {"checks", checks}};
}

Json certificate_to_json(const FacePairingScheme& s, const ValidationReport& r, const OrbitResult& orbits,
                         const QuotientComplex& q)
{
    Json j;
    j["schema"] = json_schema_version;
    j["validation"] = report_to_json(r);
    j["cells"] = {{"V", q.V}, {"E", q.E}, {"F", q.F}, {"C", q.C}};
    j["chi"] = q.euler();
    Json cycles = Json::array();
    for (const auto& o : orbits.orbits) {
        Json faces = Json::array();
        for (int i : o.relators)
            faces.push_back(i);
        cycles.push_back({{"label", o.label}, {"arcs", o.arcs}, {"faces", faces}});
    }
    j["orbits"] = cycles;
    j["errors"] = q.errors;
    j["vertices"] = s.vertices.size();
    j["arcs"] = s.arcs.size();
    j["seifert_threlfall"] = r.ok() && q.errors.empty() && q.euler() == 0;
    j["pass"] = j["seifert_threlfall"];
    return j;
}

}  // namespace spine
