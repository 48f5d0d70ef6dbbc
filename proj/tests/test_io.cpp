#include <doctest.h>

#include <stdexcept>

#include "spine/io.hpp"
#include "spine/polyhedra.hpp"

using namespace spine;

TEST_CASE("word json round trip")
{
    Word w = parse_word("x0^2 x3^-1 x1", 4);
    Json j = word_to_json(w);
    CHECK(j["rank"] == 4);
    CHECK(j["word"].size() == 4);
    CHECK(j["word"][2] == Json::array({3, -1}));
    CHECK(word_from_json(j) == w);
    CHECK(word_from_json(Json::parse(j.dump())) == w);

    CHECK_THROWS_AS(word_from_json(Json::parse(R"({"rank": 3})")), std::invalid_argument);
    CHECK_THROWS_AS(word_from_json(Json::parse(R"({"rank": 3, "word": [[5, 1]]})")), std::invalid_argument);
    CHECK_THROWS_AS(word_from_json(Json::parse(R"({"rank": 3, "word": [[0, 2]]})")), std::invalid_argument);
    CHECK_THROWS_AS(word_from_json(Json::parse(R"([1, 2])")), std::invalid_argument);
}

TEST_CASE("scheme json round trip")
{
    for (const auto& spec : {FamilySpec::H(3, 4), FamilySpec::G(1, 1, 6, 0), FamilySpec::G(2, 1, 4, 2),
                             FamilySpec::G(5, 2, 10, 0)}) {
        FacePairingScheme s = build_scheme(spec);
        Json j = scheme_to_json(s);
        CHECK(j["schema"] == json_schema_version);
        CHECK(j["vertices"].size() == s.vertices.size());
        FacePairingScheme t = scheme_from_json(Json::parse(j.dump(2)));
        CHECK(t.rank == s.rank);
        CHECK(t.vertices == s.vertices);
        REQUIRE(t.arcs.size() == s.arcs.size());
        for (std::size_t a = 0; a < s.arcs.size(); ++a) {
            CHECK(t.arcs[a].tail == s.arcs[a].tail);
            CHECK(t.arcs[a].head == s.arcs[a].head);
            CHECK(t.arcs[a].label == s.arcs[a].label);
        }
        REQUIRE(t.faces.size() == s.faces.size());
        for (std::size_t f = 0; f < s.faces.size(); ++f) {
            CHECK(t.faces[f].name == s.faces[f].name);
            CHECK(t.faces[f].boundary == s.faces[f].boundary);
            CHECK(t.faces[f].basepoint == s.faces[f].basepoint);
        }
        CHECK(t.pairing == s.pairing);
        CHECK(validate_scheme(t, build_family(spec)).ok());
        CHECK(scheme_to_json(t) == j);
    }
}

TEST_CASE("malformed scheme documents are rejected")
{
    Json good = scheme_to_json(build_scheme(FamilySpec::H(3, 4)));
    Json j = good;
    j.erase("arcs");
    CHECK_THROWS_AS(scheme_from_json(j), std::invalid_argument);
    j = good;
    j["arcs"][0]["tail"] = "nowhere";
    CHECK_THROWS_AS(scheme_from_json(j), std::invalid_argument);
    j = good;
    j["schema"] = 99;
    CHECK_THROWS_AS(scheme_from_json(j), std::invalid_argument);
    CHECK_THROWS_AS(scheme_from_json(Json::parse("[]")), std::invalid_argument);
}

TEST_CASE("certificate fields")
{
    FacePairingScheme s = build_scheme(FamilySpec::G(1, 1, 6, 0));
    ValidationReport r = validate_scheme(s, build_family(FamilySpec::G(1, 1, 6, 0)));
    OrbitResult o = edge_orbits(s);
    QuotientComplex q = quotient(s);
    Json c = certificate_to_json(s, r, o, q);
    CHECK(c["schema"] == 1);
    CHECK(c["cells"]["V"] == 1);
    CHECK(c["cells"]["E"] == 6);
    CHECK(c["cells"]["F"] == 6);
    CHECK(c["cells"]["C"] == 1);
    CHECK(c["chi"] == 0);
    CHECK(c["orbits"].size() == 6);
    CHECK(c["seifert_threlfall"] == true);
    CHECK(c["pass"] == true);
    CHECK(c["errors"].empty());

    Json rep = report_to_json(r);
    CHECK(rep.dump().find("sphere") != std::string::npos);
}

TEST_CASE("orders and big integers")
{
    CHECK(order_to_json(GroupOrder::infinity()) == "INFINITE");
    CHECK(order_to_json(GroupOrder::finite(BigInt(36))) == 36);
    BigInt big = pow(BigInt(10), 30);
    Json j = bigint_to_json(big);
    CHECK(j.dump().find("1000000000000000000000000000000") != std::string::npos);
}
