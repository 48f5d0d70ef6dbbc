#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "spine/certify.hpp"
#include "spine/polyhedra.hpp"

using namespace spine;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(SPINE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed");
    Run r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

Json run_json(const std::string& args)
{
    Run r = run(args + " --json");
    REQUIRE(r.status == 0);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: family")
{
    Json j = run_json("family F:1,1,4");
    CHECK(j["schema"] == 1);
    CHECK(word_from_json(j["defining_word"]) == build_family(FamilySpec::F(1, 1, 4)).defining_word());
    CHECK(j["relators"].size() == 4);
    CHECK(run("family G:0,1,4,0").status == 2);
    CHECK(run("family Q:1").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("nonsense").status == 2);
}

TEST_CASE("cli: whitehead")
{
    Json j = run_json("whitehead F:1,1,6 --census");
    CHECK(j["planar"] == true);
    CHECK(j["pattern"] == "II.11");
    REQUIRE(j.contains("census"));
    CHECK(j["census"].size() >= 1);
    Json odd = run_json("whitehead F:1,1,5");
    CHECK(odd["planar"] == false);
    Run dot = run("whitehead H:3,4 --dot");
    CHECK(dot.status == 0);
    CHECK(dot.out.find("graph") != std::string::npos);
}

TEST_CASE("cli: abelian, resultant and lemma42")
{
    Json a = run_json("abelian G:2,1,4,0");
    CHECK(a["order_smith"] == 32);
    CHECK(a["order_resultant"] == 32);
    Json b = run_json("abelian H:2,4");
    CHECK(b["order_smith"] == "INFINITE");
    CHECK(b["agree"] == true);
    Json r = run_json("resultant --p 1,3,-1 --n 3");
    CHECK(r["resultant"] == 36);
    Json m = run_json("lemma42 2 1 4");
    CHECK(m["closed_form_f0_plus"] == 8);
    CHECK(m["closed_form_fhalf_plus"] == 4);
    CHECK(m["common_minus"] == 4);
    CHECK(m["consistent"] == true);
    Run bad = run("lemma42 2 3 4 --json");
    CHECK(bad.status == 1);
    CHECK(Json::parse(bad.out)["consistent"] == false);
    CHECK(run("lemma42 3 1 4").status == 2);
}

TEST_CASE("cli: scheme build and verify")
{
    auto dir = std::filesystem::temp_directory_path() / "spine_cli_test";
    std::filesystem::create_directories(dir);
    auto scheme = dir / "scheme.json";
    auto cert = dir / "certificate.json";
    REQUIRE(run("scheme build H:3,4 -o " + scheme.string()).status == 0);
    std::ifstream in(scheme);
    Json doc = Json::parse(in);
    CHECK(scheme_to_json(build_scheme(FamilySpec::H(3, 4))) == doc);

    Json v = run_json("scheme verify " + scheme.string() + " --family H:3,4 --certificate " + cert.string());
    CHECK(v["pass"] == true);
    std::ifstream cin(cert);
    Json c = Json::parse(cin);
    CHECK(c["cells"]["V"] == 1);
    CHECK(c["chi"] == 0);

    // faces that do not spell the claimed family
    CHECK(run("scheme verify " + scheme.string() + " --family H:2,5").status == 1);
    CHECK(run("scheme verify " + (dir / "missing.json").string() + " --family H:3,4").status == 2);
    CHECK(run("scheme build G:2,3,6,0").status == 2);
}

TEST_CASE("cli: heegaard and enumerate")
{
    Json h = run_json("heegaard 3 4");
    REQUIRE(h.contains("quotient"));
    CHECK(h["canonical_lens"] == true);
    Json e = run_json("enumerate G:1,2,4,0");
    CHECK(e["order"] == 17);
    Json x = run_json("enumerate G:1,2,4,0 --extension");
    CHECK(x["order"] == 68);
    Json capped = run_json("enumerate G:3,1,3,0 --max-cosets 50");
    CHECK(capped["order"] == "EXCEEDED");
    CHECK(run("enumerate G:1,2,4,0 --strategy bogus").status == 2);
}

TEST_CASE("cli: certify and sweep")
{
    Json j = run_json("certify 1 1 6 0");
    CHECK(j == certify(1, 1, 6, 0).to_json());
    CHECK(run("certify 4 1 4 1").status == 0);
    CHECK(run("certify 1 1 12 8").status == 1);
    CHECK(run("certify 1 1 6 6").status == 2);
    Run s = run("sweep --k 2 --l 1 --n 4:6");
    CHECK(s.status == 0);
    CHECK(s.out.rfind(sweep_csv_header(), 0) == 0);
}
