#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "spine/certify.hpp"

using namespace spine;

namespace {

StageStatus status_of(const CertifyReport& r, const std::string& name)
{
    const Stage* s = r.stage(name);
    REQUIRE(s != nullptr);
    return s->status;
}

}  // namespace

TEST_CASE("certify a spine")
{
    CertifyReport r = certify(1, 1, 6, 0);
    CHECK(r.verdict == "spine");
    CHECK(r.passed());
    CHECK(r.exit_code() == 0);
    CHECK(status_of(r, "planarity") == StageStatus::Pass);
    CHECK(r.stage("pattern")->detail.find("II.11") != std::string::npos);
    CHECK(status_of(r, "scheme") == StageStatus::Pass);
    CHECK(r.stage("seifert_threlfall")->detail.find("chi = 0") != std::string::npos);
    CHECK(status_of(r, "odd_f_obstruction") == StageStatus::Skipped);
    CHECK(r.stage("enumeration") == nullptr);

    CertifyReport g = certify(5, 2, 12, 0);
    CHECK(g.verdict == "spine");
    CHECK(g.stage("pattern")->detail.find("II.7") != std::string::npos);
}

TEST_CASE("certify a non-spine")
{
    CertifyReport r = certify(4, 1, 4, 1);
    CHECK(r.verdict == "not a spine");
    CHECK(r.passed());
    CHECK(status_of(r, "scheme") == StageStatus::Skipped);
    CHECK(status_of(r, "odd_f_obstruction") == StageStatus::Pass);
    CHECK(r.stage("odd_f_obstruction")->detail == "duplicated face F_2^-");

    CertifyReport odd = certify(1, 1, 5, 0);
    CHECK(odd.verdict == "not a spine");
    CHECK(odd.stage("planarity")->detail.rfind("non-planar", 0) == 0);
}

TEST_CASE("points outside the theorem")
{
    CertifyReport r = certify(2, 1, 4, 1);  // fk = 2
    CHECK(r.verdict == "outside theorem scope");
    CHECK(r.passed());
    CHECK(r.stage("spine_decision")->detail.rfind("outside theorem scope", 0) == 0);

    CertifyReport small = certify(3, 1, 3, 0);
    CHECK(small.stage("planarity")->detail.find("criterion needs n >= 4") != std::string::npos);
    CHECK(small.verdict == "outside theorem scope");
}

TEST_CASE("planarity disagreements fail the stage")
{
    CertifyReport r = certify(1, 1, 12, 8);
    CHECK(status_of(r, "planarity") == StageStatus::Fail);
    CHECK(r.verdict == "FAIL");
    CHECK(r.exit_code() == 1);
}

TEST_CASE("enumeration stage")
{
    CertifyOptions opt;
    opt.enumerate = true;
    CertifyReport r = certify(1, 2, 4, 0, opt);
    CHECK(status_of(r, "enumeration") == StageStatus::Pass);
    CHECK(r.stage("enumeration")->detail == "order 17");

    opt.max_cosets = 50;
    CertifyReport capped = certify(3, 1, 3, 0, opt);
    CHECK(status_of(capped, "enumeration") == StageStatus::Skipped);
    CHECK(capped.stage("enumeration")->detail == "cap of 50 cosets reached");
}

TEST_CASE("invalid parameters")
{
    CHECK_THROWS_AS(certify(0, 1, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(certify(1, 1, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(certify(1, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("report json")
{
    Json j = certify(1, 1, 6, 0).to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["parameters"]["n"] == 6);
    CHECK(j["verdict"] == "spine");
    CHECK(j["pass"] == true);
    CHECK(j["stages"].size() == 7);
    CHECK(j["stages"][0]["name"] == "planarity");
}

TEST_CASE("sweep csv")
{
    std::ostringstream out;
    SweepRange range;
    range.k_min = 1;
    range.k_max = 2;
    range.l_min = 1;
    range.l_max = 1;
    range.n_min = 4;
    range.n_max = 6;
    long failed = sweep(range, {}, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == sweep_csv_header());
    long rows = 0, fails = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.ends_with(",FAIL"))
            ++fails;
    }
    CHECK(rows == 2 * (4 + 5 + 6));
    CHECK(fails == failed);
    // (1,1,4,1), (1,1,4,3), (1,1,5,1), (1,1,5,3), (1,1,5,4), (1,1,6,1), (1,1,6,3), (1,1,6,4), (1,1,6,5)
    CHECK(failed == 9);
    CHECK(sweep_csv_row(certify(1, 1, 6, 0)) == "1,1,6,0,pass,pass,pass,pass,pass,pass,skipped,skipped,spine");
}
