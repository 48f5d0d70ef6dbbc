#include <doctest.h>

#include <stdexcept>

#include <cstdlib>
#include <numeric>

#include "spine/enumeration.hpp"
#include "spine/homology.hpp"

using namespace spine;

namespace {

EnumerationOptions capped(long cap, Strategy s = Strategy::HltThenFelsch)
{
    EnumerationOptions o;
    o.max_cosets = cap;
    o.strategy = s;
    return o;
}

}  // namespace

TEST_CASE("small groups")
{
    // <x | x^5>, S3 as <a, b | a^2, b^3, (ab)^2>
    CHECK(coset_enumerate({parse_word("x0^5", 1)}, 1, capped(100)).order == 5);
    std::vector<Word> s3{parse_word("x0^2", 2), parse_word("x1^3", 2), parse_word("x0 x1 x0 x1", 2)};
    for (Strategy s : {Strategy::Hlt, Strategy::Felsch, Strategy::HltThenFelsch}) {
        EnumerationResult r = coset_enumerate(s3, 2, capped(1000, s));
        CHECK(r.finite());
        CHECK(r.order == 6);
    }
    // quaternion group as F(2,3)
    CHECK(order_of(build_family(FamilySpec::F(1, 1, 3)), capped(1000)).order == 8);
}

TEST_CASE("closed tables")
{
    CosetTable t(2, {parse_word("x0^2", 2), parse_word("x1^3", 2), parse_word("x0 x1 x0 x1", 2)}, capped(1000));
    EnumerationResult r = t.run();
    REQUIRE(r.finite());
    CHECK(t.rows() == 6);
    CHECK(t.is_closed());
}

TEST_CASE("frozen orders")
{
    CHECK(order_of(build_family(FamilySpec::G(3, 1, 3, 0)), capped(200000)).order == 3528);
    CHECK(order_of(build_family(FamilySpec::G(3, 1, 3, 1)), capped(200000)).order == 3528);
    CHECK(order_of(shift_extension(3, 1, 3, 0), capped(200000)).order == 3 * 3528);
    for (long l = 1; l <= 3; ++l)
        CHECK(order_of(build_family(FamilySpec::F(1, static_cast<int>(l), 4)), capped(200000)).order ==
              4 * l * l + 1);
}

TEST_CASE("H(r,n) is cyclic of order r when gcd(r,n) = 1")
{
    for (int r = 2; r <= 7; ++r)
        for (int n = 2; n <= 7; ++n) {
            EnumerationResult e = order_of(build_family(FamilySpec::H(r, n)), capped(50000));
            if (std::gcd(r, n) == 1) {
                CHECK(e.finite());
                CHECK(e.order == r);
            } else {
                CHECK_FALSE(e.finite());
            }
        }
}

TEST_CASE("cap is honoured")
{
    EnumerationResult r = order_of(build_family(FamilySpec::H(2, 4)), capped(500));
    CHECK_FALSE(r.finite());
    CHECK(r.max_live <= 500);
    CHECK(r.str().find("EXCEEDED") == 0);
    CHECK_THROWS_AS(CosetTable(1, {parse_word("x0", 1)}, capped(0)), std::invalid_argument);
    CHECK_THROWS_AS(CosetTable(2, {parse_word("x0 x0^-1", 2)}, capped(10)), std::invalid_argument);
}

TEST_CASE("cap from the environment")
{
    setenv("SPINE_MAX_COSETS", "1234", 1);
    CHECK(default_max_cosets() == 1234);
    setenv("SPINE_MAX_COSETS", "junk", 1);
    CHECK(default_max_cosets() == 200000);
    unsetenv("SPINE_MAX_COSETS");
    CHECK(default_options().max_cosets == 200000);
}

TEST_CASE("property: finite orders are multiples of the abelianization order")
{
    int finite = 0;
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
            for (int n = 2; n <= 6; ++n)
                for (int f = 0; f < n; ++f) {
                    CyclicPresentation p = build_family(FamilySpec::G(k, l, n, f));
                    EnumerationResult e = order_of(p, capped(20000, Strategy::Hlt));
                    if (!e.finite())
                        continue;
                    ++finite;
                    GroupOrder ab = abelianization_order(p);
                    REQUIRE_FALSE(ab.infinite);
                    CHECK(BigInt(e.order) % ab.value == 0);
                }
    CHECK(finite > 10);
}

TEST_CASE("property: order is invariant under rotation and shift of relators")
{
    for (const auto& s : {FamilySpec::G(3, 1, 3, 0), FamilySpec::F(1, 2, 4), FamilySpec::H(3, 5),
                          FamilySpec::F(1, 1, 3)}) {
        CyclicPresentation p = build_family(s);
        long base = order_of(p, capped(200000)).order;
        REQUIRE(base > 0);
        auto rs = relators(p);
        for (std::size_t k = 0; k < p.defining_word().size(); ++k) {
            std::vector<Word> rotated;
            for (std::size_t i = 0; i < rs.size(); ++i)
                rotated.push_back(rotate(rs[i], (k + i) % rs[i].size()));
            CHECK(coset_enumerate(rotated, p.rank(), capped(200000)).order == base);
        }
        for (int sh = 1; sh < p.rank(); ++sh) {
            std::vector<Word> shifted;
            for (const auto& r : rs)
                shifted.push_back(shift(r, sh));
            CHECK(coset_enumerate(shifted, p.rank(), capped(200000)).order == base);
        }
    }
}

TEST_CASE("property: enumeration is deterministic")
{
    auto run = [] {
        std::vector<std::string> lines;
        EnumerationOptions o = capped(5000);
        o.trace = [&](const std::string& s) { lines.push_back(s); };
        EnumerationResult r = order_of(build_family(FamilySpec::F(1, 2, 4)), o);
        return std::make_pair(r.order, lines);
    };
    auto a = run();
    auto b = run();
    CHECK(a.first == 17);
    CHECK(a.second == b.second);
    CHECK_FALSE(a.second.empty());
}

TEST_CASE("order independence")
{
    OrderIndependence r = verify_order_independence(3, 1, 3, 0, 1, 200000);
    CHECK(r.verdict == OrderComparison::Equal);
    CHECK(r.passed());
    OrderIndependence inf = verify_order_independence(2, 1, 4, 0, 2, 2000);
    CHECK(inf.verdict == OrderComparison::Inconclusive);
    CHECK_FALSE(inf.passed());
    CHECK_THROWS_AS(verify_order_independence(2, 1, 4, 0, 1, 100), std::invalid_argument);
}
