#include <doctest.h>

#include <stdexcept>

#include "spine/presentation.hpp"

using namespace spine;

TEST_CASE("relators are the shifts of the defining word")
{
    auto rs = relators(build_family(FamilySpec::H(2, 3)));
    REQUIRE(rs.size() == 3);
    CHECK(rs[0] == parse_word("x0 x1", 3));
    CHECK(rs[1] == parse_word("x1 x2", 3));
    CHECK(rs[2] == parse_word("x2 x0", 3));

    auto one = relators(CyclicPresentation(parse_word("x0^2", 1)));
    CHECK(one.size() == 1);

    auto fib = relators(build_family(FamilySpec::F(1, 1, 4)));
    REQUIRE(fib.size() == 4);
    CHECK(fib[3] == parse_word("x3 x0 x1^-1", 4));
}

TEST_CASE("family words")
{
    // (y0 yf)(y_{2f+1} ... y_{6f+1})(y2 y_{2+f})^-1
    for (int f : {0, 2, 4}) {
        const int n = 12;
        Word expect(n);
        for (int g : {0, f})
            expect.push_back({g, 1});
        for (int j = 2; j <= 6; ++j)
            expect.push_back({(j * f + 1) % n, 1});
        expect.push_back({2 + f, -1});
        expect.push_back({2, -1});
        CHECK(build_family(FamilySpec::G(5, 2, n, f)).defining_word() == expect);
    }
    CHECK(build_family(FamilySpec::F(1, 3, 6)).defining_word() == parse_word("x0^3 x1 x2^-3", 6));
    CHECK(build_family(FamilySpec::H(1, 5)).defining_word() == parse_word("x0", 5));
    CHECK(build_family(FamilySpec::H(4, 7)).defining_word() == parse_word("x0 x1 x2 x3", 7));
}

TEST_CASE("F is G with f = 0")
{
    for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l)
            for (int n = 2; n <= 12; ++n)
                CHECK(build_family(FamilySpec::F(k, l, n)).defining_word() ==
                      build_family(FamilySpec::G(k, l, n, 0)).defining_word());
}

TEST_CASE("family spec parsing")
{
    CHECK(parse_family("H:3,4") == FamilySpec::H(3, 4));
    CHECK(parse_family("G:5,2,12,0") == FamilySpec::G(5, 2, 12, 0));
    CHECK(parse_family("F:1,1,6") == FamilySpec::F(1, 1, 6));
    CHECK(parse_family("G:2,1,4,2").str() == "G:2,1,4,2");
    CHECK_THROWS_AS(parse_family("G:0,1,4,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("G:1,1,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("G:1,1,4,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("Q:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("H:3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("H3,4"), std::invalid_argument);
}

TEST_CASE("shift extension relators")
{
    auto e = shift_extension(1, 1, 4, 0);
    REQUIRE(e.relators.size() == 2);
    CHECK(e.relators[0] == parse_word("x1^4", 2));
    CHECK(format_xt(e.relators[1]) == "x t x t x^-1 t^-2");

    auto e2 = shift_extension(2, 1, 4, 2);
    CHECK(format_xt(e2.relators[1]) == "x t x^2 t^-3 x^-1 t^-2");

    for (int k = 1; k <= 4; ++k)
        for (int n = 2; n <= 8; ++n)
            for (int f = 0; f < n; ++f) {
                if ((f * k) % n != 0)
                    continue;
                auto ev = exponent_vector(shift_extension(k, 1, n, f).relators[1]);
                CHECK(mod(ev[gen_t] + static_cast<long>(f) * ev[gen_x], n) == 0);
            }
}

TEST_CASE("kernel rewriting: frozen examples")
{
    CyclicPresentation a = rewrite_kernel(shift_extension(1, 1, 4, 0), 0);
    CHECK(a.defining_word() == parse_word("x0 x1 x2^-1", 4));

    CyclicPresentation b = rewrite_kernel(shift_extension(2, 1, 4, 2), 2);
    CHECK(equivalent(b, CyclicPresentation(parse_word("x0 x3 x1 x2^-1", 4))));

    // x -> t^1 does not kill the f = 0 extension relator
    CHECK_THROWS_AS(rewrite_kernel(shift_extension(2, 1, 4, 0), 1), std::invalid_argument);
    CHECK_NOTHROW(rewrite_kernel(shift_extension(2, 1, 4, 1), 1));
}

TEST_CASE("property: kernel rewriting recovers the family on the grid")
{
    int checked = 0;
    for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l)
            for (int n = 2; n <= 12; ++n)
                for (int f = 0; f < n; ++f) {
                    if ((f * k) % n != 0)
                        continue;
                    auto got = rewrite_kernel(shift_extension(k, l, n, f), f);
                    auto want = build_family(FamilySpec::G(k, l, n, f));
                    CHECK_MESSAGE(equivalent(got, want), "G(" << k << "," << l << "," << n << "," << f << ")");
                    ++checked;
                }
    CHECK(checked > 400);
}

TEST_CASE("equivalence is not trivial")
{
    CHECK_FALSE(equivalent(build_family(FamilySpec::G(2, 1, 4, 0)), build_family(FamilySpec::G(2, 1, 4, 2))));
    CHECK(equivalent(build_family(FamilySpec::H(3, 5)), CyclicPresentation(parse_word("x2 x3 x4", 5))));
}
