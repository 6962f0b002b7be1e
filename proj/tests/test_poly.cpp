#include <npser/laurent.hpp>
#include <npser/parse.hpp>
#include <npser/random_gen.hpp>
#include <npser/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace npser;

namespace {

LaurentPoly1 p1(std::initializer_list<std::pair<std::int64_t, int>> terms)
{
    LaurentPoly1 p;
    for (const auto &[d, c] : terms) {
        p.add_term(d, Rational(c));
    }
    return p;
}

// plain one-variable long division, for polynomials with non-negative
// support; independent of laurent_division
std::pair<LaurentPoly1, LaurentPoly1> long_division(LaurentPoly1 p, const LaurentPoly1 &q)
{
    LaurentPoly1 quot;
    while (!p.is_zero() && p.deg_max() >= q.deg_max()) {
        const auto d = p.deg_max() - q.deg_max();
        const auto c = p.coeff(p.deg_max()) / q.coeff(q.deg_max());
        quot.add_term(d, c);
        p -= LaurentPoly1::monomial(d, c) * q;
    }
    return {quot, p};
}

} // namespace

TEST_CASE("parser: basic monomials")
{
    const auto p = parse_poly("x + y");
    REQUIRE(p.terms().size() == 2);
    CHECK(p.coeff({1, 0}) == 1);
    CHECK(p.coeff({0, 1}) == 1);
}

TEST_CASE("parser: the running example germ")
{
    const auto p = parse_poly("y^5 + x*y^2 + x^2*y + x^5");
    REQUIRE(p.terms().size() == 4);
    CHECK(p.coeff({0, 5}) == 1);
    CHECK(p.coeff({1, 2}) == 1);
    CHECK(p.coeff({2, 1}) == 1);
    CHECK(p.coeff({5, 0}) == 1);
}

TEST_CASE("parser: coefficients merge and cancel")
{
    const auto p = parse_poly("3/2*x^2*y - y^3 + y^3");
    REQUIRE(p.terms().size() == 1);
    CHECK(p.coeff({2, 1}) == Rational(3, 2));
}

TEST_CASE("parser: implicit multiplication and repeated variables")
{
    CHECK(parse_poly("2 x y x") == parse_poly("2*x^2*y"));
    CHECK(parse_poly("  y ^ 2+x^3 ") == parse_poly("x^3+y^2"));
}

TEST_CASE("parser: errors carry a position")
{
    CHECK_THROWS_AS(parse_poly("x +"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^z"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0*x"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
    CHECK_NOTHROW(parse_laurent("x^-1*y^2"));
    try {
        parse_poly("x + $");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("poly arithmetic")
{
    const auto xy = parse_poly("x+y");
    CHECK((xy - xy).is_zero());
    CHECK(parse_poly("x") * parse_poly("y") == LaurentPoly2::monomial({1, 1}, Rational(1)));
    CHECK(Rational(1, 2) * parse_poly("2*x") == parse_poly("x"));
}

TEST_CASE("poly ring axioms, spot checks")
{
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto a = rnd::random_poly(rng, 4, 4, true);
        const auto b = rnd::random_poly(rng, 4, 4, true);
        const auto c = rnd::random_poly(rng, 4, 4, true);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("laurent division: frozen examples")
{
    SECTION("z^3+1 by z^2-1 at window 0")
    {
        const auto [a, r] = laurent_division(p1({{3, 1}, {0, 1}}), p1({{2, 1}, {0, -1}}), 0);
        CHECK(a == p1({{1, 1}}));
        CHECK(r == p1({{1, 1}, {0, 1}}));
    }
    SECTION("exact divisibility: p = q")
    {
        const auto q = p1({{2, 3}, {-1, 1}});
        const auto [a, r] = laurent_division(q, q, -4);
        CHECK(a == p1({{0, 1}}));
        CHECK(r.is_zero());
    }
    SECTION("z^2+z+1 by z-1, matches classical long division")
    {
        const auto p = p1({{2, 1}, {1, 1}, {0, 1}});
        const auto q = p1({{1, 1}, {0, -1}});
        const auto [a, r] = laurent_division(p, q, 0);
        CHECK(a == p1({{1, 1}, {0, 2}}));
        CHECK(r == p1({{0, 3}}));
        const auto [la, lr] = long_division(p, q);
        CHECK(a == la);
        CHECK(r == lr);
    }
    SECTION("divisor zero")
    {
        CHECK_THROWS_AS(laurent_division(p1({{0, 1}}), LaurentPoly1(), 0), std::invalid_argument);
    }
}

TEST_CASE("laurent division: monomial divisor has an empty window")
{
    const auto p = p1({{2, 1}, {-1, 3}});
    const auto [a, r] = laurent_division(p, p1({{1, 2}}), 5);
    CHECK(r.is_zero());
    CHECK(p1({{1, 2}}) * a == p);
}

TEST_CASE("laurent division: randomized property suite")
{
    const SuiteResult res = suite_division(12345, 300);
    for (const auto &f : res.failures) {
        UNSCOPED_INFO(f);
    }
    CHECK(res.passed());
    CHECK(res.checked == 300);
}

TEST_CASE("string rendering round-trips through the parser")
{
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        const auto p = rnd::random_poly(rng, 5, 6, true);
        CHECK(parse_laurent(p.str()) == p);
    }
}
