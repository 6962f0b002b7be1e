#include <npser/parse.hpp>
#include <npser/random_gen.hpp>
#include <npser/series.hpp>
#include <npser/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace npser;

namespace {

TruncatedSeries one_var(std::initializer_list<std::int64_t> exponents, std::int64_t d)
{
    TruncatedSeries s(1, d);
    for (const auto e : exponents) {
        s.add_term({e}, Rational(1));
    }
    return s;
}

// brute-force membership in the numerical semigroup generated by the gens
std::set<std::int64_t> semigroup_elements(std::initializer_list<std::int64_t> gens,
                                          std::int64_t bound)
{
    std::set<std::int64_t> out{0};
    for (;;) {
        const auto before = out.size();
        for (const auto e : std::set<std::int64_t>(out)) {
            for (const auto g : gens) {
                if (e + g <= bound) {
                    out.insert(e + g);
                }
            }
        }
        if (out.size() == before) {
            return out;
        }
    }
}

} // namespace

TEST_CASE("closed form of small diagrams")
{
    SECTION("x+y collapses to a geometric series")
    {
        const BinomialProduct p = poincare_closed_form(diagram_of(parse_poly("x+y")));
        CHECK(p.numerator == std::vector<ExponentVector>{{1}});
        CHECK(p.denominator == std::vector<ExponentVector>{{1}, {1}});
        const BinomialProduct s = p.simplified();
        CHECK(s.numerator.empty());
        CHECK(s.denominator == std::vector<ExponentVector>{{1}});
    }
    SECTION("cusp")
    {
        const BinomialProduct p = poincare_closed_form(diagram_of(parse_poly("y^2+x^3")));
        CHECK(p.numerator == std::vector<ExponentVector>{{6}});
        CHECK(p.denominator == std::vector<ExponentVector>{{2}, {3}});
    }
    SECTION("running example simplifies to 1 - t1 t2 t3")
    {
        const BinomialProduct p =
            poincare_closed_form(diagram_of(parse_poly("y^5+x*y^2+x^2*y+x^5")));
        CHECK(p.numerator
              == std::vector<ExponentVector>{{3, 1, 1}, {1, 1, 1}, {1, 1, 3}});
        CHECK(p.denominator == std::vector<ExponentVector>{{3, 1, 1}, {1, 1, 3}});
        const BinomialProduct s = p.simplified();
        CHECK(s.numerator == std::vector<ExponentVector>{{1, 1, 1}});
        CHECK(s.denominator.empty());
    }
}

TEST_CASE("expand")
{
    SECTION("geometric series")
    {
        BinomialProduct b;
        b.denominator = {{1}};
        CHECK(series_equal(expand(b, 3), one_var({0, 1, 2, 3}, 3)));
    }
    SECTION("cusp semigroup <2,3>")
    {
        BinomialProduct b;
        b.numerator = {{6}};
        b.denominator = {{2}, {3}};
        const TruncatedSeries s = expand(b, 8);
        TruncatedSeries expected(1, 8);
        for (const auto e : semigroup_elements({2, 3}, 8)) {
            expected.add_term({e}, Rational(1));
        }
        CHECK(series_equal(s, expected));
    }
    SECTION("two variables")
    {
        BinomialProduct b;
        b.numerator = {{1, 1}};
        b.denominator = {{1, 0}, {0, 1}};
        TruncatedSeries expected(2, 2);
        for (const ExponentVector &e :
             {ExponentVector{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}}) {
            expected.add_term(e, Rational(1));
        }
        CHECK(series_equal(expand(b, 2), expected));
    }
    SECTION("zero denominator vector is rejected")
    {
        BinomialProduct b;
        b.denominator = {{0, 0}};
        CHECK_THROWS_AS(expand(b, 3), std::invalid_argument);
    }
}

TEST_CASE("enumeration oracle")
{
    SECTION("x+y telescopes")
    {
        const NewtonDiagram d = diagram_of(parse_poly("x+y"));
        CHECK(series_equal(enumeration_oracle(d, 3), one_var({0, 1, 2, 3}, 3)));
    }
    SECTION("cusp matches the closed form")
    {
        const NewtonDiagram d = diagram_of(parse_poly("y^2+x^3"));
        CHECK(series_equal(enumeration_oracle(d, 8), expand(poincare_closed_form(d), 8)));
    }
    SECTION("running example matches 1 - t1 t2 t3")
    {
        const NewtonDiagram d = diagram_of(parse_poly("y^5+x*y^2+x^2*y+x^5"));
        BinomialProduct simple;
        simple.numerator = {{1, 1, 1}};
        CHECK(series_equal(enumeration_oracle(d, 10), expand(simple, 10)));
    }
}

TEST_CASE("series_equal")
{
    const TruncatedSeries a = one_var({0, 2}, 4);
    CHECK(series_equal(a, a));
    BinomialProduct geo;
    geo.denominator = {{1}};
    CHECK(series_equal(expand(geo, 2), one_var({0, 1, 2}, 2)));
    BinomialProduct frac;
    frac.numerator = {{2}};
    frac.denominator = {{1}};
    CHECK(series_equal(expand(frac, 5), one_var({0, 1}, 5)));
    CHECK_THROWS_AS(series_equal(one_var({0}, 3), one_var({0}, 4)), std::invalid_argument);
    CHECK_THROWS_AS(series_equal(TruncatedSeries(1, 3), TruncatedSeries(2, 3)),
                    std::invalid_argument);
}

TEST_CASE("closed form vs enumeration on random diagrams")
{
    const SuiteResult res = suite_identity(2024, 10, 16);
    for (const auto &f : res.failures) {
        UNSCOPED_INFO(f);
    }
    CHECK(res.passed());
}

TEST_CASE("expansion invariants on random diagrams")
{
    Rng rng(314);
    for (int it = 0; it < 10; ++it) {
        const NewtonDiagram d = rnd::random_diagram(rng);
        const TruncatedSeries s = expand(poincare_closed_form(d), 14);
        // constant term 1, all coefficients integral
        CHECK(s.coeff(ExponentVector(d.facet_count(), 0)) == 1);
        for (const auto &[e, c] : s.coeffs()) {
            CHECK(denominator(c) == 1);
        }
        // specializing t_i -> t commutes with expansion
        BinomialProduct collapsed;
        for (const auto &n : poincare_closed_form(d).numerator) {
            collapsed.numerator.push_back({total_degree(n)});
        }
        for (const auto &v : poincare_closed_form(d).denominator) {
            collapsed.denominator.push_back({total_degree(v)});
        }
        CHECK(series_equal(expand(collapsed, 14), s.specialized()));
        // truncation consistency
        CHECK(series_equal(expand(poincare_closed_form(d), 9), s.truncated(9)));
    }
}
