#include <npser/json_io.hpp>
#include <npser/parse.hpp>
#include <npser/random_gen.hpp>
#include <npser/series.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace npser;

TEST_CASE("diagram JSON round trip")
{
    Rng rng(8);
    for (int i = 0; i < 25; ++i) {
        const NewtonDiagram d = rnd::random_diagram(rng);
        const NewtonDiagram back = diagram_from_json(to_json(d));
        CHECK(back.vertices == d.vertices);
        CHECK(to_json(back) == to_json(d));
    }
}

TEST_CASE("diagram JSON validation")
{
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"vertices":[]})")), DiagramError);
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"vertices":[[0,2],[1,3]]})")), DiagramError);
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"vertices":[[0,-1],[1,-2]]})")), DiagramError);
    // reflex chain
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"vertices":[[0,4],[1,3],[2,0]]})")),
                    DiagramError);
    // plain vertex list is accepted, edges are rebuilt
    const NewtonDiagram d = diagram_from_json(json::parse(R"({"vertices":[[0,2],[3,0]]})"));
    REQUIRE(d.facet_count() == 1);
    CHECK(d.edges[0].normal == LinearForm{2, 3});
}

TEST_CASE("series JSON round trip")
{
    const NewtonDiagram d = diagram_of(parse_poly("y^2+x^3"));
    const TruncatedSeries s = expand(poincare_closed_form(d), 9);
    const TruncatedSeries back = series_from_json(to_json(s));
    CHECK(series_equal(s, back));

    TruncatedSeries frac(2, 5);
    frac.add_term({1, 2}, Rational(-7, 3));
    CHECK(series_equal(series_from_json(to_json(frac)), frac));
}

TEST_CASE("binomial and matrix JSON round trips")
{
    const NewtonDiagram d = diagram_of(parse_poly("y^5+x*y^2+x^2*y+x^5"));
    const BinomialProduct p = poincare_closed_form(d);
    const BinomialProduct back = binomial_from_json(to_json(p));
    CHECK(back.numerator == p.numerator);
    CHECK(back.denominator == p.denominator);

    const CyclotomicMatrixForm m = reduced_poincare(d);
    CHECK(matrix_from_json(to_json(m)) == m);
}
