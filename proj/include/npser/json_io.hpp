#ifndef NPSER_JSON_IO_HPP
#define NPSER_JSON_IO_HPP

#include <npser/alexander.hpp>
#include <npser/diagram.hpp>
#include <npser/series.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace npser {

using json = nlohmann::json;

inline json to_json(const NewtonDiagram &d)
{
    json out;
    out["vertices"] = json::array();
    for (const auto &v : d.vertices) {
        out["vertices"].push_back({v.x, v.y});
    }
    out["edges"] = json::array();
    for (const auto &e : d.edges) {
        out["edges"].push_back({{"from", {e.v_from.x, e.v_from.y}},
                                {"to", {e.v_to.x, e.v_to.y}},
                                {"normal", {e.normal.lx, e.normal.ly}},
                                {"level", e.level},
                                {"length", e.length}});
    }
    return out;
}

/// Reads a diagram back; the edge list is reconstructed from the vertex
/// chain and checked against the stored one when present.
inline NewtonDiagram diagram_from_json(const json &j)
{
    std::vector<LatticePoint> vertices;
    for (const auto &v : j.at("vertices")) {
        vertices.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
    }
    if (vertices.empty()) {
        throw DiagramError("diagram JSON has no vertices");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].x < 0 || vertices[i].y < 0) {
            throw DiagramError("diagram vertex has a negative coordinate");
        }
        if (i > 0 && (vertices[i].x <= vertices[i - 1].x || vertices[i].y >= vertices[i - 1].y)) {
            throw DiagramError("diagram vertices must have strictly increasing kx and decreasing ky");
        }
    }
    NewtonDiagram d = detail::diagram_from_vertices(std::move(vertices));
    // convexity: slopes strictly increasing
    for (std::size_t i = 1; i < d.edges.size(); ++i) {
        const auto &a = d.edges[i - 1].direction;
        const auto &b = d.edges[i].direction;
        if (a.x * b.y - a.y * b.x <= 0) {
            throw DiagramError("diagram vertex chain is not convex");
        }
    }
    if (j.contains("edges") && to_json(d)["edges"] != j.at("edges")) {
        throw DiagramError("diagram JSON edge list inconsistent with vertices");
    }
    return d;
}

inline json to_json(const TruncatedSeries &s)
{
    json out;
    out["r"] = s.var_count();
    out["D"] = s.max_total_degree();
    out["terms"] = json::array();
    for (const auto &[e, c] : s.coeffs()) {
        out["terms"].push_back({{"e", e}, {"c", to_string(c)}});
    }
    return out;
}

inline TruncatedSeries series_from_json(const json &j)
{
    TruncatedSeries s(j.at("r").get<std::size_t>(), j.at("D").get<std::int64_t>());
    for (const auto &t : j.at("terms")) {
        ExponentVector e = t.at("e").get<ExponentVector>();
        if (e.size() != s.var_count()) {
            throw std::invalid_argument("series term has wrong exponent length");
        }
        s.add_term(e, rational_from_string(t.at("c").get<std::string>()));
    }
    return s;
}

inline json to_json(const BinomialProduct &b)
{
    return {{"num", b.numerator}, {"den", b.denominator}};
}

inline BinomialProduct binomial_from_json(const json &j)
{
    BinomialProduct b;
    b.numerator = j.at("num").get<std::vector<ExponentVector>>();
    b.denominator = j.at("den").get<std::vector<ExponentVector>>();
    return b;
}

inline json to_json(const CyclotomicMatrixForm &m)
{
    return {{"matrix", m.rows}};
}

inline CyclotomicMatrixForm matrix_from_json(const json &j)
{
    return {j.at("matrix").get<std::vector<std::vector<std::int64_t>>>()};
}

} // namespace npser

#endif
