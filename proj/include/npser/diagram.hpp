#ifndef NPSER_DIAGRAM_HPP
#define NPSER_DIAGRAM_HPP

#include <npser/laurent.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace npser {

/// Primitive linear form l(k) = lx*kx + ly*ky with positive integer
/// coefficients, gcd(lx, ly) = 1. Normal form of a diagram facet.
struct LinearForm {
    std::int64_t lx = 1;
    std::int64_t ly = 1;

    std::int64_t operator()(const LatticePoint &k) const { return lx * k.x + ly * k.y; }

    friend auto operator<=>(const LinearForm &, const LinearForm &) = default;
};

/// A facet of a Newton diagram, oriented with increasing kx.
struct Edge {
    LatticePoint v_from;       // endpoint with the smaller kx
    LatticePoint v_to;         // endpoint with the larger kx
    LinearForm normal;         // primitive positive normal l_i
    std::int64_t level = 0;    // c_i = normal(v_from) = normal(v_to)
    std::int64_t length = 1;   // integer length s_i = gcd(|dx|, |dy|)
    LatticePoint direction;    // primitive, dx > 0, dy < 0; v_to = v_from + length*direction
};

/// Lower-left lattice staircase: vertices with kx strictly increasing and ky
/// strictly decreasing, consecutive vertices joined by edges of strictly
/// increasing slope. A single vertex (a monomial) has zero edges.
struct NewtonDiagram {
    std::vector<LatticePoint> vertices;
    std::vector<Edge> edges;

    std::size_t facet_count() const { return edges.size(); }
};

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Distinct error for operations that need at least one facet.
struct NoFacetsError : DiagramError {
    NoFacetsError() : DiagramError("diagram has no facets (input is a monomial)") {}
};

namespace detail {

inline Edge make_edge(const LatticePoint &a, const LatticePoint &b)
{
    Edge e;
    e.v_from = a;
    e.v_to = b;
    const std::int64_t dx = b.x - a.x;
    const std::int64_t dy = b.y - a.y; // dy < 0
    e.length = std::gcd(dx, -dy);
    e.direction = {dx / e.length, dy / e.length};
    // normal (-dy, dx) reduced; already primitive since direction is
    e.normal = {-e.direction.y, e.direction.x};
    e.level = e.normal(a);
    return e;
}

/// Rebuilds the edge list from an already-valid vertex chain.
inline NewtonDiagram diagram_from_vertices(std::vector<LatticePoint> vertices)
{
    NewtonDiagram d;
    d.vertices = std::move(vertices);
    for (std::size_t i = 0; i + 1 < d.vertices.size(); ++i) {
        d.edges.push_back(make_edge(d.vertices[i], d.vertices[i + 1]));
    }
    return d;
}

} // namespace detail

/// Newton diagram of a non-zero germ with non-negative exponents: the compact
/// faces of the convex hull of the union of quadrants k + R^2_{>=0} over the
/// support.
inline NewtonDiagram diagram_of(const LaurentPoly2 &g)
{
    if (g.is_zero()) {
        throw DiagramError("diagram of the zero germ is undefined");
    }
    if (g.has_negative_exponent()) {
        throw DiagramError("germ has a negative exponent");
    }

    // Minimal ky per kx, then drop dominated points (ky must strictly
    // decrease along increasing kx).
    std::map<std::int64_t, std::int64_t> min_y;
    for (const auto &[k, c] : g.terms()) {
        auto [it, inserted] = min_y.emplace(k.x, k.y);
        if (!inserted) {
            it->second = std::min(it->second, k.y);
        }
    }
    std::vector<LatticePoint> staircase;
    for (const auto &[x, y] : min_y) {
        if (staircase.empty() || y < staircase.back().y) {
            staircase.push_back({x, y});
        }
    }

    // Lower convex hull; collinear interior points are not vertices.
    std::vector<LatticePoint> hull;
    for (const auto &p : staircase) {
        while (hull.size() >= 2) {
            const LatticePoint &a = hull[hull.size() - 2];
            const LatticePoint &b = hull[hull.size() - 1];
            const std::int64_t cross =
                (b.x - a.x) * (p.y - b.y) - (b.y - a.y) * (p.x - b.x);
            if (cross <= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(p);
    }

    return detail::diagram_from_vertices(std::move(hull));
}

/// Normals and levels of all facets; requires at least one facet.
inline std::vector<std::pair<LinearForm, std::int64_t>> facet_normals(const NewtonDiagram &d)
{
    if (d.edges.empty()) {
        throw NoFacetsError();
    }
    std::vector<std::pair<LinearForm, std::int64_t>> out;
    out.reserve(d.edges.size());
    for (const auto &e : d.edges) {
        out.emplace_back(e.normal, e.level);
    }
    return out;
}

/// min of the linear form over a diagram; attained at a vertex.
inline std::int64_t u_of_diagram(const LinearForm &l, const NewtonDiagram &d)
{
    if (d.vertices.empty()) {
        throw DiagramError("empty diagram");
    }
    std::int64_t best = l(d.vertices.front());
    for (const auto &v : d.vertices) {
        best = std::min(best, l(v));
    }
    return best;
}

/// The one-segment diagram congruent to the edge, shifted so its endpoints
/// lie on the coordinate axes.
inline NewtonDiagram gamma_segment(const Edge &e)
{
    const LatticePoint top{0, e.length * (-e.direction.y)};
    const LatticePoint bot{e.length * e.direction.x, 0};
    return detail::diagram_from_vertices({top, bot});
}

/// Exponent data of a diagram: M_{ij} = u_j(Gamma_i), integer lengths s, and
/// the vectors u(x), u(y) of the normals evaluated at the unit monomials.
struct ExponentMatrix {
    std::vector<std::vector<std::int64_t>> entries; // r x r, M_{ij}
    std::vector<std::int64_t> lengths;              // s_i
    std::vector<std::int64_t> ux;                   // l_j(1,0)
    std::vector<std::int64_t> uy;                   // l_j(0,1)

    std::size_t size() const { return entries.size(); }
};

inline ExponentMatrix exponent_matrix(const NewtonDiagram &d)
{
    if (d.edges.empty()) {
        throw NoFacetsError();
    }
    const std::size_t r = d.edges.size();
    ExponentMatrix m;
    m.entries.assign(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        const NewtonDiagram seg = gamma_segment(d.edges[i]);
        for (std::size_t j = 0; j < r; ++j) {
            m.entries[i][j] = u_of_diagram(d.edges[j].normal, seg);
        }
        m.lengths.push_back(d.edges[i].length);
    }
    for (std::size_t j = 0; j < r; ++j) {
        m.ux.push_back(d.edges[j].normal.lx);
        m.uy.push_back(d.edges[j].normal.ly);
    }
    return m;
}

} // namespace npser

#endif
