#ifndef NPSER_RANDOM_GEN_HPP
#define NPSER_RANDOM_GEN_HPP

#include <npser/diagram.hpp>
#include <npser/laurent.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace npser {

using Rng = std::mt19937_64;

namespace rnd {

inline std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational nonzero_rational(Rng &rng)
{
    std::int64_t num = 0;
    while (num == 0) {
        num = uniform(rng, -4, 4);
    }
    return Rational(num, uniform(rng, 1, 2));
}

inline Rational rational_maybe_zero(Rng &rng)
{
    return Rational(uniform(rng, -3, 3), uniform(rng, 1, 2));
}

/// Random convex lattice staircase: distinct primitive edge directions
/// chained from steepest to shallowest, scaled to fit in the given box.
inline NewtonDiagram random_diagram(Rng &rng, std::size_t max_edges = 5,
                                    std::int64_t max_coord = 12)
{
    for (;;) {
        const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_edges)));
        std::vector<LatticePoint> dirs;
        for (int attempts = 0; dirs.size() < r && attempts < 200; ++attempts) {
            const std::int64_t dx = uniform(rng, 1, 4);
            const std::int64_t dy = -uniform(rng, 1, 4);
            if (std::gcd(dx, -dy) != 1) {
                continue;
            }
            const LatticePoint d{dx, dy};
            bool dup = false;
            for (const auto &o : dirs) {
                if (o.x * d.y - o.y * d.x == 0) {
                    dup = true;
                    break;
                }
            }
            if (!dup) {
                dirs.push_back(d);
            }
        }
        if (dirs.size() < r) {
            continue;
        }
        // steepest slope first: a before b iff a.y/a.x < b.y/b.x
        std::sort(dirs.begin(), dirs.end(), [](const LatticePoint &a, const LatticePoint &b) {
            return a.y * b.x < b.y * a.x;
        });

        std::vector<std::int64_t> lengths;
        std::int64_t width = 0, height = 0;
        for (std::size_t i = 0; i < r; ++i) {
            lengths.push_back(uniform(rng, 1, 2));
            width += lengths.back() * dirs[i].x;
            height += lengths.back() * (-dirs[i].y);
        }
        if (width > max_coord || height > max_coord) {
            continue;
        }
        const std::int64_t sx = uniform(rng, 0, std::max<std::int64_t>(0, (max_coord - width) / 2));
        const std::int64_t sy = uniform(rng, 0, std::max<std::int64_t>(0, (max_coord - height) / 2));

        std::vector<LatticePoint> vertices;
        LatticePoint cur{sx, sy + height};
        vertices.push_back(cur);
        for (std::size_t i = 0; i < r; ++i) {
            cur = cur + dirs[i] * lengths[i];
            vertices.push_back(cur);
        }
        return detail::diagram_from_vertices(std::move(vertices));
    }
}

/// Is k inside the Newton polygon of the diagram (on or above it)?
inline bool in_polygon(const NewtonDiagram &d, const LatticePoint &k)
{
    if (k.x < d.vertices.front().x || k.y < d.vertices.back().y) {
        return false;
    }
    for (const auto &e : d.edges) {
        if (e.normal(k) < e.level) {
            return false;
        }
    }
    return true;
}

/// Random germ whose Newton diagram is exactly d: non-zero coefficients at
/// the vertices plus optional terms on or above the diagram.
inline LaurentPoly2 random_germ_with_diagram(Rng &rng, const NewtonDiagram &d,
                                             int extra_terms = 4)
{
    LaurentPoly2 f;
    for (const auto &v : d.vertices) {
        f.add_term(v, nonzero_rational(rng));
    }
    // lattice points interior to the edges
    for (const auto &e : d.edges) {
        for (std::int64_t j = 1; j < e.length; ++j) {
            f.add_term(e.v_from + e.direction * j, rational_maybe_zero(rng));
        }
    }
    const std::int64_t xmax = d.vertices.back().x + 3;
    const std::int64_t ymax = d.vertices.front().y + 3;
    for (int t = 0; t < extra_terms; ++t) {
        const LatticePoint k{uniform(rng, 0, xmax), uniform(rng, 0, ymax)};
        if (in_polygon(d, k)) {
            f.add_term(k, rational_maybe_zero(rng));
        }
    }
    return f;
}

/// Random germ with support in the non-negative quadrant.
inline LaurentPoly2 random_poly(Rng &rng, std::int64_t max_exp, int max_terms,
                                bool allow_negative_exponents = false)
{
    LaurentPoly2 g;
    const std::int64_t lo = allow_negative_exponents ? -max_exp : 0;
    const int n = static_cast<int>(uniform(rng, 1, max_terms));
    for (int t = 0; t < n; ++t) {
        g.add_term({uniform(rng, lo, max_exp), uniform(rng, lo, max_exp)},
                   rational_maybe_zero(rng));
    }
    return g;
}

inline LaurentPoly1 random_poly1(Rng &rng, std::int64_t max_abs_exp, int max_terms)
{
    LaurentPoly1 p;
    const int n = static_cast<int>(uniform(rng, 1, max_terms));
    for (int t = 0; t < n; ++t) {
        p.add_term(uniform(rng, -max_abs_exp, max_abs_exp), rational_maybe_zero(rng));
    }
    return p;
}

} // namespace rnd

} // namespace npser

#endif
