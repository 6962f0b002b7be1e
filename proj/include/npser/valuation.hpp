#ifndef NPSER_VALUATION_HPP
#define NPSER_VALUATION_HPP

#include <npser/diagram.hpp>
#include <npser/laurent.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace npser {

/// Result of an order function: an exact value, "at least cap" when the
/// reduction hit the configured horizon, or infinite (g is a Laurent
/// multiple of f, resp. g = 0 for u).
struct ValueOrInfinite {
    enum class Tag { Finite, AtLeast, Infinite };

    Tag tag = Tag::Finite;
    std::int64_t value = 0; // Finite value or AtLeast cap

    static ValueOrInfinite finite(std::int64_t n) { return {Tag::Finite, n}; }
    static ValueOrInfinite at_least(std::int64_t cap) { return {Tag::AtLeast, cap}; }
    static ValueOrInfinite infinite() { return {Tag::Infinite, 0}; }

    bool is_finite() const { return tag == Tag::Finite; }
    bool is_infinite() const { return tag == Tag::Infinite; }

    friend bool operator==(const ValueOrInfinite &, const ValueOrInfinite &) = default;

    std::string str() const
    {
        switch (tag) {
            case Tag::Finite:
                return std::to_string(value);
            case Tag::AtLeast:
                return ">=" + std::to_string(value) + " (cap)";
            default:
                return "inf";
        }
    }
};

/// One-variable view of a germ along the lattice line l(k) = c. The
/// coefficient of z^j is the coefficient of the germ at base + j*step.
struct LineRestriction {
    LatticePoint base;  // canonical: l(base) = c, 0 <= base.x < step.x
    LatticePoint step;  // primitive direction of the line, dx > 0
    LaurentPoly1 poly;
};

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// x with a*x == 1 (mod m), gcd(a, m) = 1, m >= 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    if (m == 1) {
        return 0;
    }
    std::int64_t old_r = mod_floor(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod_floor(old_s, m);
}

// Canonical point on the line l(k) = c: the unique lattice solution with
// 0 <= kx < ly, by the extended Euclid algorithm.
inline LatticePoint line_base(const LinearForm &l, std::int64_t c)
{
    const std::int64_t kx = mod_floor(c * mod_inverse(l.lx, l.ly), l.ly);
    const std::int64_t ky = (c - l.lx * kx) / l.ly;
    return {kx, ky};
}

} // namespace detail

/// min of l over the support of g; Infinite for g = 0.
inline ValueOrInfinite u_val(const LinearForm &l, const LaurentPoly2 &g)
{
    if (g.is_zero()) {
        return ValueOrInfinite::infinite();
    }
    bool first = true;
    std::int64_t best = 0;
    for (const auto &[k, c] : g.terms()) {
        const std::int64_t v = l(k);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return ValueOrInfinite::finite(best);
}

/// Restriction of g to the line l(k) = c.
inline LineRestriction boundary_part(const LaurentPoly2 &g, const LinearForm &l, std::int64_t c)
{
    LineRestriction out;
    out.base = detail::line_base(l, c);
    out.step = {l.ly, -l.lx};
    for (const auto &[k, coeff] : g.terms()) {
        if (l(k) == c) {
            // k = base + j*step with step.x = ly > 0
            out.poly.add_term((k.x - out.base.x) / out.step.x, coeff);
        }
    }
    return out;
}

/// Inverse of boundary_part: places a one-variable polynomial back on the
/// line l(k) = level.
inline LaurentPoly2 lift_to_line(const LaurentPoly1 &a, const LinearForm &l, std::int64_t level)
{
    const LatticePoint base = detail::line_base(l, level);
    const LatticePoint step{l.ly, -l.lx};
    LaurentPoly2 out;
    for (const auto &[j, c] : a.terms()) {
        out.add_term(base + step * j, c);
    }
    return out;
}

inline std::int64_t default_cap(std::int64_t facet_level)
{
    return std::max<std::int64_t>(64, 8 * facet_level);
}

namespace detail {

// Greedy level-by-level reduction of g against f along facet i. At the
// current lowest level c the slice of g can be cancelled iff the facet slice
// of f divides it in the one-variable Laurent ring; the quotient is unique,
// so in holomorphic mode it suffices to additionally check that its lift has
// non-negative exponents.
inline ValueOrInfinite v_reduce(const LaurentPoly2 &g, const LaurentPoly2 &f,
                                const NewtonDiagram &diag, std::size_t i, std::int64_t cap,
                                bool holomorphic)
{
    if (i >= diag.edges.size()) {
        throw std::out_of_range("facet index out of range");
    }
    const Edge &e = diag.edges[i];
    const LinearForm &l = e.normal;
    const LaurentPoly1 q = boundary_part(f, l, e.level).poly;

    LaurentPoly2 cur = g;
    for (;;) {
        if (cur.is_zero()) {
            return ValueOrInfinite::infinite();
        }
        const std::int64_t c = u_val(l, cur).value;
        if (c >= cap) {
            return ValueOrInfinite::at_least(cap);
        }
        const LaurentPoly1 p = boundary_part(cur, l, c).poly;
        LaurentPoly1 quot;
        if (!laurent_divides(q, p, &quot)) {
            return ValueOrInfinite::finite(c);
        }
        // Canonical base points do not add across levels: base(c - c_i) +
        // base(c_i) = base(c) + delta*step with delta in {0, 1}. Shift the
        // quotient so the product lands exactly on the slice of cur.
        const std::int64_t delta = (line_base(l, c - e.level).x + line_base(l, e.level).x
                                    - line_base(l, c).x)
                                   / l.ly;
        LaurentPoly1 shifted;
        for (const auto &[j, cf] : quot.terms()) {
            shifted.add_term(j - delta, cf);
        }
        const LaurentPoly2 h = lift_to_line(shifted, l, c - e.level);
        if (holomorphic && h.has_negative_exponent()) {
            return ValueOrInfinite::finite(c);
        }
        cur -= h * f;
    }
}

} // namespace detail

/// v''_i(g): sup of u_i(g + hf) over Laurent polynomial h.
inline ValueOrInfinite v_double_prime(const LaurentPoly2 &g, const LaurentPoly2 &f,
                                      const NewtonDiagram &diag, std::size_t i, std::int64_t cap)
{
    if (f.is_zero()) {
        throw std::invalid_argument("f must be non-zero");
    }
    return detail::v_reduce(g, f, diag, i, cap, false);
}

/// v'_i(g): sup of u_i(g + hf) over holomorphic h.
inline ValueOrInfinite v_prime(const LaurentPoly2 &g, const LaurentPoly2 &f,
                               const NewtonDiagram &diag, std::size_t i, std::int64_t cap)
{
    if (f.is_zero()) {
        throw std::invalid_argument("f must be non-zero");
    }
    return detail::v_reduce(g, f, diag, i, cap, true);
}

enum class OracleMode { Holomorphic, Laurent };

struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Independent decision procedure for the sup definitions: decides by exact
/// linear algebra whether some h with support in a finite window makes all
/// coefficients of g + h*f on levels below `target` vanish. In holomorphic
/// mode h runs over non-negative exponents; in Laurent mode its line
/// coordinate (relative to the canonical base point of each level) is
/// bounded by `band`. Returns true iff the corresponding order function is
/// >= target within the window.
inline bool v_feasibility_oracle(const LaurentPoly2 &g, const LaurentPoly2 &f,
                                 const NewtonDiagram &diag, std::size_t i, std::int64_t target,
                                 std::int64_t band, OracleMode mode,
                                 std::size_t max_unknowns = 4000)
{
    if (i >= diag.edges.size()) {
        throw std::out_of_range("facet index out of range");
    }
    if (g.is_zero()) {
        return true;
    }
    const Edge &e = diag.edges[i];
    const LinearForm &l = e.normal;
    const std::int64_t c_i = e.level;
    const std::int64_t u_g = u_val(l, g).value;
    if (u_g >= target) {
        return true;
    }

    // Candidate support of h: levels up to target - c_i - 1; slices of h
    // below level u_i(g) - c_i would create support below every level of g
    // and are forced to vanish, so they are excluded up front.
    std::vector<LatticePoint> region;
    const std::int64_t lam_hi = target - c_i - 1;
    if (mode == OracleMode::Holomorphic) {
        for (std::int64_t x = 0; l.lx * x <= lam_hi; ++x) {
            for (std::int64_t y = 0; l.lx * x + l.ly * y <= lam_hi; ++y) {
                region.push_back({x, y});
            }
        }
    } else {
        for (std::int64_t lam = u_g - c_i; lam <= lam_hi; ++lam) {
            const LatticePoint base = detail::line_base(l, lam);
            const LatticePoint step{l.ly, -l.lx};
            for (std::int64_t j = -band; j <= band; ++j) {
                region.push_back(base + step * j);
            }
        }
    }
    if (region.size() > max_unknowns) {
        throw OracleLimitError("feasibility region exceeds solver limit");
    }

    // Constraint points: every lattice point below the target level that
    // g or any shifted copy of f can touch.
    std::set<LatticePoint> constraints;
    for (const auto &[k, c] : g.terms()) {
        if (l(k) < target) {
            constraints.insert(k);
        }
    }
    for (const auto &k : region) {
        for (const auto &[m, c] : f.terms()) {
            const LatticePoint p = k + m;
            if (l(p) < target) {
                constraints.insert(p);
            }
        }
    }

    // Row per constraint point, column per region point, augmented with the
    // right-hand side -g_P stored under the extra key ncols. The system is
    // banded, so sparse elimination keeps rows short. Feasible iff no row
    // reduces to 0 = nonzero.
    std::map<LatticePoint, std::size_t> col_of;
    for (std::size_t c = 0; c < region.size(); ++c) {
        col_of.emplace(region[c], c);
    }
    const std::size_t ncols = region.size();
    using SparseRow = std::map<std::size_t, Rational>;
    std::vector<SparseRow> rows;
    rows.reserve(constraints.size());
    for (const auto &p : constraints) {
        SparseRow row;
        for (const auto &[m, cf] : f.terms()) {
            auto it = col_of.find(p - m);
            if (it != col_of.end()) {
                auto [rit, inserted] = row.emplace(it->second, cf);
                if (!inserted) {
                    rit->second += cf;
                    if (rit->second == 0) {
                        row.erase(rit);
                    }
                }
            }
        }
        const Rational rhs = -g.coeff(p);
        if (rhs != 0) {
            row.emplace(ncols, rhs);
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }

    const auto axpy = [ncols](SparseRow &dst, const Rational &factor, const SparseRow &src) {
        for (const auto &[c, v] : src) {
            auto [it, inserted] = dst.emplace(c, factor * v);
            if (!inserted) {
                it->second += factor * v;
                if (it->second == 0) {
                    dst.erase(it);
                }
            }
        }
        (void)ncols;
    };

    std::vector<bool> is_pivot(rows.size(), false);
    for (std::size_t col = 0; col < ncols; ++col) {
        // pick the shortest available row with a nonzero in this column
        std::size_t sel = rows.size();
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
            if (is_pivot[rr] || !rows[rr].contains(col)) {
                continue;
            }
            if (sel == rows.size() || rows[rr].size() < rows[sel].size()) {
                sel = rr;
            }
        }
        if (sel == rows.size()) {
            continue;
        }
        is_pivot[sel] = true;
        const Rational pivot = rows[sel].at(col);
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == sel) {
                continue;
            }
            auto it = rows[rr].find(col);
            if (it == rows[rr].end()) {
                continue;
            }
            const Rational factor = -(it->second / pivot);
            axpy(rows[rr], factor, rows[sel]);
        }
    }
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
        if (!is_pivot[rr] && !rows[rr].empty()
            && rows[rr].begin()->first == ncols) {
            return false;
        }
    }
    return true;
}

} // namespace npser

#endif
