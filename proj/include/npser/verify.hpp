#ifndef NPSER_VERIFY_HPP
#define NPSER_VERIFY_HPP

#include <npser/alexander.hpp>
#include <npser/diagram.hpp>
#include <npser/laurent.hpp>
#include <npser/random_gen.hpp>
#include <npser/series.hpp>
#include <npser/valuation.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace npser {

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

// Three-valued comparison a <= b on order-function results. AtLeast(cap)
// stands for an unknown value >= cap, so some comparisons are undecidable.
enum class Tri { True, False, Unknown };

inline Tri leq(const ValueOrInfinite &a, const ValueOrInfinite &b)
{
    using Tag = ValueOrInfinite::Tag;
    if (a.tag == Tag::Finite) {
        if (b.tag == Tag::Finite) {
            return a.value <= b.value ? Tri::True : Tri::False;
        }
        if (b.tag == Tag::AtLeast) {
            return a.value <= b.value ? Tri::True : Tri::Unknown;
        }
        return Tri::True;
    }
    if (a.tag == Tag::AtLeast) {
        if (b.tag == Tag::Finite) {
            return a.value > b.value ? Tri::False : Tri::Unknown;
        }
        return b.tag == Tag::Infinite ? Tri::True : Tri::Unknown;
    }
    // a infinite
    if (b.tag == Tag::Infinite) {
        return Tri::True;
    }
    return b.tag == Tag::Finite ? Tri::False : Tri::Unknown;
}

/// Lemma-style division suite: existence, reconstruction, window containment
/// and uniqueness on random (p, q, d') triples, plus window-independence of
/// divisibility.
inline SuiteResult suite_division(std::uint64_t seed, std::size_t n = 1000)
{
    SuiteResult res{"division"};
    Rng rng(seed ^ 0xd1f0000u);
    for (std::size_t it = 0; it < n; ++it) {
        LaurentPoly1 q;
        while (q.is_zero()) {
            q = rnd::random_poly1(rng, 5, 4);
        }
        const LaurentPoly1 p = rnd::random_poly1(rng, 6, 6);
        const std::int64_t d_prime = rnd::uniform(rng, -5, 5);
        const std::int64_t s = q.deg_max() - q.deg_min();
        ++res.checked;

        const auto [a, r] = laurent_division(p, q, d_prime);
        std::ostringstream ctx;
        if (q * a + r != p) {
            ctx << "reconstruction failed (case " << it << ")";
            res.failures.push_back(ctx.str());
            continue;
        }
        if (!r.is_zero() && (r.deg_min() < d_prime || r.deg_max() > d_prime + s - 1)) {
            ctx << "remainder escapes window (case " << it << ")";
            res.failures.push_back(ctx.str());
            continue;
        }
        // uniqueness: any perturbed quotient breaks the window condition
        LaurentPoly1 pert = LaurentPoly1::monomial(rnd::uniform(rng, -3, 3), Rational(1));
        const LaurentPoly1 r2 = p - q * (a + pert);
        if (!r2.is_zero() && r2.deg_min() >= d_prime && r2.deg_max() <= d_prime + s - 1) {
            ctx << "uniqueness violated (case " << it << ")";
            res.failures.push_back(ctx.str());
            continue;
        }
        // divisibility is independent of the window position
        const auto shifted = laurent_division(p, q, d_prime + rnd::uniform(rng, 1, 7));
        if (r.is_zero() != shifted.remainder.is_zero()) {
            ctx << "divisibility depends on window (case " << it << ")";
            res.failures.push_back(ctx.str());
        }
    }
    return res;
}

/// Closed form vs enumeration of shifted facet-subset diagrams, on random
/// staircases.
inline SuiteResult suite_identity(std::uint64_t seed, std::size_t diagrams = 25,
                                  std::int64_t degree = 20)
{
    SuiteResult res{"identity"};
    Rng rng(seed ^ 0x1de47u);
    for (std::size_t it = 0; it < diagrams; ++it) {
        const NewtonDiagram d = rnd::random_diagram(rng, 5, 12);
        ++res.checked;
        const TruncatedSeries closed = expand(poincare_closed_form(d), degree);
        const TruncatedSeries enumerated = enumeration_oracle(d, degree);
        if (!series_equal(closed, enumerated)) {
            std::ostringstream os;
            os << "closed form != enumeration for diagram " << it << " with "
               << d.facet_count() << " facets";
            res.failures.push_back(os.str());
        }
    }
    return res;
}

/// Order-function axioms and relations on random germs: scale invariance,
/// the ultrametric inequality, multiplicativity of u, the domination chain
/// u <= v' <= v'' and invariance of v'' under adding multiples of f.
inline SuiteResult suite_axioms(std::uint64_t seed, std::size_t n = 500)
{
    SuiteResult res{"axioms"};
    Rng rng(seed ^ 0xa2107u);

    const auto eq_below_cap = [](const ValueOrInfinite &a, const ValueOrInfinite &b) {
        if (a.is_finite() || b.is_finite()) {
            return a == b;
        }
        return true; // both at least the cap (AtLeast or Infinite)
    };

    for (std::size_t it = 0; it < n; ++it) {
        const NewtonDiagram d = rnd::random_diagram(rng, 3, 8);
        const LaurentPoly2 f = rnd::random_germ_with_diagram(rng, d);
        const std::size_t i =
            static_cast<std::size_t>(rnd::uniform(rng, 0, static_cast<std::int64_t>(d.facet_count()) - 1));
        const LinearForm l = d.edges[i].normal;
        const std::int64_t cap = default_cap(d.edges[i].level);

        LaurentPoly2 g1 = rnd::random_poly(rng, 6, 5);
        LaurentPoly2 g2 = rnd::random_poly(rng, 6, 5);
        const Rational lambda = rnd::nonzero_rational(rng);
        ++res.checked;
        std::ostringstream ctx;
        ctx << " (case " << it << ")";

        const auto u1 = u_val(l, g1);
        const auto vp1 = v_prime(g1, f, d, i, cap);
        const auto vpp1 = v_double_prime(g1, f, d, i, cap);

        // scale invariance: greedy reduction is deterministic, so tags match
        if (v_double_prime(lambda * g1, f, d, i, cap) != vpp1
            || v_prime(lambda * g1, f, d, i, cap) != vp1 || u_val(l, lambda * g1) != u1) {
            res.failures.push_back("scale invariance failed" + ctx.str());
            continue;
        }

        // ultrametric inequality, checked when all three values are finite
        const auto check_ultra = [&](auto fn, const char *name) {
            const auto a = fn(g1), b = fn(g2), c = fn(g1 + g2);
            if (a.is_finite() && b.is_finite() && c.is_finite()
                && c.value < std::min(a.value, b.value)) {
                res.failures.push_back(std::string(name) + ": ultrametric failed" + ctx.str());
            }
        };
        check_ultra([&](const LaurentPoly2 &g) { return u_val(l, g); }, "u");
        check_ultra([&](const LaurentPoly2 &g) { return v_prime(g, f, d, i, cap); }, "v'");
        check_ultra([&](const LaurentPoly2 &g) { return v_double_prime(g, f, d, i, cap); }, "v''");

        // u is a valuation
        if (!g1.is_zero() && !g2.is_zero()) {
            const auto prod = u_val(l, g1 * g2);
            if (prod.value != u_val(l, g1).value + u_val(l, g2).value) {
                res.failures.push_back("u multiplicativity failed" + ctx.str());
            }
        }

        // domination chain
        if (leq(u1, vp1) == Tri::False || leq(vp1, vpp1) == Tri::False) {
            res.failures.push_back("domination chain failed" + ctx.str());
        }

        // v'' is well defined on the quotient by (f)
        const LaurentPoly2 h = rnd::random_poly(rng, 3, 3, true);
        if (!eq_below_cap(v_double_prime(g1 + h * f, f, d, i, cap), vpp1)) {
            res.failures.push_back("ideal invariance failed" + ctx.str());
        }
    }
    return res;
}

/// Greedy reductions vs the linear-feasibility oracle: the computed value T
/// must be feasible and T+1 infeasible, with the Laurent band grown until the
/// answer stabilizes.
inline SuiteResult suite_agreement(std::uint64_t seed, std::size_t n = 200, std::int64_t cap = 30)
{
    SuiteResult res{"agreement"};
    Rng rng(seed ^ 0xa64eeu);

    const auto stable_oracle = [](const LaurentPoly2 &g, const LaurentPoly2 &f,
                                  const NewtonDiagram &d, std::size_t i, std::int64_t target,
                                  OracleMode mode) {
        std::int64_t band = 6;
        bool prev = v_feasibility_oracle(g, f, d, i, target, band, mode);
        for (int grow = 0; grow < 3; ++grow) {
            band += 6;
            const bool cur = v_feasibility_oracle(g, f, d, i, target, band, mode);
            if (cur == prev) {
                return cur;
            }
            prev = cur;
        }
        return prev;
    };

    for (std::size_t it = 0; it < n; ++it) {
        const NewtonDiagram d = rnd::random_diagram(rng, 2, 5);
        const LaurentPoly2 f = rnd::random_germ_with_diagram(rng, d, 2);
        LaurentPoly2 g = rnd::random_poly(rng, 4, 4);
        const std::size_t i =
            static_cast<std::size_t>(rnd::uniform(rng, 0, static_cast<std::int64_t>(d.facet_count()) - 1));
        ++res.checked;
        std::ostringstream ctx;
        ctx << " (case " << it << ")";

        const auto check = [&](const ValueOrInfinite &v, OracleMode mode, const char *name) {
            if (!v.is_finite()) {
                // value certified >= cap (or infinite): T-feasibility only
                const std::int64_t t = v.tag == ValueOrInfinite::Tag::AtLeast ? v.value : cap;
                if (!stable_oracle(g, f, d, i, t, mode)) {
                    res.failures.push_back(std::string(name) + ": capped value infeasible" + ctx.str());
                }
                return;
            }
            if (!stable_oracle(g, f, d, i, v.value, mode)) {
                res.failures.push_back(std::string(name) + ": value not feasible" + ctx.str());
            } else if (stable_oracle(g, f, d, i, v.value + 1, mode)) {
                res.failures.push_back(std::string(name) + ": value+1 still feasible" + ctx.str());
            }
        };
        check(v_double_prime(g, f, d, i, cap), OracleMode::Laurent, "v''");
        check(v_prime(g, f, d, i, cap), OracleMode::Holomorphic, "v'");
    }
    return res;
}

/// Transpose correspondence between the reduced Poincare matrix and the
/// multilink Alexander numerator, plus the involution property.
inline SuiteResult suite_transpose(std::uint64_t seed, std::size_t diagrams = 25)
{
    SuiteResult res{"transpose"};
    Rng rng(seed ^ 0x7ca05u);
    for (std::size_t it = 0; it < diagrams; ++it) {
        const NewtonDiagram d = rnd::random_diagram(rng, 5, 12);
        ++res.checked;
        std::ostringstream ctx;
        ctx << " (diagram " << it << ")";

        const CyclotomicMatrixForm red = reduced_poincare(d);
        if (transpose_involution(transpose_involution(red)) != red) {
            res.failures.push_back("transpose not an involution" + ctx.str());
            continue;
        }
        if (transpose_involution(red).rows != alexander_multilink(d).numerator) {
            res.failures.push_back("transpose correspondence failed" + ctx.str());
            continue;
        }
        const ExponentMatrix m = exponent_matrix(d);
        const bool unit_lengths =
            std::all_of(m.lengths.begin(), m.lengths.end(), [](auto s) { return s == 1; });
        if (unit_lengths) {
            const BinomialProduct delta = alexander_delta(d);
            const BinomialProduct p = poincare_closed_form(d);
            if (delta.numerator != p.numerator || delta.denominator != p.denominator) {
                res.failures.push_back("delta != Poincare series for unit lengths" + ctx.str());
            }
        }
    }
    return res;
}

inline std::vector<SuiteResult> run_all_suites(std::uint64_t seed)
{
    return {suite_division(seed), suite_identity(seed), suite_axioms(seed),
            suite_agreement(seed), suite_transpose(seed)};
}

} // namespace npser

#endif
