#ifndef NPSER_LAURENT_HPP
#define NPSER_LAURENT_HPP

#include <npser/rational.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace npser {

/// A point of the exponent lattice Z^2. Laurent exponents may be negative.
struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const LatticePoint &, const LatticePoint &) = default;

    LatticePoint operator+(const LatticePoint &o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint &o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator*(std::int64_t k) const { return {x * k, y * k}; }
};

/// Finitely supported Laurent polynomial in two variables with rational
/// coefficients. Zero coefficients are never stored.
class LaurentPoly2
{
public:
    using term_map = std::map<LatticePoint, Rational>;

    LaurentPoly2() = default;

    static LaurentPoly2 monomial(const LatticePoint &k, const Rational &c)
    {
        LaurentPoly2 p;
        p.add_term(k, c);
        return p;
    }

    const term_map &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    Rational coeff(const LatticePoint &k) const
    {
        auto it = m_terms.find(k);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    void add_term(const LatticePoint &k, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    LaurentPoly2 &operator+=(const LaurentPoly2 &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add_term(k, c);
        }
        return *this;
    }
    LaurentPoly2 &operator-=(const LaurentPoly2 &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add_term(k, -c);
        }
        return *this;
    }

    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2 &b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2 &b) { return a -= b; }

    friend LaurentPoly2 operator*(const LaurentPoly2 &a, const LaurentPoly2 &b)
    {
        LaurentPoly2 out;
        for (const auto &[ka, ca] : a.m_terms) {
            for (const auto &[kb, cb] : b.m_terms) {
                out.add_term(ka + kb, ca * cb);
            }
        }
        return out;
    }

    friend LaurentPoly2 operator*(const Rational &s, const LaurentPoly2 &a)
    {
        LaurentPoly2 out;
        if (s == 0) {
            return out;
        }
        for (const auto &[k, c] : a.m_terms) {
            out.m_terms.emplace(k, s * c);
        }
        return out;
    }

    friend bool operator==(const LaurentPoly2 &, const LaurentPoly2 &) = default;

    bool has_negative_exponent() const
    {
        for (const auto &[k, c] : m_terms) {
            if (k.x < 0 || k.y < 0) {
                return true;
            }
        }
        return false;
    }

    std::string str() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[k, c] : m_terms) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) {
                    a = -a;
                }
            }
            first = false;
            const bool has_var = (k.x != 0 || k.y != 0);
            if (a != 1 || !has_var) {
                os << a;
                if (has_var) {
                    os << "*";
                }
            }
            if (k.x != 0) {
                os << "x";
                if (k.x != 1) {
                    os << "^" << k.x;
                }
                if (k.y != 0) {
                    os << "*";
                }
            }
            if (k.y != 0) {
                os << "y";
                if (k.y != 1) {
                    os << "^" << k.y;
                }
            }
        }
        return os.str();
    }

private:
    term_map m_terms;
};

/// One-variable Laurent polynomial, the restriction of a germ to a lattice line.
class LaurentPoly1
{
public:
    using term_map = std::map<std::int64_t, Rational>;

    LaurentPoly1() = default;

    static LaurentPoly1 monomial(std::int64_t d, const Rational &c)
    {
        LaurentPoly1 p;
        p.add_term(d, c);
        return p;
    }

    const term_map &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    Rational coeff(std::int64_t d) const
    {
        auto it = m_terms.find(d);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    // Lowest/highest exponent of the support; support must be non-empty.
    std::int64_t deg_min() const { return m_terms.begin()->first; }
    std::int64_t deg_max() const { return m_terms.rbegin()->first; }

    void add_term(std::int64_t d, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    LaurentPoly1 &operator+=(const LaurentPoly1 &o)
    {
        for (const auto &[d, c] : o.m_terms) {
            add_term(d, c);
        }
        return *this;
    }
    LaurentPoly1 &operator-=(const LaurentPoly1 &o)
    {
        for (const auto &[d, c] : o.m_terms) {
            add_term(d, -c);
        }
        return *this;
    }

    friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1 &b) { return a += b; }
    friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1 &b) { return a -= b; }

    friend LaurentPoly1 operator*(const LaurentPoly1 &a, const LaurentPoly1 &b)
    {
        LaurentPoly1 out;
        for (const auto &[da, ca] : a.m_terms) {
            for (const auto &[db, cb] : b.m_terms) {
                out.add_term(da + db, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const LaurentPoly1 &, const LaurentPoly1 &) = default;

private:
    term_map m_terms;
};

struct LaurentDivisionResult {
    LaurentPoly1 quotient;
    LaurentPoly1 remainder;
};

/// Division with remainder in the ring of one-variable Laurent polynomials:
/// writes p = q*a + r where the support of r lies in the window
/// {d_prime, ..., d_prime + s - 1}, s being the support length of q.
/// The pair (a, r) is unique. Terms of p below the window are peeled against
/// the lowest coefficient of q, terms above against the highest; each step
/// only creates support inside or on the shrinking side, so the loop
/// terminates with everything inside the window.
inline LaurentDivisionResult laurent_division(const LaurentPoly1 &p, const LaurentPoly1 &q,
                                              std::int64_t d_prime)
{
    if (q.is_zero()) {
        throw std::invalid_argument("laurent_division: divisor is zero");
    }
    const std::int64_t d = q.deg_min();
    const std::int64_t s = q.deg_max() - d; // window width; s >= 0
    const Rational b_lo = q.coeff(q.deg_min());
    const Rational b_hi = q.coeff(q.deg_max());
    const std::int64_t win_lo = d_prime;
    const std::int64_t win_hi = d_prime + s - 1;

    LaurentPoly1 a;
    LaurentPoly1 rest = p;

    while (!rest.is_zero() && rest.deg_min() < win_lo) {
        const std::int64_t lo = rest.deg_min();
        const Rational t = rest.coeff(lo) / b_lo;
        a.add_term(lo - d, t);
        rest -= LaurentPoly1::monomial(lo - d, t) * q;
    }
    while (!rest.is_zero() && rest.deg_max() > win_hi) {
        const std::int64_t hi = rest.deg_max();
        const Rational t = rest.coeff(hi) / b_hi;
        a.add_term(hi - d - s, t);
        rest -= LaurentPoly1::monomial(hi - d - s, t) * q;
    }
    return {std::move(a), std::move(rest)};
}

/// Exact divisibility in the Laurent ring (independent of any window choice).
inline bool laurent_divides(const LaurentPoly1 &q, const LaurentPoly1 &p, LaurentPoly1 *quotient = nullptr)
{
    if (p.is_zero()) {
        if (quotient) {
            *quotient = LaurentPoly1();
        }
        return true;
    }
    auto [a, r] = laurent_division(p, q, p.deg_min());
    if (!r.is_zero()) {
        return false;
    }
    if (quotient) {
        *quotient = std::move(a);
    }
    return true;
}

} // namespace npser

#endif
