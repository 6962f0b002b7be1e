#ifndef NPSER_SERIES_HPP
#define NPSER_SERIES_HPP

#include <npser/diagram.hpp>
#include <npser/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace npser {

using ExponentVector = std::vector<std::int64_t>;

inline std::int64_t total_degree(const ExponentVector &e)
{
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

/// Rational function given as a product of cyclotomic binomials:
/// prod (1 - t^N) over the numerator multiset divided by the same over the
/// denominator multiset. Vectors must be non-zero.
struct BinomialProduct {
    std::vector<ExponentVector> numerator;
    std::vector<ExponentVector> denominator;

    /// Cancels identical vectors between numerator and denominator
    /// (multiset-wise; no factorization is attempted).
    BinomialProduct simplified() const;

    std::string str() const;
};

namespace detail {

inline void multiset_cancel(const BinomialProduct &in, BinomialProduct &out)
{
    std::multimap<ExponentVector, int> den;
    for (const auto &v : in.denominator) {
        den.emplace(v, 0);
    }
    for (const auto &v : in.numerator) {
        auto it = den.find(v);
        if (it != den.end()) {
            den.erase(it);
        } else {
            out.numerator.push_back(v);
        }
    }
    for (const auto &[v, unused] : den) {
        out.denominator.push_back(v);
    }
}

inline std::string binomial_str(const ExponentVector &e)
{
    std::ostringstream os;
    os << "(1 - ";
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        any = true;
        os << "t" << (e.size() > 1 ? std::to_string(i + 1) : "");
        if (e[i] != 1) {
            os << "^" << e[i];
        }
    }
    if (!any) {
        os << "1";
    }
    os << ")";
    return os.str();
}

} // namespace detail

/// r-variable power series truncated at a fixed total degree; exact rational
/// coefficients, zero coefficients never stored.
class TruncatedSeries
{
public:
    using coeff_map = std::map<ExponentVector, Rational>;

    TruncatedSeries(std::size_t r, std::int64_t max_total_degree)
        : m_r(r), m_degree(max_total_degree)
    {
    }

    static TruncatedSeries one(std::size_t r, std::int64_t d)
    {
        TruncatedSeries s(r, d);
        s.add_term(ExponentVector(r, 0), Rational(1));
        return s;
    }

    std::size_t var_count() const { return m_r; }
    std::int64_t max_total_degree() const { return m_degree; }
    const coeff_map &coeffs() const { return m_coeffs; }

    Rational coeff(const ExponentVector &e) const
    {
        auto it = m_coeffs.find(e);
        return it == m_coeffs.end() ? Rational(0) : it->second;
    }

    void add_term(const ExponentVector &e, const Rational &c)
    {
        if (c == 0 || total_degree(e) > m_degree) {
            return;
        }
        auto [it, inserted] = m_coeffs.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_coeffs.erase(it);
            }
        }
    }

    /// Truncation to a lower total degree.
    TruncatedSeries truncated(std::int64_t d) const
    {
        TruncatedSeries out(m_r, d);
        for (const auto &[e, c] : m_coeffs) {
            out.add_term(e, c);
        }
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        if (a.m_r != b.m_r) {
            throw std::invalid_argument("variable count mismatch");
        }
        TruncatedSeries out(a.m_r, std::min(a.m_degree, b.m_degree));
        for (const auto &[ea, ca] : a.m_coeffs) {
            const std::int64_t da = total_degree(ea);
            for (const auto &[eb, cb] : b.m_coeffs) {
                if (da + total_degree(eb) > out.m_degree) {
                    continue;
                }
                ExponentVector e(a.m_r);
                for (std::size_t i = 0; i < a.m_r; ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    /// Substitutes t_i -> t for all i, collapsing to one variable.
    TruncatedSeries specialized() const
    {
        TruncatedSeries out(1, m_degree);
        for (const auto &[e, c] : m_coeffs) {
            out.add_term({total_degree(e)}, c);
        }
        return out;
    }

    std::string str() const
    {
        if (m_coeffs.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[e, c] : m_coeffs) {
            const bool negative = c < 0;
            if (!first) {
                os << (negative ? " - " : " + ");
            } else if (negative) {
                os << "-";
            }
            first = false;
            const Rational a = negative ? Rational(-c) : c;
            const bool constant = total_degree(e) == 0 && std::all_of(e.begin(), e.end(),
                                                                      [](auto v) { return v == 0; });
            if (a != 1 || constant) {
                os << a;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                os << "t" << (e.size() > 1 ? std::to_string(i + 1) : "");
                if (e[i] != 1) {
                    os << "^" << e[i];
                }
            }
        }
        return os.str();
    }

private:
    std::size_t m_r;
    std::int64_t m_degree;
    coeff_map m_coeffs;
};

/// Exact coefficientwise equality; the truncations must be comparable.
inline bool series_equal(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.var_count() != b.var_count() || a.max_total_degree() != b.max_total_degree()) {
        throw std::invalid_argument("series_equal: mismatched variable count or truncation degree");
    }
    return a.coeffs() == b.coeffs();
}

/// Closed form of the Poincare series of the {v''_i} filtration: the rows
/// M_i of the exponent matrix over (1 - t^{u(x)})(1 - t^{u(y)}). Depends only
/// on the diagram.
inline BinomialProduct poincare_closed_form(const NewtonDiagram &d)
{
    const ExponentMatrix m = exponent_matrix(d);
    BinomialProduct out;
    out.numerator = m.entries;
    out.denominator = {m.ux, m.uy};
    return out;
}

/// Power-series expansion of a binomial product up to total degree D.
inline TruncatedSeries expand(const BinomialProduct &b, std::int64_t max_degree)
{
    std::size_t r = 0;
    if (!b.numerator.empty()) {
        r = b.numerator.front().size();
    } else if (!b.denominator.empty()) {
        r = b.denominator.front().size();
    }
    TruncatedSeries out = TruncatedSeries::one(r, max_degree);
    for (const auto &u : b.denominator) {
        const std::int64_t step = total_degree(u);
        if (step <= 0) {
            throw std::invalid_argument("expand: denominator vector must be non-zero");
        }
        // geometric series 1/(1 - t^u)
        TruncatedSeries geo(r, max_degree);
        ExponentVector e(r, 0);
        for (std::int64_t k = 0; k * step <= max_degree; ++k) {
            geo.add_term(e, Rational(1));
            for (std::size_t i = 0; i < r; ++i) {
                e[i] += u[i];
            }
        }
        out = out * geo;
    }
    for (const auto &n : b.numerator) {
        TruncatedSeries fac(r, max_degree);
        fac.add_term(ExponentVector(r, 0), Rational(1));
        fac.add_term(n, Rational(-1));
        out = out * fac;
    }
    return out;
}

/// Reproduces the final sum in the proof of the closed form: over all shifts
/// k >= 0 and subsets I of the facets, add (-1)^{#I} t^{l(k) + sum_{i in I} M_i},
/// truncated at total degree D. Enumerates exactly the k with total l-degree
/// within the bound; independent of the closed-form path.
inline TruncatedSeries enumeration_oracle(const NewtonDiagram &d, std::int64_t max_degree)
{
    const ExponentMatrix m = exponent_matrix(d);
    const std::size_t r = m.size();

    // sum over subsets first; each subset contributes a constant shift
    std::vector<ExponentVector> shifts;
    std::vector<int> signs;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        ExponentVector sh(r, 0);
        int bits = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (std::size_t{1} << i)) {
                ++bits;
                for (std::size_t j = 0; j < r; ++j) {
                    sh[j] += m.entries[i][j];
                }
            }
        }
        shifts.push_back(std::move(sh));
        signs.push_back(bits % 2 == 0 ? 1 : -1);
    }

    const std::int64_t wx = total_degree(m.ux);
    const std::int64_t wy = total_degree(m.uy);
    TruncatedSeries out(r, max_degree);
    for (std::int64_t kx = 0; kx * wx <= max_degree; ++kx) {
        for (std::int64_t ky = 0; kx * wx + ky * wy <= max_degree; ++ky) {
            ExponentVector lk(r);
            for (std::size_t j = 0; j < r; ++j) {
                lk[j] = m.ux[j] * kx + m.uy[j] * ky;
            }
            for (std::size_t si = 0; si < shifts.size(); ++si) {
                ExponentVector e(r);
                for (std::size_t j = 0; j < r; ++j) {
                    e[j] = lk[j] + shifts[si][j];
                }
                out.add_term(e, Rational(signs[si]));
            }
        }
    }
    return out;
}

inline BinomialProduct BinomialProduct::simplified() const
{
    BinomialProduct out;
    detail::multiset_cancel(*this, out);
    return out;
}

inline std::string BinomialProduct::str() const
{
    std::ostringstream os;
    if (numerator.empty()) {
        os << "1";
    } else {
        for (const auto &n : numerator) {
            os << detail::binomial_str(n);
        }
    }
    if (!denominator.empty()) {
        os << " / ";
        for (const auto &d : denominator) {
            os << detail::binomial_str(d);
        }
    }
    return os.str();
}

} // namespace npser

#endif
