#ifndef NPSER_PARSE_HPP
#define NPSER_PARSE_HPP

#include <npser/laurent.hpp>
#include <npser/rational.hpp>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace npser {

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), m_pos(pos)
    {
    }
    std::size_t position() const { return m_pos; }

private:
    std::size_t m_pos;
};

namespace detail {

// Grammar:
//   expression := term (('+'|'-') term)*
//   term       := coeff? ('*'? factor)*
//   factor     := ('x'|'y') ('^' int)?
//   coeff      := int ('/' posint)?
// Whitespace insignificant; variables are fixed as x and y.
class PolyParser
{
public:
    explicit PolyParser(const std::string &text, bool allow_negative)
        : m_text(text), m_allow_negative(allow_negative)
    {
    }

    LaurentPoly2 parse()
    {
        LaurentPoly2 out = expression();
        skip_ws();
        if (m_pos != m_text.size()) {
            throw ParseError("unexpected character '" + std::string(1, m_text[m_pos]) + "'", m_pos);
        }
        return out;
    }

private:
    LaurentPoly2 expression()
    {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = (m_text[m_pos] == '-');
            ++m_pos;
        }
        LaurentPoly2 out = term(negate);
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') {
                break;
            }
            ++m_pos;
            out += term(c == '-');
        }
        return out;
    }

    LaurentPoly2 term(bool negate)
    {
        skip_ws();
        if (m_pos == m_text.size()) {
            throw ParseError("expected term", m_pos);
        }
        Rational coeff(1);
        LatticePoint exp{0, 0};
        bool saw_anything = false;

        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
            saw_anything = true;
        }
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++m_pos;
                skip_ws();
            }
            const char c = peek();
            if (c != 'x' && c != 'y') {
                break;
            }
            ++m_pos;
            std::int64_t e = 1;
            skip_ws();
            if (peek() == '^') {
                ++m_pos;
                e = parse_int();
            }
            if (e < 0 && !m_allow_negative) {
                throw ParseError("negative exponent not allowed in germ input", m_pos);
            }
            if (c == 'x') {
                exp.x += e;
            } else {
                exp.y += e;
            }
            saw_anything = true;
        }
        if (!saw_anything) {
            throw ParseError("expected coefficient or variable", m_pos);
        }
        return LaurentPoly2::monomial(exp, negate ? -coeff : coeff);
    }

    Rational parse_coeff()
    {
        Integer num = parse_uint();
        skip_ws();
        if (peek() == '/') {
            ++m_pos;
            skip_ws();
            const std::size_t at = m_pos;
            Integer den = parse_uint();
            if (den == 0) {
                throw ParseError("zero denominator", at);
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::int64_t parse_int()
    {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++m_pos;
        }
        Integer v = parse_uint();
        if (v > 1000000) {
            throw ParseError("exponent too large", m_pos);
        }
        auto out = static_cast<std::int64_t>(v);
        return neg ? -out : out;
    }

    Integer parse_uint()
    {
        skip_ws();
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (m_pos == start) {
            throw ParseError("expected integer", start);
        }
        return Integer(m_text.substr(start, m_pos - start));
    }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    char peek() const { return m_pos < m_text.size() ? m_text[m_pos] : '\0'; }

    const std::string &m_text;
    bool m_allow_negative;
    std::size_t m_pos = 0;
};

} // namespace detail

/// Parses a germ in the variables x, y. Exponents must be >= 0.
inline LaurentPoly2 parse_poly(const std::string &text)
{
    return detail::PolyParser(text, false).parse();
}

/// Parses a Laurent polynomial; negative exponents are allowed.
inline LaurentPoly2 parse_laurent(const std::string &text)
{
    return detail::PolyParser(text, true).parse();
}

} // namespace npser

#endif
