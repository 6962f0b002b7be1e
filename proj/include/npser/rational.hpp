#ifndef NPSER_RATIONAL_HPP
#define NPSER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace npser {

using Integer = boost::multiprecision::cpp_int;

// Always stored reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational &r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

// Parses "p" or "p/q" (q > 0). Used by the JSON readers.
inline Rational rational_from_string(const std::string &s)
{
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) {
            throw std::invalid_argument("denominator must be positive");
        }
        return Rational(num, den);
    } catch (const std::runtime_error &) {
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    }
}

} // namespace npser

#endif
