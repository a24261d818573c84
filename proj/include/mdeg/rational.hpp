#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace mdeg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Next non-blank, non-comment ('#') line of a text-format stream; empty
/// string at end of input.
inline std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        return line;
    }
    return {};
}

/// Thrown when a text input does not match one of the library's file formats.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p", "-p" or "p/q" into an exact rational. Throws ParseError on
/// malformed tokens or zero denominators.
inline Rational parse_rational(const std::string& token) {
    const auto slash = token.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(token));
        }
        Integer num(token.substr(0, slash));
        Integer den(token.substr(slash + 1));
        if (den == 0) {
            throw ParseError("zero denominator in '" + token + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational token '" + token + "': " + e.what());
    }
}

inline std::string rational_to_string(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

} // namespace mdeg
