#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace insdel {

/// Exact rational arithmetic. Distances, thresholds and error fractions are
/// never represented as floating point: the decoder takes argmins over these
/// values and rounding could flip a decision.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(text), 1);
        }
        std::int64_t num = std::stoll(text.substr(0, slash));
        std::int64_t den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("zero denominator in rational: " + text);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

/// floor(n * r) for non-negative n and r.
inline std::int64_t floor_scaled(std::int64_t n, const Rational& r) {
    return (n * r.numerator()) / r.denominator();
}

/// ceil(n * r) for non-negative n and r.
inline std::int64_t ceil_scaled(std::int64_t n, const Rational& r) {
    std::int64_t num = n * r.numerator();
    std::int64_t den = r.denominator();
    return (num + den - 1) / den;
}

}  // namespace insdel
