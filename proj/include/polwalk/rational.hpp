#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "polwalk/errors.hpp"

namespace polwalk {

using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p/q" or a bare integer "p".
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long p = std::stoll(s.substr(0, slash));
        long long q = std::stoll(s.substr(slash + 1));
        if (q == 0) throw input_error("rational with zero denominator: " + s);
        return Rat(p, q);
    } catch (const std::invalid_argument&) {
        throw input_error("not a rational: " + s);
    } catch (const std::out_of_range&) {
        throw input_error("rational out of range: " + s);
    }
}

// Largest integer s with s*s <= n.
inline long long isqrt(long long n) {
    if (n < 0) throw internal_error("isqrt of negative number");
    if (n == 0) return 0;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

}  // namespace polwalk
