#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace kummerlab {

// Exact arithmetic everywhere: ball-quotient / BMY verdicts are equalities and
// strict inequalities, so no floating point enters any invariant computation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("expected integral value, got " + r.str());
    return numerator(r);
}

// Machine format for rationals: always "p/q", integers print bare.
inline std::string fraction_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rat(p, q);
}

// Display-only decimal approximation (never used in computations or machine formats).
inline double approx(const Rat& r) { return r.convert_to<double>(); }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int binom2(const Int& n) { return n * (n - 1) / 2; }

} // namespace kummerlab
