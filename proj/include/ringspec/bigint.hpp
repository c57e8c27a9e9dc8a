#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ringspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline BigInt floor_rational(const BigRational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);  // always > 0
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline BigInt ceil_rational(const BigRational& x) {
    return -floor_rational(-x);
}

inline std::string dec(const BigInt& v) { return v.str(); }

/// "num/den" with den omitted when 1.
inline std::string dec(const BigRational& v) {
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

}  // namespace ringspec
