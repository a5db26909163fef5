#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace decomp {

// Exact rational arithmetic for probability-like quantities. Arbitrary
// precision so that enumeration counts (up to n^(k+m)) never overflow.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& q) {
    return q.template convert_to<double>();
}

inline std::string num_string(const Rational& q) {
    return numerator(q).str();
}

inline std::string den_string(const Rational& q) {
    return denominator(q).str();
}

}  // namespace decomp
