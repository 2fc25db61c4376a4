#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace specktral {

// Exact arithmetic used for every count and identity side.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(std::uint64_t base, std::size_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q", or "p" for integers.
inline std::string to_string(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

}  // namespace specktral
