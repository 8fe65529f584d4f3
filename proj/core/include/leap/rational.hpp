#ifndef LEAP_RATIONAL_HPP
#define LEAP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace leap {

// Continued-fraction convergents outgrow 64 bits well inside the ranges the
// verification sweeps cover, so every rational quantity uses arbitrary
// precision.  No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const BigRat& r) { return boost::multiprecision::denominator(r); }

}  // namespace leap

#endif  // LEAP_RATIONAL_HPP
