#pragma once

// Exact integers and unreduced formal fractions.
//
// A FormalFraction is a numerator/denominator pair that is never divided by
// a common factor: x + y = (x.num*y.den + x.den*y.num) / (x.den*y.den) even
// when gcd(x.den, y.den) > 1. Continued-fraction evaluation done this way
// lands exactly on the convergent pairs (p_n, q_n) of the three-term
// recurrences, which is what the identity checks in this library assert.
// Callers that want a cancelled value ask for a copy via reduced().

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hosoya {

// Arbitrary-precision signed integer; every count in this library is exact.
using BigInt = boost::multiprecision::cpp_int;

struct FormalFraction {
  BigInt num;
  BigInt den;  // > 0 always; the sign lives in num

  FormalFraction() : num(0), den(1) {}
  FormalFraction(BigInt n) : num(std::move(n)), den(1) {}
  FormalFraction(long long n) : num(n), den(1) {}
  FormalFraction(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den <= 0) {
      throw std::invalid_argument("FormalFraction: denominator must be positive");
    }
  }
};

// Pair identity, not rational equality: 1/2 != 2/4.
inline bool operator==(const FormalFraction& a, const FormalFraction& b) {
  return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const FormalFraction& a, const FormalFraction& b) { return !(a == b); }

inline FormalFraction operator+(const FormalFraction& x, const FormalFraction& y) {
  return {x.num * y.den + x.den * y.num, x.den * y.den};
}

inline FormalFraction operator-(const FormalFraction& x, const FormalFraction& y) {
  return {x.num * y.den - x.den * y.num, x.den * y.den};
}

// b / x for an integer b: the "partial numerator over tail" step of a
// continued fraction. A zero tail has no reciprocal.
inline FormalFraction over(const BigInt& b, const FormalFraction& x) {
  if (x.num == 0) {
    throw std::domain_error("over: division by a zero fraction (degenerate tail)");
  }
  if (x.num < 0) return {-b * x.den, -x.num};
  return {b * x.den, x.num};
}

// Reduced copy; the input is left untouched.
inline FormalFraction reduced(const FormalFraction& x) {
  using boost::multiprecision::abs;
  using boost::multiprecision::gcd;
  BigInt g = gcd(abs(x.num), x.den);
  if (g == 0) return {BigInt(0), BigInt(1)};
  return {x.num / g, x.den / g};
}

inline std::string to_string(const FormalFraction& x) {
  return x.num.str() + "/" + x.den.str();
}

inline std::ostream& operator<<(std::ostream& os, const FormalFraction& x) {
  return os << x.num << '/' << x.den;
}

}  // namespace hosoya
