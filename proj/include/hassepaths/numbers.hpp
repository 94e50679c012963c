#pragma once

// Exact arithmetic kernel shared by every module: arbitrary-precision
// integers and rationals, binomial coefficients, and the few helpers
// (exact division, log of a huge integer) the counting routes lean on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hassepaths {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a brute-force route is asked for a size beyond its cap and
// the caller did not explicitly force it.  Carries a ready-to-print message.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a lattice-closure computation (meet/join re-encoding) leaves
// the path class.  This would contradict the lattice property, so reaching
// it means either bad inputs or a genuine internal error.
struct ClosureViolation : std::logic_error {
  explicit ClosureViolation(const std::string& what) : std::logic_error(what) {}
};

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

inline BigInt factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Quotient a/b, insisting the division is exact.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("exact_div by zero");
  BigInt q = a / b;
  if (q * b != a) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

// A rational that must in fact be an integer (used by formulas that are
// stated with fractional intermediate factors).
inline BigInt rational_to_integer(const Rational& r) {
  if (denominator(r) != 1)
    throw std::logic_error("rational_to_integer: denominator is not 1");
  return numerator(r);
}

// Natural log of a positive big integer, accurate to ~1e-15 relative error
// even when the value is far beyond double range: take the top 63 bits and
// account for the shift as a multiple of log 2.
inline double log_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log_big of non-positive value");
  const unsigned bits = boost::multiprecision::msb(v);  // floor(log2 v)
  if (bits < 63) return std::log(v.convert_to<double>());
  const unsigned shift = bits - 62;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_fraction(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hassepaths
