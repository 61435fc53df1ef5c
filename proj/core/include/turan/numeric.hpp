#ifndef TURAN_NUMERIC_HPP
#define TURAN_NUMERIC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 50 decimal digits, ~166-bit mantissa. Used wherever roots make a value
// irrational and exact rationals are not available.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Bad input: wrong edge size, dimension mismatch, domain violation, ...
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance too large for the exact/desk-scale algorithms.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int factorial(int n);
Int binomial(int n, int k);
Int int_pow(const Int& base, int exp);
Rational rat_pow(const Rational& base, int exp);  // exp >= 0

BigFloat to_bigfloat(const Rational& r);
double to_double(const Rational& r);
double to_double(const BigFloat& x);

// x >= 0, n >= 1
BigFloat nth_root(const BigFloat& x, int n);

// Accepts "3/8", "-2", "0.25". Throws validation_error on junk.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);
std::string format_bigfloat(const BigFloat& x, int digits);

// Deterministic fixed-notation formatting for report output.
std::string format_double(double x, int digits = 12);

// splitmix64 hash used to derive independent RNG streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace turan

#endif
