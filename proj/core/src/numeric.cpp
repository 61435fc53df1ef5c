#include "turan/numeric.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace turan {

Int factorial(int n) {
  if (n < 0) throw validation_error("factorial: negative argument");
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int num = 1;
  for (int i = 0; i < k; ++i) {
    num *= (n - i);
    num /= (i + 1);  // exact: product of i+1 consecutive integers
  }
  return num;
}

Int int_pow(const Int& base, int exp) {
  if (exp < 0) throw validation_error("int_pow: negative exponent");
  Int result = 1, b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

Rational rat_pow(const Rational& base, int exp) {
  if (exp < 0) throw validation_error("rat_pow: negative exponent");
  Rational result = 1, b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

BigFloat to_bigfloat(const Rational& r) {
  return BigFloat(numerator(r)) / BigFloat(denominator(r));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(const BigFloat& x) { return x.convert_to<double>(); }

BigFloat nth_root(const BigFloat& x, int n) {
  if (n < 1) throw validation_error("nth_root: order must be >= 1");
  if (x < 0) throw validation_error("nth_root: negative radicand");
  if (n == 1 || x == 0 || x == 1) return x;
  return boost::multiprecision::pow(x, BigFloat(1) / n);
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw validation_error("parse_rational: empty input");

  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) throw validation_error("parse_rational: zero denominator");
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      int frac_len = static_cast<int>(s.size() - dot - 1);
      if (digits.empty() || digits == "-" || digits == "+")
        throw validation_error("parse_rational: bad decimal '" + text + "'");
      return Rational(Int(digits), int_pow(10, frac_len));
    }
    return Rational(Int(s));
  } catch (const std::exception&) {
    throw validation_error("parse_rational: cannot parse '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

std::string format_bigfloat(const BigFloat& x, int digits) {
  digits = std::max(1, std::min(digits, 50));
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace turan
