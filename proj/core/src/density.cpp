#include "turan/density.hpp"

#include <algorithm>

namespace turan {

const Rational& Scalar::rat() const {
  if (!exact_) throw validation_error("Scalar: value is not exact");
  return rat_;
}

std::string Scalar::str(int digits) const {
  return exact_ ? format_rational(rat_) : format_bigfloat(big_, digits);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(rat_ + o.rat_);
  return Scalar(big() + o.big());
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(rat_ - o.rat_);
  return Scalar(big() - o.big());
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(rat_ * o.rat_);
  return Scalar(big() * o.big());
}

namespace {

void check_unit_interval(const Scalar& v, const char* what) {
  if (v.exact()) {
    if (v.rat() < 0 || v.rat() > 1)
      throw validation_error(std::string(what) + ": value outside [0,1]");
  } else {
    // Rounding from our own float chains stays far inside 1e-40 of [0,1].
    if (v.big() < -1e-40 || v.big() > BigFloat(1) + BigFloat(1e-40))
      throw validation_error(std::string(what) + ": value outside [0,1]");
  }
}

Rational star_factor(int r, int s) {
  // C(r+s,r) * r^r * s^s / (r+s)^(r+s); int_pow(0,0) = 1 covers the unit.
  return Rational(binomial(r + s, r) * int_pow(Int(r), r) * int_pow(Int(s), s),
                  int_pow(Int(r + s), r + s));
}

}  // namespace

Density make_density(Scalar value, int uniformity) {
  if (uniformity < 0) throw validation_error("Density: negative uniformity");
  check_unit_interval(value, "Density");
  if (uniformity == 0) {
    bool is_one = value.exact() ? value.rat() == 1 : value.big() == 1;
    if (!is_one)
      throw validation_error("Density: uniformity 0 is reserved for the unit (1,0)");
  }
  return Density{std::move(value), uniformity};
}

Density parse_density(const std::string& text) {
  auto open = text.find('(');
  auto comma = text.rfind(',');
  auto close = text.rfind(')');
  if (open == std::string::npos || comma == std::string::npos ||
      close == std::string::npos || !(open < comma && comma < close))
    throw validation_error("parse_density: expected '(value,uniformity)', got '" + text + "'");
  Rational value = parse_rational(text.substr(open + 1, comma - open - 1));
  int uniformity = std::stoi(text.substr(comma + 1, close - comma - 1));
  return make_density(Scalar(value), uniformity);
}

Density star_op(const Density& a, const Density& b) {
  Scalar value = a.value * b.value * Scalar(star_factor(a.uniformity, b.uniformity));
  return make_density(std::move(value), a.uniformity + b.uniformity);
}

Density circ_op(const Density& a, const Density& b) {
  Scalar value = otimes2(a.value, b.value) * Scalar(star_factor(a.uniformity, b.uniformity));
  return make_density(std::move(value), a.uniformity + b.uniformity);
}

BigFloat oplus_big(const BigFloat& alpha, const BigFloat& beta, int r) {
  if (r < 2) throw validation_error("oplus: uniformity must be >= 2");
  if (alpha == 1 || beta == 1) return BigFloat(1);
  BigFloat ca = 1 - alpha, cb = 1 - beta;
  BigFloat root_sum = nth_root(ca, r - 1) + nth_root(cb, r - 1);
  return 1 - ca * cb / boost::multiprecision::pow(root_sum, r - 1);
}

Scalar oplus(const Scalar& alpha, const Scalar& beta, int r) {
  if (r < 2) throw validation_error("oplus: uniformity must be >= 2");
  check_unit_interval(alpha, "oplus");
  check_unit_interval(beta, "oplus");
  bool a_one = alpha.exact() ? alpha.rat() == 1 : alpha.big() == 1;
  bool b_one = beta.exact() ? beta.rat() == 1 : beta.big() == 1;
  if (a_one || b_one) return Scalar(Rational(1));
  if (r == 2 && alpha.exact() && beta.exact()) {
    // (r-1)-st roots are trivial, so the value stays rational.
    Rational ca = 1 - alpha.rat(), cb = 1 - beta.rat();
    return Scalar(1 - ca * cb / (ca + cb));
  }
  return Scalar(oplus_big(alpha.big(), beta.big(), r));
}

double oplus(double alpha, double beta, int r) {
  return to_double(oplus_big(BigFloat(alpha), BigFloat(beta), r));
}

Scalar g_func(const Scalar& alpha, const Scalar& beta, int r, const Scalar& x) {
  if (r < 2) throw validation_error("g_func: uniformity must be >= 2");
  if (alpha.exact() && beta.exact() && x.exact()) {
    Rational xv = x.rat();
    return Scalar(1 - (1 - alpha.rat()) * rat_pow(xv, r) -
                  (1 - beta.rat()) * rat_pow(1 - xv, r));
  }
  BigFloat xv = x.big();
  return Scalar(1 - (1 - alpha.big()) * boost::multiprecision::pow(xv, r) -
                (1 - beta.big()) * boost::multiprecision::pow(1 - xv, r));
}

Scalar g_argmax(const Scalar& alpha, const Scalar& beta, int r) {
  if (r < 2) throw validation_error("g_argmax: uniformity must be >= 2");
  check_unit_interval(alpha, "g_argmax");
  check_unit_interval(beta, "g_argmax");
  bool a_one = alpha.exact() ? alpha.rat() == 1 : alpha.big() == 1;
  bool b_one = beta.exact() ? beta.rat() == 1 : beta.big() == 1;
  if (a_one && b_one)
    throw validation_error("g_argmax: undefined at alpha = beta = 1");
  if (r == 2 && alpha.exact() && beta.exact()) {
    Rational ca = 1 - alpha.rat(), cb = 1 - beta.rat();
    return Scalar(cb / (ca + cb));
  }
  BigFloat ra = nth_root(1 - alpha.big(), r - 1);
  BigFloat rb = nth_root(1 - beta.big(), r - 1);
  return Scalar(rb / (ra + rb));
}

Scalar h_map(const Scalar& alpha, int r) {
  if (r < 2) throw validation_error("h_map: uniformity must be >= 2");
  check_unit_interval(alpha, "h_map");
  bool a_one = alpha.exact() ? alpha.rat() == 1 : alpha.big() == 1;
  if (a_one) throw validation_error("h_map: alpha = 1 maps to infinity");
  if (r == 2 && alpha.exact()) return Scalar(Rational(1) / (1 - alpha.rat()));
  return Scalar(nth_root(1 / (1 - alpha.big()), r - 1));
}

Scalar h_inv(const Scalar& h, int r) {
  if (r < 2) throw validation_error("h_inv: uniformity must be >= 2");
  bool below = h.exact() ? h.rat() < 1 : h.big() < 1;
  if (below) throw validation_error("h_inv: argument must be >= 1");
  if (h.exact()) return Scalar(1 - Rational(1) / rat_pow(h.rat(), r - 1));
  return Scalar(1 - 1 / boost::multiprecision::pow(h.big(), r - 1));
}

Scalar otimes2(const Scalar& alpha, const Scalar& beta) {
  return alpha + beta - alpha * beta;
}

Scalar j_map(const Scalar& alpha, int r) {
  if (r < 2) throw validation_error("j_map: uniformity must be >= 2");
  check_unit_interval(alpha, "j_map");
  if (alpha.exact())
    return Scalar(rat_pow(Rational(r - 1) / (r - alpha.rat()), r - 1));
  return Scalar(boost::multiprecision::pow(BigFloat(r - 1) / (r - alpha.big()), r - 1));
}

WeightSplit weight_split_max(int r, int s) {
  if (r < 1 || s < 1) throw validation_error("weight_split_max: need r, s >= 1");
  return WeightSplit{Rational(r, r + s), star_factor(r, s) / Rational(binomial(r + s, r))};
}

Scalar oplus_increment_bound(const Scalar& alpha, const Scalar& beta,
                             const Scalar& eps, int r) {
  if (r < 2) throw validation_error("oplus_increment_bound: uniformity must be >= 2");
  check_unit_interval(alpha, "oplus_increment_bound");
  check_unit_interval(beta, "oplus_increment_bound");
  bool eps_neg = eps.exact() ? eps.rat() < 0 : eps.big() < 0;
  if (eps_neg) throw validation_error("oplus_increment_bound: eps must be >= 0");
  if (r == 2 && beta.exact() && eps.exact()) {
    Rational t = 1 - beta.rat();
    return Scalar(eps.rat() * rat_pow(t / (1 + t), 2));
  }
  BigFloat t = nth_root(1 - beta.big(), r - 1);
  return Scalar(eps.big() * boost::multiprecision::pow(t / (1 + t), r));
}

Density jump_image(const Rational& c, int r, int q) {
  if (r < 2 || q < r) throw validation_error("jump_image: need q >= r >= 2");
  Rational value = c * Rational(factorial(r), int_pow(Int(r), r));
  if (value < 0 || value > 1)
    throw validation_error("jump_image: c*r!/r^r outside [0,1]");
  Density d = make_density(Scalar(value), r);
  const Density one_edge = make_density(Scalar(Rational(1)), 1);
  for (int step = r; step < q; ++step) {
    d = star_op(d, one_edge);
    if (d.value.rat() > 1)
      throw validation_error("jump_image: intermediate value above 1");
  }
  return d;
}

OplusAccumulator::OplusAccumulator(int r) : r_(r) {
  if (r < 2) throw validation_error("OplusAccumulator: uniformity must be >= 2");
}

void OplusAccumulator::add(const Scalar& alpha) {
  check_unit_interval(alpha, "OplusAccumulator");
  ++count_;
  if (saturated_) return;
  bool a_one = alpha.exact() ? alpha.rat() == 1 : alpha.big() == 1;
  if (a_one) {
    saturated_ = true;
    return;
  }
  h_total_ += h_map(alpha, r_).big();
}

Scalar OplusAccumulator::value() const {
  if (count_ == 0) throw validation_error("OplusAccumulator: empty chain");
  if (saturated_) return Scalar(Rational(1));
  return h_inv(Scalar(h_total_), r_);
}

}  // namespace turan
