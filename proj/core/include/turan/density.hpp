#ifndef TURAN_DENSITY_HPP
#define TURAN_DENSITY_HPP

#include "turan/numeric.hpp"

#include <string>

namespace turan {

// Number that is an exact rational whenever the producing operation is closed
// on rationals, and a ~166-bit float otherwise (root-taking operations).
class Scalar {
 public:
  Scalar() : exact_(true), rat_(0) {}
  Scalar(int v) : exact_(true), rat_(v) {}
  Scalar(const Rational& r) : exact_(true), rat_(r) {}
  explicit Scalar(const BigFloat& b) : exact_(false), big_(b) {}
  static Scalar from_double(double v) { return Scalar(BigFloat(v)); }

  bool exact() const { return exact_; }
  const Rational& rat() const;
  BigFloat big() const { return exact_ ? to_bigfloat(rat_) : big_; }
  double dbl() const { return exact_ ? to_double(rat_) : to_double(big_); }

  // "3/8" when exact, decimal otherwise.
  std::string str(int digits = 30) const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  bool operator==(int v) const { return exact_ ? rat_ == v : big_ == v; }

 private:
  bool exact_;
  Rational rat_;
  BigFloat big_;
};

// A point of the graded density set: value in [0,1] plus a uniformity.
// Uniformity 0 is the unit and forces value 1.
struct Density {
  Scalar value;
  int uniformity = 0;
};

Density make_density(Scalar value, int uniformity);
Density parse_density(const std::string& text);  // "(3/8,3)"

// (a,r) * (b,s) = (a*b*C(r+s,r)*r^r*s^s/(r+s)^(r+s), r+s), with 0^0 = 1 so
// that (1,0) is the unit.
Density star_op(const Density& a, const Density& b);

// (a,r) o (b,s): as star_op but on a+b-ab.
Density circ_op(const Density& a, const Density& b);

// a ⊕_r b = 1 - (1-a)(1-b) / ((1-a)^{1/(r-1)} + (1-b)^{1/(r-1)})^{r-1},
// with 1 ⊕_r 1 = 1. Exact for r = 2; high-precision float for r >= 3.
Scalar oplus(const Scalar& alpha, const Scalar& beta, int r);
BigFloat oplus_big(const BigFloat& alpha, const BigFloat& beta, int r);
double oplus(double alpha, double beta, int r);

// g_{a,b}(x) = 1 - (1-a)x^r - (1-b)(1-x)^r; its maximum over [0,1] is
// a ⊕_r b, attained at x_{a,b} (undefined for a = b = 1).
Scalar g_func(const Scalar& alpha, const Scalar& beta, int r, const Scalar& x);
Scalar g_argmax(const Scalar& alpha, const Scalar& beta, int r);

// h(x) = (1/(1-x))^{1/(r-1)}: semigroup isomorphism from ([0,1), ⊕_r) to
// ([1,∞), +). h_map throws on alpha = 1.
Scalar h_map(const Scalar& alpha, int r);
Scalar h_inv(const Scalar& h, int r);

// a ⊗_2 b = a + b - ab.
Scalar otimes2(const Scalar& alpha, const Scalar& beta);

// j(x) = ((r-1)/(r-x))^{r-1}; exact on rationals.
Scalar j_map(const Scalar& alpha, int r);

// argmax and maximum of x^r (1-x)^s over [0,1].
struct WeightSplit {
  Rational x0;
  Rational fmax;
};
WeightSplit weight_split_max(int r, int s);

// Guaranteed gain of ⊕_r under increasing the first argument by eps:
// a ⊕_r b >= (a - eps) ⊕_r b + bound.
Scalar oplus_increment_bound(const Scalar& alpha, const Scalar& beta,
                             const Scalar& eps, int r);

// Fold (c*r!/r^r, r) with (1,1) q-r times; lands on (c*q!/q^q, q) exactly.
Density jump_image(const Rational& c, int r, int q);

// Drift-free ⊕_r chains: accumulate in h-coordinates where composition is
// exact addition; convert back once at the end.
class OplusAccumulator {
 public:
  explicit OplusAccumulator(int r);
  void add(const Scalar& alpha);
  Scalar value() const;  // throws if nothing was added
  BigFloat h_total() const { return h_total_; }
  int count() const { return count_; }

 private:
  int r_;
  int count_ = 0;
  bool saturated_ = false;  // some alpha was 1
  BigFloat h_total_ = 0;
};

}  // namespace turan

#endif
