#include <doctest.h>

#include "turan/density.hpp"

#include <random>

using namespace turan;

TEST_SUITE_BEGIN("density");

namespace {

Rational rq(int num, int den) { return Rational(num, den); }

bool big_close(const BigFloat& a, const BigFloat& b, double tol = 1e-12) {
  return boost::multiprecision::abs(a - b) <= BigFloat(tol);
}

}  // namespace

TEST_CASE("density invariants") {
  CHECK_THROWS_AS(make_density(Scalar(rq(3, 2)), 2), validation_error);
  CHECK_THROWS_AS(make_density(Scalar(rq(-1, 2)), 2), validation_error);
  CHECK_THROWS_AS(make_density(Scalar(rq(1, 2)), 0), validation_error);
  CHECK_THROWS_AS(make_density(Scalar(rq(1, 2)), -1), validation_error);
  CHECK(make_density(Scalar(Rational(1)), 0).uniformity == 0);

  Density d = parse_density("(5/9, 3)");
  CHECK(d.value.rat() == rq(5, 9));
  CHECK(d.uniformity == 3);
  CHECK_THROWS_AS(parse_density("5/9"), validation_error);
}

TEST_CASE("star arithmetic") {
  Density one1 = make_density(Scalar(Rational(1)), 1);
  Density prod = star_op(one1, one1);
  CHECK(prod.value.rat() == rq(1, 2));
  CHECK(prod.uniformity == 2);

  // (1,0) is a two-sided unit
  Density unit = make_density(Scalar(Rational(1)), 0);
  for (auto [num, den, r] : std::vector<std::array<int, 3>>{{5, 9, 3}, {3, 8, 3}, {1, 2, 2}}) {
    Density d = make_density(Scalar(rq(num, den)), r);
    Density left = star_op(unit, d), right = star_op(d, unit);
    CHECK(left.value.rat() == d.value.rat());
    CHECK(left.uniformity == d.uniformity);
    CHECK(right.value.rat() == d.value.rat());
    CHECK(right.uniformity == d.uniformity);
  }

  // (1,1) * (x,r) = (x r^r/(r+1)^r, r+1)
  Density x3 = make_density(Scalar(rq(5, 9)), 3);
  Density stepped = star_op(one1, x3);
  CHECK(stepped.value.rat() == rq(5, 9) * rq(27, 64));
  CHECK(stepped.uniformity == 4);
}

TEST_CASE("oplus closed forms") {
  // clique coordinates at r = 2, exactly
  for (int a = 1; a <= 20; ++a)
    for (int b = 1; b <= 20; ++b) {
      Scalar sum = oplus(Scalar(1 - rq(1, a)), Scalar(1 - rq(1, b)), 2);
      CHECK(sum.exact());
      CHECK(sum.rat() == 1 - Rational(1, a + b));
    }
  CHECK(oplus(Scalar(rq(1, 2)), Scalar(rq(2, 3)), 2).rat() == rq(4, 5));

  // alpha (+)_3 alpha = (3+alpha)/4
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    Rational alpha(static_cast<int>(rng() % 100), 100);
    BigFloat got = oplus(Scalar(alpha), Scalar(alpha), 3).big();
    CHECK(big_close(got, to_bigfloat((3 + alpha) / 4)));
  }

  // convention and boundary behavior
  CHECK(oplus(Scalar(Rational(1)), Scalar(Rational(1)), 4).rat() == 1);
  CHECK(oplus(Scalar(Rational(1)), Scalar(rq(1, 3)), 5).rat() == 1);
  CHECK(oplus(Scalar(Rational(0)), Scalar(Rational(0)), 2).rat() == rq(1, 2));

  // the frozen irrational example, r = 4
  CHECK(big_close(oplus(Scalar(rq(1, 2)), Scalar(Rational(0)), 4).big(),
                  BigFloat("0.913359650035042278410929797574")));

  // continuity rate at (1,1): 1 - (x (+)_r x) == (1-x)/2^{r-1} for x = 1-1/n
  for (int r : {2, 3, 4}) {
    for (int n = 2; n <= 40; n *= 2) {
      Scalar x(1 - Rational(1, n));
      BigFloat defect = 1 - oplus(x, x, r).big();
      BigFloat cap = to_bigfloat(Rational(1, n) / int_pow(Int(2), r - 1));
      CHECK(defect <= cap + BigFloat(1e-40));
    }
  }

  CHECK_THROWS_AS(oplus(Scalar(rq(1, 2)), Scalar(rq(1, 2)), 1), validation_error);
}

TEST_CASE("g function and its maximizer") {
  // symmetric case peaks at 1/2
  CHECK(g_argmax(Scalar(rq(1, 3)), Scalar(rq(1, 3)), 4).big() == BigFloat(0.5));
  CHECK(g_argmax(Scalar(rq(1, 4)), Scalar(rq(1, 4)), 2).rat() == rq(1, 2));

  // g(0,0,2,x) = 2x(1-x), max 1/2 at 1/2
  CHECK(g_func(Scalar(Rational(0)), Scalar(Rational(0)), 2, Scalar(rq(3, 10))).rat() ==
        2 * rq(3, 10) * rq(7, 10));
  CHECK(g_func(Scalar(Rational(0)), Scalar(Rational(0)), 2, Scalar(rq(1, 2))).rat() == rq(1, 2));

  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    int r = 2 + static_cast<int>(rng() % 4);
    Rational a(static_cast<int>(rng() % 100), 101);
    Rational b(static_cast<int>(rng() % 100), 101);
    Scalar xm = g_argmax(Scalar(a), Scalar(b), r);
    CHECK(big_close(g_func(Scalar(a), Scalar(b), r, xm).big(),
                    oplus(Scalar(a), Scalar(b), r).big()));
  }

  CHECK_THROWS_AS(g_argmax(Scalar(Rational(1)), Scalar(Rational(1)), 3), validation_error);
}

TEST_CASE("h map pair") {
  for (int k = 1; k <= 12; ++k)
    CHECK(h_map(Scalar(1 - rq(1, k)), 2).rat() == k);
  for (int r = 2; r <= 6; ++r)
    CHECK(h_map(Scalar(Rational(0)), r).big() == BigFloat(1));

  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    int r = 2 + static_cast<int>(rng() % 4);
    Rational a(static_cast<int>(rng() % 100), 100);
    Rational b(static_cast<int>(rng() % 100), 100);
    if (a == 1 || b == 1) continue;
    BigFloat lhs = h_map(oplus(Scalar(a), Scalar(b), r), r).big();
    BigFloat rhs = h_map(Scalar(a), r).big() + h_map(Scalar(b), r).big();
    CHECK(big_close(lhs, rhs));
    CHECK(big_close(h_inv(h_map(Scalar(a), r), r).big(), to_bigfloat(a)));
  }

  CHECK_THROWS_AS(h_map(Scalar(Rational(1)), 3), validation_error);
  CHECK_THROWS_AS(h_inv(Scalar(rq(1, 2)), 3), validation_error);
}

TEST_CASE("otimes2 and the r=2 semiring") {
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b)
      CHECK(otimes2(Scalar(1 - rq(1, a)), Scalar(1 - rq(1, b))).rat() ==
            1 - Rational(1, Int(a) * b));
  CHECK(otimes2(Scalar(rq(1, 2)), Scalar(rq(1, 2))).rat() == rq(3, 4));
  CHECK(otimes2(Scalar(rq(2, 7)), Scalar(Rational(0))).rat() == rq(2, 7));

  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    Rational a(static_cast<int>(rng() % 30), 30);
    Rational b(static_cast<int>(rng() % 30), 30);
    Rational c(static_cast<int>(rng() % 30), 30);
    Scalar lhs = otimes2(Scalar(a), oplus(Scalar(b), Scalar(c), 2));
    Scalar rhs = oplus(otimes2(Scalar(a), Scalar(b)), otimes2(Scalar(a), Scalar(c)), 2);
    CHECK(lhs.exact());
    CHECK(rhs.exact());
    CHECK(lhs.rat() == rhs.rat());
  }
}

TEST_CASE("circ arithmetic") {
  Density zero1 = make_density(Scalar(Rational(0)), 1);
  Density c = circ_op(zero1, zero1);
  CHECK(c.value.rat() == 0);
  CHECK(c.uniformity == 2);

  Density one1 = make_density(Scalar(Rational(1)), 1);
  Density d = circ_op(one1, one1);
  CHECK(d.value.rat() == rq(1, 2));
  CHECK(d.uniformity == 2);

  // commutative, uniformity adds
  Density a = make_density(Scalar(rq(3, 8)), 3);
  Density b = make_density(Scalar(rq(1, 2)), 2);
  Density ab = circ_op(a, b), ba = circ_op(b, a);
  CHECK(ab.value.rat() == ba.value.rat());
  CHECK(ab.uniformity == 5);
}

TEST_CASE("j map") {
  CHECK(j_map(Scalar(Rational(0)), 2).rat() == rq(1, 2));
  CHECK(j_map(Scalar(rq(1, 2)), 2).rat() == rq(2, 3));
  CHECK(j_map(Scalar(rq(2, 3)), 2).rat() == rq(3, 4));
  for (int r = 2; r <= 6; ++r) CHECK(j_map(Scalar(Rational(1)), r).rat() == 1);
  CHECK(j_map(Scalar(Rational(0)), 3).rat() == rq(4, 9));
}

TEST_CASE("weight split maximum") {
  auto s11 = weight_split_max(1, 1);
  CHECK(s11.x0 == rq(1, 2));
  CHECK(s11.fmax == rq(1, 4));
  auto s22 = weight_split_max(2, 2);
  CHECK(s22.x0 == rq(1, 2));
  CHECK(s22.fmax == rq(1, 16));
  auto s32 = weight_split_max(3, 2);
  auto s23 = weight_split_max(2, 3);
  CHECK(s32.fmax == s23.fmax);
  CHECK(s32.x0 == 1 - s23.x0);
  CHECK_THROWS_AS(weight_split_max(0, 1), validation_error);
}

TEST_CASE("oplus increment bound") {
  CHECK(oplus_increment_bound(Scalar(rq(1, 2)), Scalar(rq(1, 3)), Scalar(Rational(0)), 3).big() == 0);
  CHECK(oplus_increment_bound(Scalar(rq(1, 2)), Scalar(Rational(0)), Scalar(rq(1, 5)), 2).rat() ==
        rq(1, 20));  // eps/4

  std::mt19937_64 rng(59);
  for (int t = 0; t < 80; ++t) {
    int r = 2 + static_cast<int>(rng() % 4);
    Rational a(static_cast<int>(rng() % 100), 100);
    Rational b(static_cast<int>(rng() % 100), 100);
    Rational eps = a * Rational(static_cast<int>(rng() % 101), 100);
    BigFloat lhs = oplus(Scalar(a), Scalar(b), r).big();
    BigFloat rhs = oplus(Scalar(a - eps), Scalar(b), r).big() +
                   oplus_increment_bound(Scalar(a), Scalar(b), Scalar(eps), r).big();
    CHECK(lhs + BigFloat(1e-12) >= rhs);
  }
}

TEST_CASE("jump images") {
  CHECK(jump_image(1, 3, 4).value.rat() == rq(3, 32));
  CHECK(jump_image(rq(5, 2), 3, 3).value.rat() == rq(5, 9));
  CHECK(jump_image(rq(5, 2), 3, 5).value.rat() ==
        rq(5, 2) * Rational(factorial(5), int_pow(Int(5), 5)));
  // q = r is the identity embedding of c r!/r^r
  CHECK(jump_image(rq(3, 2), 4, 4).value.rat() == rq(3, 2) * Rational(24, 256));
  CHECK_THROWS_AS(jump_image(Rational(20), 3, 4), validation_error);
  CHECK_THROWS_AS(jump_image(1, 4, 3), validation_error);
}

TEST_CASE("oplus accumulator matches direct folding") {
  // r = 3 chain of assorted values
  std::vector<Rational> values{rq(1, 2), rq(2, 9), Rational(0), rq(3, 4), rq(1, 5)};
  OplusAccumulator acc(3);
  Scalar fold(values[0]);
  acc.add(Scalar(values[0]));
  for (std::size_t i = 1; i < values.size(); ++i) {
    acc.add(Scalar(values[i]));
    fold = oplus(fold, Scalar(values[i]), 3);
  }
  CHECK(big_close(acc.value().big(), fold.big(), 1e-11));

  // chain of k zeros at r = 2 lands on 1 - 1/k
  OplusAccumulator zeros(2);
  for (int k = 1; k <= 10; ++k) {
    zeros.add(Scalar(Rational(0)));
    CHECK(big_close(zeros.value().big(), to_bigfloat(1 - Rational(1, k))));
  }

  OplusAccumulator sat(4);
  sat.add(Scalar(rq(1, 3)));
  sat.add(Scalar(Rational(1)));
  CHECK(sat.value().rat() == 1);

  CHECK_THROWS_AS(OplusAccumulator(2).value(), validation_error);
}

TEST_SUITE_END();
