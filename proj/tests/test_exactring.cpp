#include <doctest.h>

#include <random>

#include "exactring.hpp"

using namespace cms;

namespace {

LambdaPoly P(std::initializer_list<BigRational> c) { return LambdaPoly(std::vector<BigRational>(c)); }

const RatFunc l = RatFunc::lambda();

mpz_class choose(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4), deg(0, 2);
  auto poly = [&] {
    std::vector<BigRational> v(deg(rng) + 1);
    for (auto& x : v) x = make_rational(c(rng), 1 + std::abs(c(rng)));
    return LambdaPoly(v);
  };
  LambdaPoly den = poly();
  if (den.is_zero()) den = LambdaPoly(1);
  return RatFunc(poly(), den);
}

}  // namespace

TEST_CASE("rationals parse from fractions and exact decimals") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("1.7") == make_rational(17, 10));
  CHECK(parse_rational("-0.5") == make_rational(-1, 2));
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("binomials in lambda") {
  CHECK(binom_lambda(0) == LambdaPoly(1));
  CHECK(binom_lambda(1) == LambdaPoly::lambda());
  CHECK(binom_lambda(2) == P({0, make_rational(-1, 2), make_rational(1, 2)}));
  CHECK(binom_neg_lambda(0) == LambdaPoly(1));
  CHECK(binom_neg_lambda(1) == P({0, -1}));
  CHECK(binom_neg_lambda(2) == P({0, make_rational(1, 2), make_rational(1, 2)}));
}

TEST_CASE("binomials specialize to integer binomial coefficients") {
  for (unsigned k = 1; k <= 8; ++k)
    for (long n = 0; n <= 12; ++n) {
      CHECK(binom_lambda(k).eval(BigRational(n)) == BigRational(n >= static_cast<long>(k) ? choose(n, k) : 0));
      if (n >= 1) {
        const BigRational sign = k % 2 ? -1 : 1;
        CHECK(binom_neg_lambda(k).eval(BigRational(n)) == sign * BigRational(choose(n + k - 1, k)));
      }
    }
}

TEST_CASE("rational function arithmetic examples") {
  CHECK(l / (l + 1) + 1 == (l.scaled(2) + 1) / (l + 1));
  CHECK((l / (l + 1) * 0).is_zero());
  CHECK((l * l - l) / l == l - 1);
  CHECK_THROWS_AS(l / RatFunc(0), std::domain_error);
  CHECK((l / (l + 1)).eval(1) == make_rational(1, 2));
  CHECK_THROWS_AS((l / (l + 1)).eval(-1), PoleError);
  CHECK(RatFunc(7).eval(make_rational(3, 2)) == 7);
}

TEST_CASE("canonical form: reduced, monic denominator") {
  const RatFunc f(P({0, 2}) * P({1, 1}), P({2, 2}) * P({3, 0, 5}));
  CHECK(f.den().leading() == 1);
  CHECK(LambdaPoly::gcd(f.num(), f.den()).degree() == 0);
  CHECK(f == RatFunc(P({0, 1}), P({3, 0, 5})));
  CHECK(to_string(l.scaled(6) / (l.scaled(2) + 1)) == "6*l/(2*l + 1)");
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == RatFunc(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("polynomial division and gcd") {
  const LambdaPoly a = P({-1, 0, 1}), b = P({1, 1});
  LambdaPoly q, r;
  LambdaPoly::divmod(a, b, q, r);
  CHECK(q == P({-1, 1}));
  CHECK(r.is_zero());
  CHECK(LambdaPoly::gcd(a, P({-1, 1})) == P({-1, 1}));
  CHECK_THROWS_AS(LambdaPoly::divmod(a, LambdaPoly(), q, r), std::domain_error);
}
