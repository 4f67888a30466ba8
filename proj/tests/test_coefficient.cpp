#include <doctest.h>

#include "summa/coefficient.hpp"
#include "summa/weight.hpp"
#include "support.hpp"

using namespace summa;

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational a(Rational(1, 2), Rational(-3, 4));
  GaussianRational b(Rational(2), Rational(1, 3));
  CHECK((a + b) == GaussianRational(Rational(5, 2), Rational(-5, 12)));
  CHECK((a * b) == GaussianRational(Rational(1, 1) + Rational(1, 4), Rational(1, 6) - Rational(3, 2)));
  CHECK(((a / b) * b) == a);
  CHECK(a.conj().im() == Rational(3, 4));
  CHECK(a.norm() == Rational(13, 16));
  CHECK_THROWS_CODE(a / GaussianRational(), ErrorCode::DivisionByZero);
}

TEST_CASE("parse_rational accepts fractions, decimals and exponents") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("2.5e2") == Rational(250));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK_THROWS_CODE(parse_rational("abc"), ErrorCode::ParseError);
  CHECK_THROWS_CODE(parse_rational(""), ErrorCode::ParseError);
}

TEST_CASE("log_abs survives numbers far beyond double range") {
  mpz_class big = 1;
  for (int i = 0; i < 2000; ++i) big *= 10;
  CHECK(log_abs(big) == doctest::Approx(2000 * std::log(10.0)).epsilon(1e-14));
  CHECK(log_abs(Rational(1, big)) == doctest::Approx(-2000 * std::log(10.0)).epsilon(1e-14));
}

TEST_CASE("coefficient mode mixing degrades to float") {
  Coefficient e(Rational(1, 3));
  Coefficient f(0.5);
  CHECK(e.is_exact());
  CHECK_FALSE((e + f).is_exact());
  CHECK((e + f).to_complex().real() == doctest::Approx(5.0 / 6.0));
  CHECK((e * Coefficient(3)).exact() == GaussianRational(1));
  CHECK(Coefficient(0).is_zero());
  CHECK(near_zero(Coefficient(1e-15), 1e-12, 1.0));
  CHECK_FALSE(near_zero(Coefficient(Rational(1, 1000000)), 1e-3, 1.0));
  CHECK_THROWS_CODE(f.exact(), ErrorCode::InvalidArgument);
}

TEST_CASE("rational_from_double is exact") {
  CHECK(rational_from_double(0.75) == Rational(3, 4));
  CHECK(rational_from_double(0.1).get_d() == 0.1);
}

TEST_CASE("moment weights") {
  auto f = MomentWeight::factorial(2);
  CHECK(f.value(4).exact() == GaussianRational(576));
  CHECK(f.log_value(4) == doctest::Approx(std::log(576.0)));
  auto q = MomentWeight::qpower(Rational(2));
  auto qv = q.values(5);
  CHECK(qv[5].exact() == GaussianRational(1024));  // 2^{10}
  CHECK(q.label() == "qpower:2");
  CHECK_THROWS_CODE(MomentWeight::qpower(Rational(1)), ErrorCode::InvalidArgument);
  CHECK_THROWS_CODE(MomentWeight::custom({Coefficient(2)}), ErrorCode::InvalidArgument);
  auto c = MomentWeight::custom({Coefficient(1), Coefficient(3)});
  CHECK(c.max_index().value() == 1);
  CHECK_THROWS_CODE(c.value(2), ErrorCode::IndexOutOfRange);
  CHECK(MomentWeight::unit().value(17).exact() == GaussianRational(1));
}
