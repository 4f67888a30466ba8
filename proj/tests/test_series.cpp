#include <doctest.h>

#include "summa/series.hpp"
#include "support.hpp"

using namespace summa;
using summa::testing::Gen;

TEST_CASE("coeff on the Euler series and the null series") {
  auto f = testing::euler_series(10);
  CHECK(coeff(f, 3).exact() == GaussianRational(-6));
  CHECK(coeff(FormalPowerSeries::zero(1, 8), 5).is_zero());
  CHECK_THROWS_CODE(coeff(f, 11), ErrorCode::IndexOutOfRange);
  CHECK_THROWS_CODE(coeff(f, -1), ErrorCode::IndexOutOfRange);
  CHECK(testing::euler_series(10, 2).at(1).is_zero());
  CHECK_THROWS_CODE(f.at(-1), ErrorCode::IndexOutOfRange);
  CHECK(f.offset().exact() == GaussianRational(1));
  CHECK(f.canonical().size() == 10);
  CHECK(f.canonicalized().start_index() == 1);
  CHECK(testing::euler_series(10, 1).offset().is_zero());
}

TEST_CASE("coeff is pure") {
  auto f = testing::euler_series(30);
  for (int p = 0; p <= 30; ++p) CHECK(coeff(f, p) == coeff(f, p));
}

TEST_CASE("generate_from_recursion") {
  auto w = MomentWeight::factorial(1);
  std::vector<Coefficient> seed{Coefficient(-1)};
  auto f = generate_from_recursion(testing::euler_recursion(), seed, w, 5);
  std::vector<long> expect{-1, 2, -6, 24, -120};
  for (int p = 1; p <= 5; ++p) CHECK(coeff(f, p).exact() == GaussianRational(expect[p - 1]));
  CHECK(std::holds_alternative<FormalPowerSeries::RecursionGenerated>(f.source()));

  Recursion annihilate{1, {Coefficient(0)}, w};
  std::vector<Coefficient> c{Coefficient(Rational(7, 3))};
  auto g = generate_from_recursion(annihilate, c, w, 6);
  CHECK(coeff(g, 1).exact() == GaussianRational(Rational(7, 3)));
  for (int p = 2; p <= 6; ++p) CHECK(coeff(g, p).is_zero());

  Recursion two{2, {Coefficient(0), Coefficient(2)}, w};
  std::vector<Coefficient> s2{Coefficient(1), Coefficient(0)};
  auto h = generate_from_recursion(two, s2, w, 5);
  CHECK(coeff(h, 3).exact() == GaussianRational(12));
  CHECK(coeff(h, 4).is_zero());
  CHECK(coeff(h, 5).exact() == GaussianRational(480));

  CHECK_THROWS_CODE(generate_from_recursion(two, seed, w, 5), ErrorCode::SeedLengthMismatch);
}

TEST_CASE("borel_transform examples") {
  auto f = testing::euler_series(12, 1);
  auto d = borel_transform(f, MomentWeight::factorial(1));
  for (int p = 1; p <= 12; ++p) CHECK(coeff(d, p).exact() == GaussianRational(p % 2 ? -1 : 1));

  auto unit = borel_transform(f, MomentWeight::unit());
  for (int p = 1; p <= 12; ++p) CHECK(coeff(unit, p) == coeff(f, p));

  auto wq = MomentWeight::qpower(Rational(3));
  std::vector<Coefficient> c;
  for (int p = 1; p <= 8; ++p) c.push_back(wq.value(p) * Coefficient(1L << p));
  auto b = borel_transform(FormalPowerSeries::from_list(1, c), wq);
  for (int p = 1; p <= 8; ++p) CHECK(coeff(b, p).exact() == GaussianRational(1L << p));
}

TEST_CASE("property: generated coefficients satisfy the unweighted recursion after borel") {
  Gen gen(0x5eed01);
  const MomentWeight weights[] = {MomentWeight::factorial(1), MomentWeight::factorial(2),
                                  MomentWeight::qpower(Rational(3, 2)),
                                  MomentWeight::custom({Coefficient(1), Coefficient(2), Coefficient(5),
                                                        Coefficient(Rational(7, 2)), Coefficient(11),
                                                        Coefficient(13), Coefficient(40), Coefficient(41),
                                                        Coefficient(90), Coefficient(100), Coefficient(1000),
                                                        Coefficient(1001), Coefficient(5000)})};
  for (const auto& w : weights) {
    for (int trial = 0; trial < 10; ++trial) {
      int r = static_cast<int>(gen.integer(1, 4));
      Recursion rec = gen.recursion(r, 9, w);
      auto seeds = gen.coefficients(r, 9);
      auto f = generate_from_recursion(rec, seeds, w, 12);
      auto d = borel_transform(f, w);
      for (int j = r + 1; j <= 12; ++j) {
        Coefficient acc(0);
        for (int k = 1; k <= r; ++k) acc += rec.a[k - 1] * coeff(d, j - k);
        CHECK(acc == coeff(d, j));
      }
    }
  }
}

TEST_CASE("property: borel with p! twice equals borel with p!^2") {
  Gen gen(0x5eed02);
  std::vector<Coefficient> sq;
  for (int p = 0; p <= 20; ++p) sq.push_back(MomentWeight::factorial(2).value(p));
  auto w2 = MomentWeight::custom(sq, "p!^2");
  for (int trial = 0; trial < 10; ++trial) {
    auto f = gen.series(1, 20, 50);
    auto once = borel_transform(borel_transform(f, MomentWeight::factorial(1)), MomentWeight::factorial(1));
    auto direct = borel_transform(f, w2);
    for (int p = 1; p <= 20; ++p) CHECK(coeff(once, p) == coeff(direct, p));
  }
}

TEST_CASE("gevrey_order_estimate") {
  auto fact = FormalPowerSeries::from_closed_form(1, 200, [](int p) {
    mpz_class f = 1;
    for (int i = 2; i <= p; ++i) f *= i;
    return Coefficient(Rational(f));
  }, "p!");
  CHECK(gevrey_order_estimate(fact, 200) == doctest::Approx(1.0).epsilon(0.05));
  auto fact2 = FormalPowerSeries::from_closed_form(1, 200, [](int p) {
    mpz_class f = 1;
    for (int i = 2; i <= p; ++i) f *= i;
    return Coefficient(Rational(f * f));
  }, "p!^2");
  CHECK(gevrey_order_estimate(fact2, 200) == doctest::Approx(2.0).epsilon(0.05));
  auto ones = FormalPowerSeries::from_closed_form(1, 200, [](int) { return Coefficient(1); }, "1");
  CHECK(gevrey_order_estimate(ones, 200) == doctest::Approx(0.0));
  auto geo = FormalPowerSeries::from_closed_form(1, 200, [](int p) { return Coefficient(std::pow(1.5, p)); }, "1.5^p");
  CHECK(gevrey_order_estimate(geo, 200) < 1e-3);
  CHECK_THROWS_CODE(gevrey_order_estimate(FormalPowerSeries::zero(1, 100), 100), ErrorCode::InsufficientData);
}
