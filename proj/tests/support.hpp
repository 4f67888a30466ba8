#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "summa/error.hpp"
#include "summa/hankel.hpp"
#include "summa/series.hpp"

namespace summa::testing {

// Fixed-seed generators; every property test names its seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational rational(long bound) {
    Rational r(integer(-bound, bound), integer(1, bound));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(long bound) {
    Rational r;
    do r = rational(bound);
    while (sgn(r) == 0);
    return r;
  }
  GaussianRational gaussian(long bound) { return {rational(bound), rational(bound)}; }
  GaussianRational nonzero_gaussian(long bound) {
    GaussianRational g;
    do g = gaussian(bound);
    while (g.is_zero());
    return g;
  }
  Complex complex_in_annulus(double r_lo, double r_hi) {
    double r = std::exp(real(std::log(r_lo), std::log(r_hi)));
    return std::polar(r, real(-M_PI, M_PI));
  }

  // a_1..a_r with a_r != 0.
  Recursion recursion(int r, long bound, const MomentWeight& w) {
    Recursion rec;
    rec.r = r;
    rec.weight = w;
    for (int k = 1; k < r; ++k) rec.a.push_back(Coefficient(gaussian(bound)));
    rec.a.push_back(Coefficient(nonzero_gaussian(bound)));
    return rec;
  }
  std::vector<Coefficient> coefficients(int n, long bound) {
    std::vector<Coefficient> c;
    for (int i = 0; i < n; ++i) c.push_back(Coefficient(gaussian(bound)));
    return c;
  }
  std::vector<Coefficient> nonzero_coefficients(int n, long bound) {
    std::vector<Coefficient> c;
    for (int i = 0; i < n; ++i) c.push_back(Coefficient(nonzero_gaussian(bound)));
    return c;
  }
  FormalPowerSeries series(int start, int order, long bound) {
    return FormalPowerSeries::from_list(start, coefficients(order - start + 1, bound));
  }

 private:
  std::mt19937_64 rng_;
};

// f_p = (-1)^p p! for start <= p <= N.
inline FormalPowerSeries euler_series(int N, int start = 0) {
  std::vector<Coefficient> c;
  mpz_class fact = 1;
  for (int p = 1; p < start; ++p) fact *= p;
  for (int p = start; p <= N; ++p) {
    if (p > 0) fact *= p;
    c.push_back(Coefficient(Rational(p % 2 ? -fact : fact)));
  }
  return FormalPowerSeries::from_list(start, std::move(c));
}

inline Recursion euler_recursion() {
  return Recursion{1, {Coefficient(-1)}, MomentWeight::factorial(1)};
}

// Independent oracle: (1/z) e^{1/z} E_1(1/z) = sum of the Euler series at real z > 0,
// through the libstdc++ exponential integral (E_1(x) = -Ei(-x)).
inline double euler_sum_oracle(double z) {
  double x = 1.0 / z;
  return x * std::exp(x) * -std::expint(-x);
}

// The same value from the continued fraction E_1(x) = e^{-x} / (x + 1/(1 + 1/(x + 2/(1 + ...)))),
// evaluated backwards from a deep truncation.
inline double euler_sum_continued_fraction(double z) {
  double x = 1.0 / z;
  double t = 0.0;
  for (int n = 400; n >= 1; --n) t = n / (1.0 + n / (x + t));
  return x / (x + t);
}

}  // namespace summa::testing

#define CHECK_THROWS_CODE(expr, ec)                                 \
  do {                                                              \
    bool summa_thrown = false;                                      \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const ::summa::Error& e) {                             \
      summa_thrown = true;                                          \
      CHECK_MESSAGE(e.code() == (ec), "unexpected code: " << e.what()); \
    }                                                               \
    CHECK_MESSAGE(summa_thrown, "expected " #ec);                  \
  } while (0)
