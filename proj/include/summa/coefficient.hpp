#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace summa {

using Complex = std::complex<double>;
using Rational = mpq_class;

// log|x| without overflow for huge numerators/denominators.
double log_abs(const mpz_class& x);
double log_abs(const Rational& x);

// Parses "p", "p/q" or a decimal literal into an exact rational.
Rational parse_rational(const std::string& text);
// Exact rational value of a finite double.
Rational rational_from_double(double x);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}
  GaussianRational(Rational re, Rational im = 0);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  double log_abs() const;
  std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// A series coefficient: exact Gaussian rational or complex double.
// Mixed arithmetic degrades to floating point.
class Coefficient {
 public:
  Coefficient() : v_(GaussianRational{}) {}
  Coefficient(int v) : v_(GaussianRational(long{v})) {}
  Coefficient(long v) : v_(GaussianRational(v)) {}
  Coefficient(const Rational& v) : v_(GaussianRational(v)) {}
  Coefficient(GaussianRational v) : v_(std::move(v)) {}
  Coefficient(double v) : v_(Complex(v, 0.0)) {}
  Coefficient(Complex v) : v_(v) {}

  bool is_exact() const { return std::holds_alternative<GaussianRational>(v_); }
  const GaussianRational& exact() const;
  Complex to_complex() const;
  // Exact zero in exact mode, bitwise zero in float mode. Tolerance-aware
  // tests go through near_zero.
  bool is_zero() const;
  Coefficient conj() const;
  double abs() const { return std::abs(to_complex()); }
  double log_abs() const;
  Coefficient to_float() const { return Coefficient(to_complex()); }
  std::string to_string() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend bool operator==(const Coefficient& a, const Coefficient& b);

 private:
  std::variant<GaussianRational, Complex> v_;
};

// |c| <= tol * scale, or exact zero for exact coefficients.
bool near_zero(const Coefficient& c, double tol, double scale);

}  // namespace summa
