#include "summa/coefficient.hpp"

#include <cmath>
#include <limits>

#include "summa/error.hpp"

namespace summa {

double log_abs(const mpz_class& x) {
  if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& x) {
  return log_abs(mpz_class(x.get_num())) - log_abs(mpz_class(x.get_den()));
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  return Rational(x);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0 || sgn(r.get_den()) == 0)
      throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    r.canonicalize();
    return r;
  }
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') neg = text[pos++] == '-';
  mpz_class num = 0;
  long scale = 0;
  bool digits = false, dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (dot) --scale;
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E')
      throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    try {
      std::size_t used = 0;
      scale += std::stol(text.substr(pos + 1), &used);
      if (pos + 1 + used != text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad exponent in '" + text + "'");
    }
  }
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  Rational r = scale >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

double GaussianRational::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  if (sgn(im_) == 0) return summa::log_abs(re_);
  if (sgn(re_) == 0) return summa::log_abs(im_);
  return 0.5 * summa::log_abs(norm());
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string s = re_.get_str();
  s += sgn(im_) < 0 ? "-" : "+";
  s += Rational(abs(im_)).get_str() + "i";
  return s;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

const GaussianRational& Coefficient::exact() const {
  if (!is_exact()) throw Error(ErrorCode::InvalidArgument, "coefficient is not exact");
  return std::get<GaussianRational>(v_);
}

Complex Coefficient::to_complex() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return g->to_complex();
  return std::get<Complex>(v_);
}

bool Coefficient::is_zero() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return g->is_zero();
  return std::get<Complex>(v_) == Complex(0.0, 0.0);
}

Coefficient Coefficient::conj() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return Coefficient(g->conj());
  return Coefficient(std::conj(std::get<Complex>(v_)));
}

double Coefficient::log_abs() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return g->log_abs();
  return std::log(std::abs(std::get<Complex>(v_)));
}

std::string Coefficient::to_string() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return g->to_string();
  Complex c = std::get<Complex>(v_);
  return "(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) + ")";
}

Coefficient Coefficient::operator-() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return Coefficient(-*g);
  return Coefficient(-std::get<Complex>(v_));
}

#define SUMMA_COEFF_OP(op)                                                   \
  Coefficient& Coefficient::operator op(const Coefficient& o) {              \
    if (is_exact() && o.is_exact()) {                                        \
      std::get<GaussianRational>(v_) op std::get<GaussianRational>(o.v_);    \
    } else {                                                                 \
      Complex a = to_complex();                                              \
      a op o.to_complex();                                                   \
      v_ = a;                                                                \
    }                                                                        \
    return *this;                                                            \
  }

SUMMA_COEFF_OP(+=)
SUMMA_COEFF_OP(-=)
SUMMA_COEFF_OP(*=)
SUMMA_COEFF_OP(/=)
#undef SUMMA_COEFF_OP

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_complex() == b.to_complex();
}

bool near_zero(const Coefficient& c, double tol, double scale) {
  if (c.is_exact()) return c.is_zero();
  return c.abs() <= tol * scale;
}

}  // namespace summa
