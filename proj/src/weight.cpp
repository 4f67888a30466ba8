#include "summa/weight.hpp"

#include <cmath>

#include "summa/error.hpp"

namespace summa {

namespace {

Rational rational_pow(const Rational& q, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  return Rational(num, den);
}

void check_moment(const Coefficient& v, int p) {
  Complex c = v.to_complex();
  bool positive = v.is_exact() ? (v.exact().is_real() && sgn(v.exact().re()) > 0)
                               : (c.imag() == 0.0 && c.real() > 0.0);
  if (!positive)
    throw Error(ErrorCode::InvalidArgument, "moment m(" + std::to_string(p) + ") must be positive");
  if (p == 0) {
    bool one = v.is_exact() ? v.exact() == GaussianRational(1) : std::abs(c.real() - 1.0) <= 1e-12;
    if (!one) throw Error(ErrorCode::InvalidArgument, "moment m(0) must equal 1");
  }
}

}  // namespace

MomentWeight MomentWeight::factorial(int s) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "factorial weight needs s >= 1");
  MomentWeight w;
  w.kind_ = Kind::Factorial;
  w.s_ = s;
  w.label_ = "factorial:" + std::to_string(s);
  return w;
}

MomentWeight MomentWeight::qpower(const Rational& q) {
  if (q <= 1) throw Error(ErrorCode::InvalidArgument, "qpower weight needs q > 1");
  MomentWeight w;
  w.kind_ = Kind::QPower;
  w.q_ = q;
  w.q_.canonicalize();
  w.label_ = "qpower:" + w.q_.get_str();
  return w;
}

MomentWeight MomentWeight::custom(std::vector<Coefficient> values, std::string label) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "custom weight needs at least m(0)");
  for (std::size_t p = 0; p < values.size(); ++p) check_moment(values[p], static_cast<int>(p));
  MomentWeight w;
  w.kind_ = Kind::Custom;
  w.label_ = std::move(label);
  w.list_ = std::make_shared<const std::vector<Coefficient>>(std::move(values));
  return w;
}

MomentWeight MomentWeight::custom(std::function<Coefficient(int)> generator, std::string label) {
  MomentWeight w;
  w.kind_ = Kind::Custom;
  w.label_ = std::move(label);
  w.generator_ = std::move(generator);
  check_moment(w.generator_(0), 0);
  return w;
}

MomentWeight MomentWeight::unit() {
  MomentWeight w = custom([](int) { return Coefficient(1); }, "unit");
  w.unit_ = true;
  return w;
}

bool MomentWeight::is_exact() const {
  if (kind_ != Kind::Custom) return true;
  if (list_) {
    for (const auto& v : *list_)
      if (!v.is_exact()) return false;
    return true;
  }
  return generator_(0).is_exact();
}

std::optional<int> MomentWeight::max_index() const {
  if (list_) return static_cast<int>(list_->size()) - 1;
  return std::nullopt;
}

void MomentWeight::check_index(int p) const {
  if (p < 0) throw Error(ErrorCode::IndexOutOfRange, "negative weight index");
  if (list_ && p >= static_cast<int>(list_->size()))
    throw Error(ErrorCode::IndexOutOfRange,
                "custom weight defined up to " + std::to_string(list_->size() - 1) + ", asked " +
                    std::to_string(p));
}

Coefficient MomentWeight::value(int p) const {
  check_index(p);
  switch (kind_) {
    case Kind::Factorial: {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(s_));
      return Coefficient(Rational(r));
    }
    case Kind::QPower:
      return Coefficient(rational_pow(q_, static_cast<unsigned long>(p) * (p - 1) / 2));
    case Kind::Custom:
      if (list_) return (*list_)[p];
      {
        Coefficient v = generator_(p);
        check_moment(v, p);
        return v;
      }
  }
  return Coefficient(1);
}

std::vector<Coefficient> MomentWeight::values(int n) const {
  if (n < 0) return {};
  check_index(n);
  std::vector<Coefficient> out;
  out.reserve(n + 1);
  switch (kind_) {
    case Kind::Factorial: {
      mpz_class f = 1;
      for (int p = 0; p <= n; ++p) {
        if (p > 0) f *= p;
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(s_));
        out.emplace_back(Rational(r));
      }
      break;
    }
    case Kind::QPower: {
      Rational w = 1, qp = 1;  // w = q^{p(p-1)/2}, qp = q^p; w_{p+1} = w_p q^p
      for (int p = 0; p <= n; ++p) {
        out.emplace_back(w);
        w *= qp;
        qp *= q_;
      }
      break;
    }
    case Kind::Custom:
      for (int p = 0; p <= n; ++p) out.push_back(value(p));
      break;
  }
  return out;
}

double MomentWeight::log_value(int p) const {
  check_index(p);
  switch (kind_) {
    case Kind::Factorial:
      return s_ * std::lgamma(p + 1.0);
    case Kind::QPower:
      return 0.5 * p * (p - 1.0) * log_abs(q_);
    case Kind::Custom:
      return value(p).log_abs();
  }
  return 0.0;
}

}  // namespace summa
