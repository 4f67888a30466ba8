#include "summa/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "summa/error.hpp"

namespace summa {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_exact() && den.is_exact() && den.degree() > 0 && !num.is_zero()) {
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      Polynomial q, r;
      divmod(num, g, q, r);
      num = q;
      divmod(den, g, q, r);
      den = q;
    }
  }
  Coefficient h0 = den.coeff(0);
  if (h0.is_zero()) throw Error(ErrorCode::InvalidArgument, "denominator vanishes at the origin");
  Coefficient inv = Coefficient(1) / h0;
  num_ = num * inv;
  den_ = den * inv;
  for (const auto& c : num_.coeffs()) numf_.push_back(c.to_complex());
  for (const auto& c : den_.coeffs()) denf_.push_back(c.to_complex());
  if (den_.degree() >= 1) poles_ = roots(den_);
}

Complex RationalFunction::eval_unchecked(Complex z) const {
  Complex n = 0.0, d = 0.0;
  for (auto it = numf_.rbegin(); it != numf_.rend(); ++it) n = n * z + *it;
  for (auto it = denf_.rbegin(); it != denf_.rend(); ++it) d = d * z + *it;
  return n / d;
}

double RationalFunction::pole_distance(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : poles_) best = std::min(best, std::abs(z - p.value) / std::max(1.0, std::abs(p.value)));
  return best;
}

Complex RationalFunction::eval(Complex z) const {
  if (pole_distance(z) < 1e-14)
    throw Error(ErrorCode::NearPole, "evaluation point within 1e-14 of a pole");
  return eval_unchecked(z);
}

FormalPowerSeries RationalFunction::taylor(int N) const {
  // h c = g with h_0 = 1: c_n = g_n - sum_{k>=1} h_k c_{n-k}.
  std::vector<Coefficient> c;
  for (int n = 0; n <= N; ++n) {
    Coefficient acc = num_.coeff(n);
    for (int k = 1; k <= std::min(n, den_.degree()); ++k) acc -= den_.coeffs()[k] * c[n - k];
    c.push_back(acc);
  }
  return FormalPowerSeries::from_list(0, std::move(c));
}

double normalize_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0) r += two_pi;
  if (two_pi - r < 1e-12) r = 0.0;
  return r;
}

double angular_distance(double a, double b) {
  double d = std::fabs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, 2.0 * std::numbers::pi - d);
}

std::vector<double> DirectionSet::args() const {
  std::vector<double> out;
  for (const auto& e : entries) out.push_back(e.arg);
  return out;
}

int DirectionSet::total_multiplicity() const {
  int m = 0;
  for (const auto& e : entries) m += e.multiplicity;
  return m;
}

DirectionSet directions_of(const Polynomial& h, double arg_tol) {
  DirectionSet out;
  if (h.degree() < 1) return out;
  for (const auto& r : roots(h)) {
    double a = normalize_angle(std::arg(r.value));
    auto it = std::find_if(out.entries.begin(), out.entries.end(),
                           [&](const DirectionEntry& e) { return angular_distance(e.arg, a) <= arg_tol; });
    if (it == out.entries.end()) {
      out.entries.push_back({a, 0, {}});
      it = out.entries.end() - 1;
    }
    it->multiplicity += r.multiplicity;
    for (int m = 0; m < r.multiplicity; ++m) it->roots.push_back(r.value);
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const DirectionEntry& a, const DirectionEntry& b) { return a.arg < b.arg; });
  return out;
}

Polynomial recursion_polynomial(const Recursion& rec) {
  std::vector<Coefficient> c{Coefficient(1)};
  for (const auto& a : rec.a) c.push_back(-a);
  return Polynomial(std::move(c));
}

DirectionSet singular_directions(const Recursion& rec, double arg_tol) {
  return directions_of(recursion_polynomial(rec), arg_tol);
}

bool is_direction_summable(double d, const DirectionSet& dirs, double delta) {
  if (!(delta > 0)) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  return std::all_of(dirs.entries.begin(), dirs.entries.end(),
                     [&](const DirectionEntry& e) { return angular_distance(d, e.arg) > delta; });
}

namespace {

struct RadialProfile {
  std::vector<double> r, log_max;
};

RadialProfile profile(const std::function<Complex(Complex)>& b, Sector sector, int samples,
                      const GrowthOptions& opts) {
  if (samples < 8) throw Error(ErrorCode::InvalidArgument, "growth_certificate needs >= 8 samples");
  int rays = sector.opening > 0 ? std::max(1, opts.rays) : 1;
  RadialProfile p;
  for (int i = 0; i < samples; ++i) {
    double r = opts.r_min + (opts.r_max - opts.r_min) * i / (samples - 1);
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < rays; ++j) {
      double theta = rays == 1 ? sector.d : sector.d + sector.opening * (double(j) / (rays - 1) - 0.5);
      best = std::max(best, std::log(std::abs(b(std::polar(r, theta)))));
    }
    p.r.push_back(r);
    p.log_max.push_back(std::max(best, -700.0));
  }
  return p;
}

double secant(const std::vector<double>& x, const std::vector<double>& y, std::size_t i, std::size_t j) {
  return (y[j] - y[i]) / (x[j] - x[i]);
}

}  // namespace

GrowthOutcome growth_certificate(const std::function<Complex(Complex)>& b, Sector sector,
                                 const GrowthKind& kind, int samples, GrowthOptions opts) {
  RadialProfile p = profile(b, sector, samples, opts);
  const std::size_t n = p.r.size();
  if (const auto* e = std::get_if<ExpOrder>(&kind)) {
    std::vector<double> x;
    for (double r : p.r) x.push_back(std::pow(r, e->k));
    double c2 = 0.0;
    for (std::size_t i = n / 2; i + 1 < n; ++i) c2 = std::max(c2, secant(x, p.log_max, i, i + 1));
    double mid = secant(x, p.log_max, n / 4, n / 2);
    double outer = secant(x, p.log_max, 3 * n / 4, n - 1);
    if (outer > 1.1 * std::max(mid, 0.0) + 0.05)
      return GrowthFailure{"log|b| grows faster than |z|^k along the sector", outer, mid};
    double log_c1 = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) log_c1 = std::max(log_c1, p.log_max[i] - c2 * x[i]);
    return GrowthCertificate{std::exp(log_c1), c2};
  }
  const auto& m = std::get<MGrowth>(kind);
  for (double c2 = 1e-3; c2 <= 1e3; c2 *= 1.05) {
    std::vector<double> resid;
    for (std::size_t i = 0; i < n; ++i) resid.push_back(p.log_max[i] - m.M_of_t(c2 * p.r[i]));
    double inner = *std::max_element(resid.begin(), resid.begin() + n / 2);
    double outer = *std::max_element(resid.begin() + n / 2, resid.end());
    if (outer <= inner + 0.05) return GrowthCertificate{std::exp(std::max(inner, outer)), c2};
  }
  return GrowthFailure{"no c2 in [1e-3, 1e3] bounds log|b| by M(c2 |z|)", 0.0, 0.0};
}

GrowthOutcome growth_certificate(const FormalPowerSeries& b, Sector sector, const GrowthKind& kind,
                                 int samples, GrowthOptions opts) {
  const int n = b.available_order();
  return growth_certificate([&](Complex z) { return b.partial_sum(z, n); }, sector, kind, samples, opts);
}

GrowthOutcome growth_certificate(const RationalFunction& b, Sector sector, const GrowthKind& kind,
                                 int samples, GrowthOptions opts) {
  return growth_certificate([&](Complex z) { return b.eval_unchecked(z); }, sector, kind, samples, opts);
}

}  // namespace summa
