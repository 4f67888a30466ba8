#include "summa/series.hpp"

#include <algorithm>
#include <cmath>

#include "linalg.hpp"
#include "summa/error.hpp"

namespace summa {

std::string_view to_string(NotFoundReason reason) {
  switch (reason) {
    case NotFoundReason::ZeroSequence: return "ZeroSequence";
    case NotFoundReason::InsufficientWindow: return "InsufficientWindow";
    case NotFoundReason::NoLowOrderFit: return "NoLowOrderFit";
    case NotFoundReason::ConvergentCase: return "ConvergentCase";
  }
  return "Unknown";
}

FormalPowerSeries FormalPowerSeries::from_list(int start, std::vector<Coefficient> coeffs, double tol) {
  if (start < 0) throw Error(ErrorCode::InvalidArgument, "start index must be >= 0");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  FormalPowerSeries s;
  s.start_ = start;
  s.tol_ = tol;
  s.exact_ = std::all_of(coeffs.begin(), coeffs.end(), [](const Coefficient& c) { return c.is_exact(); });
  if (!s.exact_)
    for (auto& c : coeffs) c = c.to_float();
  s.c_ = std::move(coeffs);
  s.source_ = ExplicitList{};
  return s;
}

FormalPowerSeries FormalPowerSeries::from_closed_form(int start, int order,
                                                      const std::function<Coefficient(int)>& f,
                                                      std::string label, double tol) {
  std::vector<Coefficient> c;
  for (int p = start; p <= order; ++p) c.push_back(f(p));
  FormalPowerSeries s = from_list(start, std::move(c), tol);
  s.source_ = ClosedForm{std::move(label)};
  return s;
}

FormalPowerSeries FormalPowerSeries::zero(int start, int order) {
  FormalPowerSeries s;
  s.start_ = start;
  s.c_.assign(static_cast<std::size_t>(std::max(0, order - start + 1)), Coefficient(0));
  return s;
}

const Coefficient& FormalPowerSeries::coeff(int p) const {
  if (p < start_ || p > available_order())
    throw Error(ErrorCode::IndexOutOfRange, "coefficient " + std::to_string(p) + " outside [" +
                                                std::to_string(start_) + ", " +
                                                std::to_string(available_order()) + "]");
  return c_[static_cast<std::size_t>(p - start_)];
}

Coefficient FormalPowerSeries::at(int p) const {
  if (p < start_ && p >= 0) return exact_ ? Coefficient(0) : Coefficient(0.0);
  return coeff(p);
}

Coefficient FormalPowerSeries::offset() const {
  if (start_ == 0 && !c_.empty()) return c_[0];
  return exact_ ? Coefficient(0) : Coefficient(0.0);
}

std::vector<Coefficient> FormalPowerSeries::canonical() const {
  std::vector<Coefficient> out;
  for (int p = 1; p <= available_order(); ++p) out.push_back(at(p));
  return out;
}

std::vector<Coefficient> FormalPowerSeries::dense() const {
  std::vector<Coefficient> out;
  for (int p = 0; p <= available_order(); ++p) out.push_back(at(p));
  return out;
}

FormalPowerSeries FormalPowerSeries::truncated(int order) const {
  if (order > available_order())
    throw Error(ErrorCode::IndexOutOfRange, "cannot extend a series beyond its available order");
  FormalPowerSeries s = *this;
  s.c_.resize(static_cast<std::size_t>(std::max(0, order - start_ + 1)));
  return s;
}

FormalPowerSeries FormalPowerSeries::canonicalized() const {
  if (start_ >= 1) return *this;
  FormalPowerSeries s = *this;
  s.start_ = 1;
  if (!s.c_.empty()) s.c_.erase(s.c_.begin());
  return s;
}

bool FormalPowerSeries::is_zero() const {
  double scale = std::max(1.0, max_abs());
  return std::all_of(c_.begin(), c_.end(), [&](const Coefficient& c) { return near_zero(c, tol_, scale); });
}

double FormalPowerSeries::max_abs() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, c.abs());
  return m;
}

Complex FormalPowerSeries::partial_sum(Complex z, int n) const {
  n = std::min(n, available_order());
  Complex acc = 0.0;
  for (int p = n; p >= start_; --p) acc = acc * z + coeff(p).to_complex();
  for (int p = 0; p < start_; ++p) acc *= z;
  return acc;
}

FormalPowerSeries FormalPowerSeries::with_source(Source s) const {
  FormalPowerSeries out = *this;
  out.source_ = std::move(s);
  return out;
}

const Coefficient& coeff(const FormalPowerSeries& series, int p) { return series.coeff(p); }

FormalPowerSeries borel_transform(const FormalPowerSeries& series, const MomentWeight& weight) {
  const int n = series.available_order();
  std::vector<Coefficient> w = weight.values(n);
  std::vector<Coefficient> out;
  for (int p = series.start_index(); p <= n; ++p) out.push_back(series.coeff(p) / w[p]);
  return FormalPowerSeries::from_list(series.start_index(), std::move(out), series.tolerance());
}

FormalPowerSeries generate_from_recursion(const Recursion& rec, std::span<const Coefficient> seeds,
                                          const MomentWeight& weight, int N) {
  if (static_cast<int>(seeds.size()) != rec.r || static_cast<int>(rec.a.size()) != rec.r)
    throw Error(ErrorCode::SeedLengthMismatch, "recursion of order " + std::to_string(rec.r) +
                                                   " needs " + std::to_string(rec.r) +
                                                   " seeds, got " + std::to_string(seeds.size()));
  if (N < rec.r) throw Error(ErrorCode::InvalidArgument, "N must be >= r");
  std::vector<Coefficient> w = weight.values(N);
  std::vector<Coefficient> d(N + 1, Coefficient(0));  // d[j] = f_j / w_j
  std::vector<Coefficient> f;
  for (int j = 1; j <= rec.r; ++j) {
    f.push_back(seeds[j - 1]);
    d[j] = seeds[j - 1] / w[j];
  }
  for (int j = rec.r + 1; j <= N; ++j) {
    Coefficient acc(0);
    for (int k = 1; k <= rec.r; ++k)
      if (!rec.a[k - 1].is_zero()) acc += rec.a[k - 1] * d[j - k];
    d[j] = acc;
    f.push_back(acc * w[j]);
  }
  Recursion stored = rec;
  stored.weight = weight;
  FormalPowerSeries s = FormalPowerSeries::from_list(1, std::move(f));
  return s.with_source(FormalPowerSeries::RecursionGenerated{
      std::move(stored), std::vector<Coefficient>(seeds.begin(), seeds.end())});
}

double gevrey_order_estimate(const FormalPowerSeries& series, int p_max) {
  if (p_max > series.available_order())
    throw Error(ErrorCode::IndexOutOfRange, "p_max beyond available order");
  std::vector<double> xs, ys;
  double scale = std::max(1e-300, series.max_abs());
  for (int p = std::max(1, series.start_index()); p <= p_max; ++p) {
    const Coefficient& c = series.coeff(p);
    if (near_zero(c, series.tolerance(), series.is_exact() ? 1.0 : scale)) continue;
    xs.push_back(p);
    ys.push_back(c.log_abs());
  }
  if (xs.size() < 10)
    throw Error(ErrorCode::InsufficientData,
                "need at least 10 nonzero coefficients, have " + std::to_string(xs.size()));
  // Normal equations for y ~ c0 + c1 p + s log p!.
  double ata[3][3] = {}, aty[3] = {};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double row[3] = {1.0, xs[i] / xs.back(), std::lgamma(xs[i] + 1.0) / std::lgamma(xs.back() + 1.0)};
    for (int a = 0; a < 3; ++a) {
      aty[a] += row[a] * ys[i];
      for (int b = 0; b < 3; ++b) ata[a][b] += row[a] * row[b];
    }
  }
  detail::Matrix m(3, std::vector<Coefficient>(3));
  std::vector<Coefficient> rhs(3), sol;
  for (int a = 0; a < 3; ++a) {
    rhs[a] = Coefficient(aty[a]);
    for (int b = 0; b < 3; ++b) m[a][b] = Coefficient(ata[a][b]);
  }
  if (!detail::solve_linear(m, rhs, sol, 1e-15))
    throw Error(ErrorCode::InsufficientData, "degenerate index set for the Gevrey fit");
  double s = sol[2].to_complex().real() / std::lgamma(xs.back() + 1.0);
  return s < 1e-6 ? 0.0 : s;
}

}  // namespace summa
