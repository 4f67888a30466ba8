#include "summa/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "summa/error.hpp"
#include "summa/quadrature.hpp"

namespace summa {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_pi(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  return r <= -kPi ? r + 2.0 * kPi : r;
}

void check_direction(const RationalFunction& G, double d, const QuadratureConfig& cfg) {
  for (const auto& p : G.poles()) {
    if (std::abs(p.value) == 0.0) continue;
    if (angular_distance(std::arg(p.value), d) <= cfg.direction_delta)
      throw Error(ErrorCode::DirectionNotSummable,
                  "pole at argument " + std::to_string(normalize_angle(std::arg(p.value))) + " lies on the ray d = " +
                      std::to_string(d));
  }
}

int growth_degree(const RationalFunction& G) { return std::max(0, G.num().degree() - G.den().degree()); }

// Extra breakpoints where poles sit close to the ray: their projection and a
// few distances either side.
void add_pole_breaks(const RationalFunction& G, double d, double scale, double lo, double hi,
                     std::vector<double>& breaks, bool log_scale) {
  const Complex rot = std::polar(1.0, -d);
  for (const auto& p : G.poles()) {
    Complex w = p.value * rot;
    if (w.real() <= 0.0 || std::fabs(w.imag()) > w.real()) continue;
    double dist = std::fabs(w.imag());
    for (double off : {0.0, -1.0, 1.0, -4.0, 4.0}) {
      double s = w.real() + off * dist;
      if (s <= 0.0) continue;
      double b = log_scale ? std::log(s / scale) : s;
      if (b > lo && b < hi) breaks.push_back(b);
    }
  }
}

void finish_breaks(std::vector<double>& breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double a, double b) { return std::fabs(a - b) <= 1e-14 * std::max(1.0, std::fabs(a)); }),
               breaks.end());
}

struct RaySetup {
  double phi;     // d - arg z in (-pi, pi]
  double az;      // |z|
  double decay;   // cos(k phi)
  Complex rot;    // e^{i k phi}
  Complex dir;    // e^{i d}
};

RaySetup classical_setup(const RationalFunction& G, double d, Complex z, double k, const QuadratureConfig& cfg) {
  if (z == Complex(0.0)) throw Error(ErrorCode::SampleOutsideDomain, "Laplace sum at z = 0");
  if (!(k > 0)) throw Error(ErrorCode::InvalidArgument, "kernel order k must be positive");
  check_direction(G, d, cfg);
  RaySetup s;
  s.phi = wrap_pi(d - std::arg(z));
  if (std::fabs(k * s.phi) > kPi / 2 - cfg.kernel_margin)
    throw Error(ErrorCode::KernelNonDecaying, "|k (d - arg z)| = " + std::to_string(std::fabs(k * s.phi)) +
                                                  " leaves no decay along the ray");
  s.az = std::abs(z);
  s.decay = std::cos(k * s.phi);
  s.rot = std::polar(1.0, k * s.phi);
  s.dir = std::polar(1.0, d);
  return s;
}

// Radius beyond which the integrand tail is below 0.1 abs_tol.
double truncation_radius(const std::function<double(double)>& magnitude, const RaySetup& s, double k, int degree,
                         double abs_tol) {
  double t = std::pow((40.0 + 2.0 * degree) / s.decay, 1.0 / k);
  double R = s.az * t;
  for (int it = 0; it < 400; ++it) {
    double tt = R / s.az;
    double rate = k * std::pow(tt, k - 1.0) * s.decay / s.az;  // d/ds of t^k cos(k phi)
    if (magnitude(R) / rate < 0.1 * abs_tol) return R;
    R *= 1.25;
  }
  return R;
}

std::vector<double> classical_breaks(const RationalFunction& G, double d, const RaySetup& s, double k, double R) {
  std::vector<double> breaks{0.0, R};
  for (double t : {1.0, 4.0, 16.0}) {
    double b = s.az * std::pow(t / s.decay, 1.0 / k);
    if (b < R) breaks.push_back(b);
  }
  add_pole_breaks(G, d, 1.0, 0.0, R, breaks, false);
  finish_breaks(breaks);
  return breaks;
}

void require_converged(const QuadResult& q, const char* what) {
  if (!q.converged) {
    double worst = *std::max_element(q.error.begin(), q.error.end());
    throw Error(ErrorCode::ToleranceNotMet, std::string(what) + ": error estimate " + std::to_string(worst) +
                                                " after " + std::to_string(q.subdivisions) + " subdivisions");
  }
}

}  // namespace

SumResult laplace_sum(const RationalFunction& G, double d, Complex z, double k, const QuadratureConfig& cfg) {
  RaySetup s = classical_setup(G, d, z, k, cfg);
  auto integrand = [&](double x) {
    double t = x / s.az;
    double tk = std::pow(t, k);
    return G.eval_unchecked(x * s.dir) * (k * std::pow(t, k - 1.0)) * std::exp(-tk * s.rot) * s.rot / s.az;
  };
  double R = truncation_radius([&](double x) { return std::abs(integrand(x)); }, s, k, growth_degree(G), cfg.abs_tol);
  std::vector<double> breaks = classical_breaks(G, d, s, k, R);
  QuadResult q;
  if (k >= 1.0) {
    q = integrate_gk15([&](double x, std::span<Complex> out) { out[0] = integrand(x); }, 1, breaks, cfg.rel_tol,
                       cfg.abs_tol, cfg.max_subdivisions);
  } else {
    // v = t^k removes the t^{k-1} endpoint singularity.
    for (double& b : breaks) b = std::pow(b / s.az, k);
    q = integrate_gk15(
        [&](double v, std::span<Complex> out) {
          out[0] = G.eval_unchecked(s.az * std::pow(v, 1.0 / k) * s.dir) * std::exp(-v * s.rot) * s.rot;
        },
        1, breaks, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
  }
  require_converged(q, "laplace_sum");
  return {q.value[0], q.error[0], q.nodes, R};
}

std::vector<SumResult> laplace_jet(const RationalFunction& G, double d, Complex z, int n, const QuadratureConfig& cfg) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "jet order must be >= 0");
  RaySetup s = classical_setup(G, d, z, 1.0, cfg);
  // d^m/dz^m [e^{-u/z}/z] = e^{-u/z} sum_j c[m][j] u^j z^{-(m+1+j)}
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(n + 1, 0.0));
  c[0][0] = 1.0;
  for (int m = 0; m < n; ++m)
    for (int j = 0; j <= m; ++j) {
      c[m + 1][j] -= (m + 1 + j) * c[m][j];
      c[m + 1][j + 1] += c[m][j];
    }
  const Complex w = 1.0 / z;
  std::vector<Complex> wpow(2 * n + 2);
  wpow[0] = 1.0;
  for (std::size_t i = 1; i < wpow.size(); ++i) wpow[i] = wpow[i - 1] * w;
  auto integrand = [&](double x, std::span<Complex> out) {
    Complex u = x * s.dir;
    Complex base = G.eval_unchecked(u) * std::exp(-u * w) * s.dir;
    std::vector<Complex> upow(n + 1);
    upow[0] = 1.0;
    for (int j = 1; j <= n; ++j) upow[j] = upow[j - 1] * u;
    for (int m = 0; m <= n; ++m) {
      Complex acc = 0.0;
      for (int j = 0; j <= m; ++j)
        if (c[m][j] != 0.0) acc += c[m][j] * upow[j] * wpow[m + 1 + j];
      out[m] = base * acc;
    }
  };
  std::vector<Complex> buf(n + 1);
  double R = truncation_radius(
      [&](double x) {
        integrand(x, buf);
        double m = 0.0;
        for (const auto& v : buf) m = std::max(m, std::abs(v));
        return m;
      },
      s, 1.0, growth_degree(G) + 2 * n, cfg.abs_tol);
  std::vector<double> breaks = classical_breaks(G, d, s, 1.0, R);
  QuadResult q = integrate_gk15(integrand, n + 1, breaks, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
  require_converged(q, "laplace_jet");
  std::vector<SumResult> out;
  for (int m = 0; m <= n; ++m) out.push_back({q.value[m], q.error[m], q.nodes, R});
  return out;
}

Complex theta(Complex z, double q) {
  if (z == Complex(0.0)) throw Error(ErrorCode::ZeroArgument, "theta(0) is undefined");
  if (!(q > 1)) throw Error(ErrorCode::InvalidArgument, "theta needs q > 1");
  // Long double terms built by ratio recurrence from the largest one: near the
  // zeros of theta the sum cancels and double precision loses ~1e-12.
  using LD = long double;
  using CL = std::complex<LD>;
  const LD lq = std::log(static_cast<LD>(q));
  const CL zl(z.real(), z.imag());
  const LD lr = std::log(std::abs(zl)), phi = std::arg(zl);
  const long peak = std::lround(static_cast<double>(lr / lq + 0.5L));
  const LD lmax = peak * lr - 0.5L * peak * (peak - 1.0L) * lq;
  const LD cutoff = 1e-21L;
  const CL first = std::polar(1.0L, std::remainder(static_cast<LD>(peak) * phi, 2 * std::numbers::pi_v<LD>));
  CL sum = first;
  CL t = first;
  for (long p = peak;; ++p) {  // t_{p+1} = t_p z / q^p
    t *= zl * std::exp(-static_cast<LD>(p) * lq);
    if (std::abs(t) < cutoff) break;
    sum += t;
  }
  t = first;
  for (long p = peak;; --p) {  // t_{p-1} = t_p q^{p-1} / z
    t *= std::exp(static_cast<LD>(p - 1) * lq) / zl;
    if (std::abs(t) < cutoff) break;
    sum += t;
  }
  CL out = sum * std::exp(lmax);
  return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

double pi_q(double q) {
  if (!(q > 1)) throw Error(ErrorCode::InvalidArgument, "pi_q needs q > 1");
  double prod = 1.0;
  for (double x = 1.0 / q; x > 1e-16; x /= q) prod *= 1.0 - x;
  return std::log(q) / prod;
}

SumResult q_laplace_sum(const RationalFunction& Phi, double d, Complex z, double q, const QuadratureConfig& cfg) {
  if (z == Complex(0.0)) throw Error(ErrorCode::SampleOutsideDomain, "q-Laplace sum at z = 0");
  if (!(q > 1)) throw Error(ErrorCode::InvalidArgument, "q-Laplace needs q > 1");
  check_direction(Phi, d, cfg);
  const double lq = std::log(q);
  const double phi = wrap_pi(d - std::arg(z));
  const double az = std::abs(z);
  const Complex dir = std::polar(1.0, d), twist = std::polar(1.0, phi);
  auto integrand = [&](double t) {
    Complex x = std::exp(t) * twist;
    return Phi.eval_unchecked(az * std::exp(t) * dir) / theta(x, q);
  };
  auto march = [&](double sign) {
    double t = 0.0, prev = std::abs(integrand(0.0));
    for (int it = 0; it < 400; ++it) {
      t += sign * 0.5;
      double cur = std::abs(integrand(t));
      if (cur < 0.1 * cfg.abs_tol * lq && cur <= prev) return t;
      prev = cur;
    }
    return t;
  };
  const double lo = march(-1.0), hi = march(1.0);
  double worst = std::numeric_limits<double>::infinity();
  auto probe = [&](double t) {
    double rel = std::abs(theta(std::exp(t) * twist, q)) / theta(Complex(std::exp(t), 0.0), q).real();
    worst = std::min(worst, rel);
  };
  for (double t = lo; t <= hi; t += lq / 8) probe(t);
  for (long n = std::lround(std::ceil(lo / lq)); n * lq <= hi; ++n) probe(n * lq);
  if (worst < cfg.theta_zero_tol)
    throw Error(ErrorCode::ThetaZeroOnRay,
                "theta(xi/z) nearly vanishes on the ray (relative size " + std::to_string(worst) + ")");
  std::vector<double> breaks{lo, hi};
  for (long n = std::lround(std::ceil(lo / lq)); n * lq < hi; ++n) breaks.push_back(n * lq);
  add_pole_breaks(Phi, d, az, lo, hi, breaks, true);
  finish_breaks(breaks);
  QuadResult res = integrate_gk15([&](double t, std::span<Complex> out) { out[0] = integrand(t); }, 1, breaks,
                                  cfg.rel_tol, cfg.abs_tol * lq, cfg.max_subdivisions);
  require_converged(res, "q_laplace_sum");
  return {res.value[0] / lq, res.error[0] / lq, res.nodes, std::exp(hi) * az};
}

SumResult BorelLaplaceSum::evaluate(Complex z) const {
  SumResult r = laplace_sum(G_, d_, z, 1.0, cfg_);
  r.value += offset_;
  return r;
}

std::vector<Complex> BorelLaplaceSum::jet(Complex z, int n) const {
  std::vector<Complex> out;
  for (const auto& r : laplace_jet(G_, d_, z, n, cfg_)) out.push_back(r.value);
  out[0] += offset_;
  return out;
}

PointEvaluator BorelLaplaceSum::evaluator() const {
  return [self = *this](Complex z) { return self(z); };
}

JetEvaluator BorelLaplaceSum::jet_evaluator() const {
  return [self = *this](Complex z, int n) { return self.jet(z, n); };
}

SumResult QLaplaceSum::evaluate(Complex z) const {
  SumResult r = q_laplace_sum(Phi_, d_, z, q_, cfg_);
  r.value += offset_;
  return r;
}

PointEvaluator QLaplaceSum::evaluator() const {
  return [self = *this](Complex z) { return self(z); };
}

JetEvaluator QLaplaceSum::jet_evaluator() const {
  return [self = *this](Complex z, int n) {
    if (n > 0) throw Error(ErrorCode::Unsupported, "q-Laplace sums provide values only");
    return std::vector<Complex>{self(z)};
  };
}

Rational pairing_partial_sum_exact(const Rational& q, int n_lo, int n_hi) {
  Rational sum = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    long e = static_cast<long>(n) * (n + 1) / 2;  // term is q^{-e}
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(std::labs(e)));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(std::labs(e)));
    Rational term = e >= 0 ? Rational(den, num) : Rational(num, den);
    term.canonicalize();
    if (n % 2 != 0) sum -= term;
    else sum += term;
  }
  return sum;
}

double pairing_partial_sum(double q, int n_lo, int n_hi) {
  double sum = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    double term = std::exp(-0.5 * n * (n + 1.0) * std::log(q));
    sum += (n % 2 != 0) ? -term : term;
  }
  return sum;
}

double variation_check(const Recursion& rec, const RationalFunction& phi, std::span<const double> x_samples,
                       int n_window) {
  if (rec.weight.kind() != MomentWeight::Kind::QPower)
    throw Error(ErrorCode::WeightKindMismatch, "variation_check needs a qpower recursion");
  if (n_window < 0) throw Error(ErrorCode::InvalidArgument, "window must be >= 0");
  const double q = rec.weight.q_double(), lq = std::log(q);
  auto V = [&](double y) {
    Complex acc = 0.0;
    for (int n = -n_window; n <= n_window; ++n) {
      double xi = -std::exp(n * lq) * y;
      double h = std::abs(phi.den().eval(xi));
      if (h <= 1e-12 * phi.den().abs_eval(std::fabs(xi)))
        throw Error(ErrorCode::DenominatorHitsRoot, "h vanishes at -q^" + std::to_string(n) + " x");
      double w = std::exp(-0.5 * n * (n + 1.0) * lq);
      acc += (n % 2 != 0 ? -w : w) * phi.eval_unchecked(xi);
    }
    return acc;
  };
  double worst = 0.0;
  for (double x : x_samples) {
    Complex res = V(x);
    for (int j = 1; j <= rec.r; ++j) {
      if (rec.a[j - 1].is_zero()) continue;
      double scale = std::exp(0.5 * j * (j - 1.0) * lq) * std::pow(x, j);
      res -= rec.a[j - 1].to_complex() * scale * V(std::exp(j * lq) * x);
    }
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

double variation_check(const Recursion& rec, const FormalPowerSeries& b, std::span<const double> x_samples,
                       int n_window) {
  return variation_check(rec, RationalFunction(Polynomial(b.dense()), recursion_polynomial(rec)), x_samples,
                         n_window);
}

AsymptoticOutcome asymptotic_check(const PointEvaluator& f_eval, const FormalPowerSeries& series,
                                   std::span<const Complex> samples, const MomentWeight& weight, int N_max,
                                   const AsymptoticOptions& opts) {
  if (N_max < 1 || N_max - 1 > series.available_order())
    throw Error(ErrorCode::IndexOutOfRange, "series too short for N_max");
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "no samples");
  std::vector<double> normalized(N_max, 0.0);
  for (Complex z : samples) {
    Complex f = f_eval(z);
    Complex partial = 0.0, zp = 1.0;
    for (int N = 1; N <= N_max; ++N) {
      partial += series.at(N - 1).to_complex() * zp;
      zp *= z;
      double rem = std::abs(f - partial);
      double lognorm = std::log(rem) - weight.log_value(N) - N * std::log(std::abs(z));
      normalized[N - 1] = std::max(normalized[N - 1], rem == 0.0 ? 0.0 : std::exp(lognorm));
    }
  }
  for (double A : opts.A_grid) {
    double C = 0.0;
    for (int N = 1; N <= N_max; ++N) C = std::max(C, normalized[N - 1] / std::pow(A, N));
    if (C <= opts.C_max) return AsymptoticFit{C, A, normalized};
  }
  return AsymptoticFailure{"normalized remainders exceed C_max for every A in the grid", normalized};
}

namespace {

// Jet of z^2 F' + z F from the jet of F (order drops by one).
std::vector<Complex> diff1_jet(const std::vector<Complex>& J, Complex z) {
  std::vector<Complex> out;
  for (int k = 0; k + 1 < static_cast<int>(J.size()); ++k) {
    Complex v = z * z * J[k + 1] + (2.0 * k + 1.0) * z * J[k];
    if (k >= 1) v += (k * (k - 1.0) + k) * J[k - 1];
    out.push_back(v);
  }
  return out;
}

// Jet of z (z d/dz + 1)^s F.
std::vector<Complex> diffs_jet(std::vector<Complex> J, Complex z, int s) {
  for (int it = 0; it < s; ++it) {
    std::vector<Complex> next;
    for (int k = 0; k + 1 < static_cast<int>(J.size()); ++k) next.push_back(z * J[k + 1] + (k + 1.0) * J[k]);
    J = std::move(next);
  }
  std::vector<Complex> out;
  for (int k = 0; k < static_cast<int>(J.size()); ++k) out.push_back(z * J[k] + (k >= 1 ? double(k) * J[k - 1] : Complex(0.0)));
  return out;
}

}  // namespace

double analytic_residual(const OdeSpec& spec, const JetEvaluator& f_eval, std::span<const Complex> samples,
                         const PointEvaluator& g_eval) {
  if (std::holds_alternative<Moment>(spec.kind))
    throw Error(ErrorCode::Unsupported, "no analytic action of the moment operator on numerical sums");
  const int deg = std::max(0, spec.P.degree());
  const int order_rhs = spec.rhs.available_order();
  double worst = 0.0;
  for (Complex z : samples) {
    try {
      Complex lhs = 0.0;
      if (const auto* q = std::get_if<QDilation>(&spec.kind)) {
        const double qd = q->q.get_d();
        for (int j = 0; j <= deg; ++j) {
          Complex c = spec.P.coeff(j).to_complex();
          if (c == Complex(0.0)) continue;
          Complex zj = std::pow(z, j) * std::exp(0.5 * j * (j - 1.0) * std::log(qd));
          lhs += c * zj * f_eval(std::pow(qd, j) * z, 0)[0];
        }
      } else {
        const int s = std::holds_alternative<DiffS>(spec.kind) ? std::get<DiffS>(spec.kind).s : 1;
        std::vector<Complex> J = f_eval(z, s * deg);
        for (int i = 0; i <= deg; ++i) {
          lhs += spec.P.coeff(i).to_complex() * J[0];
          if (i < deg) J = s == 1 ? diff1_jet(J, z) : diffs_jet(J, z, s);
        }
      }
      Complex g = g_eval ? g_eval(z) : spec.rhs.partial_sum(z, order_rhs);
      worst = std::max(worst, std::abs(lhs - g));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Unsupported) throw;
      throw Error(ErrorCode::SampleOutsideDomain, e.what());
    }
  }
  return worst;
}

}  // namespace summa
