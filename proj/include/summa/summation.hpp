#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "summa/operators.hpp"
#include "summa/rational.hpp"

namespace summa {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 60;
  // Minimal angular distance between the ray and a pole argument.
  double direction_delta = 1e-8;
  // Required slack in |k (d - arg z)| < pi/2.
  double kernel_margin = 1e-3;
  // Relative |theta| below which a ray counts as hitting a theta zero.
  double theta_zero_tol = 1e-8;
};

struct ClassicalK {
  double k = 1.0;
};
struct QTheta {
  double q = 2.0;
};
using Kernel = std::variant<ClassicalK, QTheta>;

struct SumResult {
  Complex value;
  double error_estimate = 0.0;
  int nodes_used = 0;
  double truncation_radius = 0.0;
};

// z^{-k} int_0^{inf(d)} G(u) exp(-(u/z)^k) k u^{k-1} du along the ray arg u = d.
SumResult laplace_sum(const RationalFunction& G, double d, Complex z, double k, const QuadratureConfig& cfg = {});

// Value and z-derivatives 0..n of the k = 1 Laplace sum, by differentiating the
// kernel e^{-u/z}/z under the integral.
std::vector<SumResult> laplace_jet(const RationalFunction& G, double d, Complex z, int n,
                                   const QuadratureConfig& cfg = {});

// sum_{p in Z} q^{-p(p-1)/2} z^p
Complex theta(Complex z, double q);
// ln(q) prod_{p>=0} (1 - q^{-p-1})^{-1}
double pi_q(double q);

// int_0^{inf(d)} Phi(xi) / theta(xi/z) dxi/xi, normalised by the kernel mass ln q
// so that xi^n maps to q^{n(n-1)/2} z^n.
SumResult q_laplace_sum(const RationalFunction& Phi, double d, Complex z, double q, const QuadratureConfig& cfg = {});

using PointEvaluator = std::function<Complex(Complex)>;
// Returns f(z), f'(z), ..., f^{(n)}(z).
using JetEvaluator = std::function<std::vector<Complex>(Complex z, int n)>;

// offset + order-1 Borel-Laplace sum of G along d.
class BorelLaplaceSum {
 public:
  BorelLaplaceSum(RationalFunction G, double d, Complex offset = 0.0, QuadratureConfig cfg = {})
      : G_(std::move(G)), d_(d), offset_(offset), cfg_(cfg) {}
  SumResult evaluate(Complex z) const;
  Complex operator()(Complex z) const { return evaluate(z).value; }
  std::vector<Complex> jet(Complex z, int n) const;
  PointEvaluator evaluator() const;
  JetEvaluator jet_evaluator() const;

 private:
  RationalFunction G_;
  double d_;
  Complex offset_;
  QuadratureConfig cfg_;
};

class QLaplaceSum {
 public:
  QLaplaceSum(RationalFunction Phi, double d, double q, Complex offset = 0.0, QuadratureConfig cfg = {})
      : Phi_(std::move(Phi)), d_(d), q_(q), offset_(offset), cfg_(cfg) {}
  SumResult evaluate(Complex z) const;
  Complex operator()(Complex z) const { return evaluate(z).value; }
  PointEvaluator evaluator() const;
  JetEvaluator jet_evaluator() const;

 private:
  RationalFunction Phi_;
  double d_;
  double q_;
  Complex offset_;
  QuadratureConfig cfg_;
};

// sum_{n = lo}^{hi} (-1)^n q^{-n(n+1)/2}, exact and in double precision.
Rational pairing_partial_sum_exact(const Rational& q, int n_lo, int n_hi);
double pairing_partial_sum(double q, int n_lo, int n_hi);

// With V(x) = sum_{|n| <= W} (-1)^n q^{-n(n+1)/2} phi(-q^n x), returns
// max_x |V(x) - sum_j a_j q^{j(j-1)/2} x^j V(q^j x)|. phi defaults to b/h.
double variation_check(const Recursion& rec, const FormalPowerSeries& b, std::span<const double> x_samples,
                       int n_window);
double variation_check(const Recursion& rec, const RationalFunction& phi, std::span<const double> x_samples,
                       int n_window);

struct AsymptoticOptions {
  std::vector<double> A_grid{1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 4.0};
  double C_max = 10.0;
};

struct AsymptoticFit {
  double C = 0.0;
  double A = 0.0;
  // normalized[N-1] = max_z |f(z) - sum_{p<N} f_p z^p| / (w_N |z|^N)
  std::vector<double> normalized;
};

struct AsymptoticFailure {
  std::string reason;
  std::vector<double> normalized;
};

using AsymptoticOutcome = std::variant<AsymptoticFit, AsymptoticFailure>;

// The series includes its constant term (start index 0 if present).
AsymptoticOutcome asymptotic_check(const PointEvaluator& f_eval, const FormalPowerSeries& series,
                                   std::span<const Complex> samples, const MomentWeight& weight, int N_max,
                                   const AsymptoticOptions& opts = {});

// max_z |P(op) f(z) - g(z)|; op acts through derivatives (Diff1, DiffS) or
// dilations (QDilation). g defaults to the partial sum of spec.rhs.
double analytic_residual(const OdeSpec& spec, const JetEvaluator& f_eval, std::span<const Complex> samples,
                         const PointEvaluator& g_eval = nullptr);

}  // namespace summa
