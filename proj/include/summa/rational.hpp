#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "summa/polynomial.hpp"
#include "summa/recursion.hpp"
#include "summa/series.hpp"

namespace summa {

// g(z)/h(z) with h(0) = 1. Exact inputs are reduced by their gcd.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(Polynomial(), Polynomial::constant(Coefficient(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction polynomial(Polynomial num) {
    return RationalFunction(std::move(num), Polynomial::constant(Coefficient(1)));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const std::vector<Root>& poles() const { return poles_; }
  bool is_exact() const { return num_.is_exact() && den_.is_exact(); }

  // NearPole within 1e-14 (relative to the root modulus) of a pole.
  Complex eval(Complex z) const;
  Complex eval_unchecked(Complex z) const;
  double pole_distance(Complex z) const;
  // Taylor coefficients at 0 through order N, from index 0.
  FormalPowerSeries taylor(int N) const;

 private:
  Polynomial num_, den_;
  std::vector<Complex> numf_, denf_;
  std::vector<Root> poles_;
};

// Principal argument mapped into [0, 2pi); values within 1e-12 of 2pi snap to 0.
double normalize_angle(double a);
double angular_distance(double a, double b);

struct DirectionEntry {
  double arg = 0.0;
  int multiplicity = 0;
  std::vector<Complex> roots;
};

struct DirectionSet {
  std::vector<DirectionEntry> entries;  // sorted by arg
  std::vector<double> args() const;
  int total_multiplicity() const;
};

// Arguments of the roots of h; roots with equal arguments (within arg_tol) merge.
DirectionSet directions_of(const Polynomial& h, double arg_tol = 1e-10);
// Directions of 1 - a_1 z - ... - a_r z^r.
DirectionSet singular_directions(const Recursion& rec, double arg_tol = 1e-10);
Polynomial recursion_polynomial(const Recursion& rec);
bool is_direction_summable(double d, const DirectionSet& dirs, double delta);

struct ExpOrder {
  double k = 1.0;
};
struct MGrowth {
  std::function<double(double)> M_of_t;
};
using GrowthKind = std::variant<ExpOrder, MGrowth>;

struct Sector {
  double d = 0.0;
  double opening = 0.0;
};

struct GrowthCertificate {
  double c1 = 0.0;
  double c2 = 0.0;
};

struct GrowthFailure {
  std::string reason;
  double outer_slope = 0.0;
  double inner_slope = 0.0;
};

using GrowthOutcome = std::variant<GrowthCertificate, GrowthFailure>;

struct GrowthOptions {
  double r_min = 0.5;
  double r_max = 10.0;
  int rays = 5;
};

// Sampling falsifier for |b(z)| <= c1 exp(c2 |z|^k) (or c1 exp(M(c2 |z|))) on
// the sampled sector; certifies the grid only.
GrowthOutcome growth_certificate(const std::function<Complex(Complex)>& b, Sector sector,
                                 const GrowthKind& kind, int samples, GrowthOptions opts = {});
GrowthOutcome growth_certificate(const FormalPowerSeries& b, Sector sector, const GrowthKind& kind,
                                 int samples, GrowthOptions opts = {});
GrowthOutcome growth_certificate(const RationalFunction& b, Sector sector, const GrowthKind& kind,
                                 int samples, GrowthOptions opts = {});

}  // namespace summa
