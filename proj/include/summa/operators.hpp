#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>

#include "summa/hankel.hpp"
#include "summa/polynomial.hpp"
#include "summa/series.hpp"

namespace summa {

// z^2 d/dz + z
struct Diff1 {};
// z (z d/dz + 1)^s, s >= 2
struct DiffS {
  int s = 2;
};
// z d_m (z .)
struct Moment {
  MomentWeight m;
};
// z sigma_q
struct QDilation {
  Rational q;
};

using OperatorKind = std::variant<Diff1, DiffS, Moment, QDilation>;

// Diff1 for s == 1, DiffS otherwise.
OperatorKind diff_operator(int s);
OperatorKind kind_for_weight(const MomentWeight& w);
MomentWeight weight_for_kind(const OperatorKind& kind);
std::string kind_name(const OperatorKind& kind);

struct OdeSpec {
  OperatorKind kind;
  Polynomial P;           // P(0) = 1
  FormalPowerSeries rhs;  // g
};

// Normalises P(0) to 1 (dividing P and rhs); InvalidArgument when P(0) = 0.
OdeSpec make_ode_spec(OperatorKind kind, Polynomial P, FormalPowerSeries rhs);

// op^m applied to the series, valid through its available order.
FormalPowerSeries apply_operator(const OperatorKind& kind, const FormalPowerSeries& series, int m);

// d_m(sum c_p z^p) = sum (m(p+1)/m(p)) c_{p+1} z^p; output order N - 1.
FormalPowerSeries moment_derivative(const FormalPowerSeries& series, const MomentWeight& m);

// P = 1 - a_1 z - ... - a_r z^r and rhs b_j = f_j - w_j sum a_{j-k} f_k / w_k
// for 1 <= j <= N_rhs. `kind`, when given, must match rec.weight.
OdeSpec recursion_to_ode(const Recursion& rec, std::span<const Coefficient> seeds, int N_rhs,
                         const std::optional<OperatorKind>& kind = std::nullopt);

// Recursion read off P plus a (C, M) bound on the rhs coefficients b_j, j > r.
Outcome<ApproxRecursionCertificate> ode_to_recursion(const OdeSpec& spec, const FormalPowerSeries& f, int N,
                                                     std::span<const double> M_grid = {});

// Coefficients of P(op) f - g through order N.
FormalPowerSeries formal_residual(const OdeSpec& spec, const FormalPowerSeries& f, int N);

// formal_residual is the zero series (exactly, or within the series tolerance).
bool is_formal_solution(const OdeSpec& spec, const FormalPowerSeries& f, int N);

}  // namespace summa
