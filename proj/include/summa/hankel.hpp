#pragma once

#include <span>
#include <utility>
#include <vector>

#include "summa/rational.hpp"
#include "summa/recursion.hpp"

namespace summa {

// All sequence arguments d are 1-based in meaning: d[0] holds d_1.

// det of the n x n matrix (d_{i+j-1}); Bareiss in exact mode, pivoted LU otherwise.
Coefficient hankel_det(std::span<const Coefficient> d, int n);
// Zero test: exact, or |det| <= tol * product of row 2-norms.
bool hankel_det_is_zero(std::span<const Coefficient> d, int n, double tol = 1e-8);

struct HankelReport {
  int rank = 0;
  std::vector<std::pair<int, Coefficient>> determinants;  // (n, det H_n)
  int extra_zero_checks = 0;
};

// Determinants for n = 1 .. rank + extra (as far as d allows).
HankelReport hankel_report(std::span<const Coefficient> d, int rank, int extra, double tol = 1e-8);

// Minimal recursion of the sequence by Berlekamp-Massey. A length L is confirmed
// only when N >= max(2L + 2, 3L). The returned recursion carries `weight`.
Outcome<Recursion> min_recursion(std::span<const Coefficient> d,
                                 const MomentWeight& weight = MomentWeight::unit(),
                                 double tol = kDefaultTolerance);

struct RecursionCheck {
  std::vector<Coefficient> residuals;  // j = r+1 .. N
  bool exact_hold = false;
  double max_abs = 0.0;
};

RecursionCheck verify_recursion(std::span<const Coefficient> d, const Recursion& rec);
bool recursion_holds(std::span<const Coefficient> d, const Recursion& rec, double tol);

// (sum_{i=1}^{r} (d_i - sum_{k<i} a_k d_{i-k}) z^i) / (1 - a_1 z - ... - a_r z^r).
RationalFunction rational_reconstruct(std::span<const Coefficient> d, const Recursion& rec,
                                      double tol = 1e-9);

struct ApproxRecursionCertificate {
  Recursion rec;
  double C = 0.0;
  double M = 1.0;
  double max_normalized_residual = 0.0;
  // False when no M in the grid gives a non-growing residual profile.
  bool growth_consistent = true;
};

struct ApproxOptions {
  std::vector<double> M_grid{1.0, 2.0, 4.0, 8.0};
  double cap = 1e-6;
  int tail = 0;  // held-out indices; 0 means N/4
};

// f[0] holds f_1. Fits d_j ~ sum a_k d_{j-k} for d = f / w and bounds
// |d_j - sum a_k d_{j-k}| <= C M^j / w_j for all j > r.
Outcome<ApproxRecursionCertificate> approx_recursion(std::span<const Coefficient> f,
                                                     const MomentWeight& weight, int r_max,
                                                     const ApproxOptions& opts = {});

struct BoundFit {
  double C = 0.0;
  double M = 1.0;
  bool growth_consistent = true;
};

// Smallest M in the grid whose profile |b_j| w_j / M^j is non-growing, with C
// its maximum. log_scaled[i] = log(|b_j| w_j) for j = indices[i] (-inf for 0).
BoundFit fit_bound(std::span<const int> indices, std::span<const double> log_scaled,
                   std::span<const double> M_grid);

}  // namespace summa
