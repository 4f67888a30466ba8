#include "summa/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "linalg.hpp"
#include "summa/error.hpp"

namespace summa {

namespace {

bool all_exact(std::span<const Coefficient> d) {
  return std::all_of(d.begin(), d.end(), [](const Coefficient& c) { return c.is_exact(); });
}

detail::Matrix hankel_matrix(std::span<const Coefficient> d, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Hankel order must be >= 1");
  if (static_cast<int>(d.size()) < 2 * n - 1)
    throw Error(ErrorCode::InsufficientCoefficients,
                "H_" + std::to_string(n) + " needs " + std::to_string(2 * n - 1) + " coefficients, have " +
                    std::to_string(d.size()));
  detail::Matrix m(n, std::vector<Coefficient>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = d[i + j];
  return m;
}

struct Lfsr {
  int length = 0;
  std::vector<Coefficient> conn;  // conn[0] = 1
};

Lfsr berlekamp_massey(std::span<const Coefficient> s, bool exact, double tol) {
  std::vector<Coefficient> c{Coefficient(1)}, b{Coefficient(1)};
  int length = 0, shift = 1;
  Coefficient last(1);
  for (int n = 0; n < static_cast<int>(s.size()); ++n) {
    Coefficient disc = s[n];
    double scale = s[n].abs();
    for (int i = 1; i <= length && i < static_cast<int>(c.size()); ++i) {
      if (c[i].is_zero()) continue;
      disc += c[i] * s[n - i];
      if (!exact) scale += c[i].abs() * s[n - i].abs();
    }
    bool zero = exact ? disc.is_zero() : disc.abs() <= tol * scale;
    if (zero) {
      ++shift;
      continue;
    }
    Coefficient factor = disc / last;
    std::vector<Coefficient> prev = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, exact ? Coefficient(0) : Coefficient(0.0));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= factor * b[i];
    if (2 * length <= n) {
      length = n + 1 - length;
      b = std::move(prev);
      last = disc;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(static_cast<std::size_t>(length) + 1, exact ? Coefficient(0) : Coefficient(0.0));
  return {length, c};
}

double row_scale(std::span<const Coefficient> d, const Recursion& rec, int j) {
  double s = d[j - 1].abs();
  for (int k = 1; k <= rec.r; ++k) s += rec.a[k - 1].abs() * d[j - k - 1].abs();
  return s;
}

// Least-squares fit of d_j ~ sum_k a_k d_{j-k} over j in [lo, hi], rows scaled by s_j.
bool fit_recursion(std::span<const Coefficient> d, int r, int lo, int hi,
                   const std::vector<Coefficient>& scale2, std::vector<Coefficient>& a) {
  detail::Matrix g(r, std::vector<Coefficient>(r, Coefficient(0)));
  std::vector<Coefficient> rhs(r, Coefficient(0));
  for (int j = lo; j <= hi; ++j) {
    const Coefficient& s2 = scale2[j];
    for (int k = 1; k <= r; ++k) {
      Coefficient lhs = d[j - k - 1].conj() * s2;
      rhs[k - 1] += lhs * d[j - 1];
      for (int l = 1; l <= r; ++l) g[k - 1][l - 1] += lhs * d[j - l - 1];
    }
  }
  return detail::solve_linear(std::move(g), std::move(rhs), a, 1e-300);
}

}  // namespace

Coefficient hankel_det(std::span<const Coefficient> d, int n) {
  detail::Matrix m = hankel_matrix(d, n);
  return detail::all_exact(m) ? detail::det_bareiss(std::move(m)) : detail::det_lu(m);
}

bool hankel_det_is_zero(std::span<const Coefficient> d, int n, double tol) {
  detail::Matrix m = hankel_matrix(d, n);
  if (detail::all_exact(m)) return detail::det_bareiss(std::move(m)).is_zero();
  double bound = 1.0;
  for (const auto& row : m) {
    double s = 0.0;
    for (const auto& v : row) s += std::norm(v.to_complex());
    bound *= std::sqrt(s);
  }
  return detail::det_lu(m).abs() <= tol * bound;
}

HankelReport hankel_report(std::span<const Coefficient> d, int rank, int extra, double tol) {
  HankelReport rep;
  rep.rank = rank;
  int top = std::min(rank + extra, (static_cast<int>(d.size()) + 1) / 2);
  bool counting = true;
  for (int n = 1; n <= top; ++n) {
    rep.determinants.emplace_back(n, hankel_det(d, n));
    if (n > rank && counting) {
      if (hankel_det_is_zero(d, n, tol)) ++rep.extra_zero_checks;
      else counting = false;
    }
  }
  return rep;
}

Outcome<Recursion> min_recursion(std::span<const Coefficient> d, const MomentWeight& weight, double tol) {
  if (d.empty()) throw Error(ErrorCode::EmptyInput, "min_recursion on an empty sequence");
  const bool exact = all_exact(d);
  const int n = static_cast<int>(d.size());
  Lfsr lfsr = berlekamp_massey(d, exact, tol);
  if (lfsr.length == 0) return NotFound{NotFoundReason::ZeroSequence, "all coefficients vanish"};
  const int len = lfsr.length;
  if (n < std::max(2 * len + 2, 3 * len))
    return NotFound{NotFoundReason::InsufficientWindow,
                    "recursion of order " + std::to_string(len) + " needs at least " +
                        std::to_string(std::max(2 * len + 2, 3 * len)) + " coefficients, have " +
                        std::to_string(n)};
  Recursion rec;
  rec.r = len;
  rec.weight = weight;
  for (int k = 1; k <= len; ++k) rec.a.push_back(-lfsr.conn[k]);
  if (exact) return rec;

  const double verify_tol = 100.0 * tol;
  double amax = 0.0;
  for (const auto& a : rec.a) amax = std::max(amax, a.abs());
  if (rec.r > 1 && rec.a.back().abs() <= tol * amax) {
    Recursion lower;
    lower.r = rec.r - 1;
    lower.weight = weight;
    std::vector<Coefficient> ones(n + 1, Coefficient(1.0));
    if (fit_recursion(d, lower.r, lower.r + 1, n, ones, lower.a) && recursion_holds(d, lower, verify_tol))
      return lower;
  }
  if (!recursion_holds(d, rec, verify_tol))
    return NotFound{NotFoundReason::NoLowOrderFit, "float recursion fails verification"};
  return rec;
}

RecursionCheck verify_recursion(std::span<const Coefficient> d, const Recursion& rec) {
  RecursionCheck out;
  out.exact_hold = true;
  for (int j = rec.r + 1; j <= static_cast<int>(d.size()); ++j) {
    Coefficient res = d[j - 1];
    for (int k = 1; k <= rec.r; ++k)
      if (!rec.a[k - 1].is_zero()) res -= rec.a[k - 1] * d[j - k - 1];
    if (!(res.is_exact() && res.is_zero())) out.exact_hold = false;
    out.max_abs = std::max(out.max_abs, res.abs());
    out.residuals.push_back(std::move(res));
  }
  return out;
}

bool recursion_holds(std::span<const Coefficient> d, const Recursion& rec, double tol) {
  RecursionCheck chk = verify_recursion(d, rec);
  if (chk.exact_hold) return true;
  if (all_exact(d) && std::all_of(rec.a.begin(), rec.a.end(), [](const Coefficient& c) { return c.is_exact(); }))
    return false;
  for (int j = rec.r + 1; j <= static_cast<int>(d.size()); ++j)
    if (chk.residuals[j - rec.r - 1].abs() > tol * row_scale(d, rec, j)) return false;
  return true;
}

RationalFunction rational_reconstruct(std::span<const Coefficient> d, const Recursion& rec, double tol) {
  if (static_cast<int>(d.size()) <= rec.r || !recursion_holds(d, rec, tol))
    throw Error(ErrorCode::RecursionNotVerified, "recursion does not reproduce the sequence");
  std::vector<Coefficient> num{Coefficient(0)};
  for (int i = 1; i <= rec.r; ++i) {
    Coefficient c = d[i - 1];
    for (int k = 1; k < i; ++k) c -= rec.a[k - 1] * d[i - k - 1];
    num.push_back(c);
  }
  return RationalFunction(Polynomial(std::move(num)), recursion_polynomial(rec));
}

BoundFit fit_bound(std::span<const int> indices, std::span<const double> log_scaled,
                   std::span<const double> M_grid) {
  if (M_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty M grid");
  std::vector<double> grid(M_grid.begin(), M_grid.end());
  std::sort(grid.begin(), grid.end());
  const double ninf = -std::numeric_limits<double>::infinity();
  const std::size_t n = indices.size();
  BoundFit fallback;
  for (double M : grid) {
    if (!(M > 0)) throw Error(ErrorCode::InvalidArgument, "M must be positive");
    std::vector<double> e(n);
    double emax = ninf;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = log_scaled[i] - indices[i] * std::log(M);
      emax = std::max(emax, e[i]);
    }
    if (emax == ninf) return {0.0, M, true};
    std::size_t last = std::max<std::size_t>(1, n / 3);
    double late = *std::max_element(e.end() - static_cast<std::ptrdiff_t>(last), e.end());
    double early = n > last ? *std::max_element(e.begin(), e.end() - static_cast<std::ptrdiff_t>(last)) : late;
    BoundFit fit{std::exp(emax), M, late <= early + std::log(2.0)};
    if (fit.growth_consistent) return fit;
    fallback = fit;
  }
  return fallback;
}

Outcome<ApproxRecursionCertificate> approx_recursion(std::span<const Coefficient> f, const MomentWeight& weight,
                                                     int r_max, const ApproxOptions& opts) {
  const int n = static_cast<int>(f.size());
  if (r_max < 1 || n < 4 * r_max)
    throw Error(ErrorCode::InvalidArgument, "approx_recursion needs N >= 4 r_max");
  const bool exact = all_exact(f) && weight.is_exact();
  std::vector<Coefficient> w = weight.values(n);
  std::vector<Coefficient> d;
  double dmax = 0.0;
  for (int j = 1; j <= n; ++j) {
    d.push_back(exact ? f[j - 1] / w[j] : Coefficient(f[j - 1].to_complex() / w[j].to_complex()));
    dmax = std::max(dmax, d.back().abs());
  }
  if (dmax == 0.0) return NotFound{NotFoundReason::ZeroSequence, "all coefficients vanish"};
  const int tail = opts.tail > 0 ? opts.tail : n / 4;
  std::vector<double> grid = opts.M_grid;
  std::sort(grid.begin(), grid.end());

  for (int r = 1; r <= r_max; ++r) {
    std::optional<ApproxRecursionCertificate> fallback;
    for (double M : grid) {
      // Row scale s_j = w_j / M^j; squared for the normal equations.
      std::vector<Coefficient> s2(n + 1);
      if (exact) {
        Rational m = rational_from_double(M);
        Rational mp = 1;
        for (int j = 1; j <= n; ++j) {
          mp *= m;
          Rational s = w[j].exact().re() / mp;
          s2[j] = Coefficient(Rational(s * s));
        }
      } else {
        double top = -std::numeric_limits<double>::infinity();
        std::vector<double> ls(n + 1);
        for (int j = 1; j <= n; ++j) top = std::max(top, ls[j] = weight.log_value(j) - j * std::log(M));
        for (int j = 1; j <= n; ++j) s2[j] = Coefficient(std::exp(2.0 * (ls[j] - top)));
      }
      Recursion rec;
      rec.r = r;
      rec.weight = weight;
      if (n - tail < 2 * r || !fit_recursion(d, r, r + 1, n - tail, s2, rec.a)) continue;
      RecursionCheck val = verify_recursion(d, rec);
      double worst = 0.0;
      for (int j = n - tail + 1; j <= n; ++j) worst = std::max(worst, val.residuals[j - r - 1].abs() / dmax);
      if (worst > opts.cap) continue;
      if (!fit_recursion(d, r, r + 1, n, s2, rec.a)) continue;
      RecursionCheck full = verify_recursion(d, rec);
      std::vector<int> idx;
      std::vector<double> logs;
      for (int j = r + 1; j <= n; ++j) {
        idx.push_back(j);
        logs.push_back(full.residuals[j - r - 1].log_abs() + weight.log_value(j));
      }
      double grid_m[] = {M};
      BoundFit bound = fit_bound(idx, logs, grid_m);
      ApproxRecursionCertificate cert{rec, bound.C, M, worst, bound.growth_consistent};
      if (bound.growth_consistent) return cert;
      fallback = cert;
    }
    if (fallback) return *fallback;
  }
  return NotFound{NotFoundReason::NoLowOrderFit,
                  "no recursion of order <= " + std::to_string(r_max) + " within residual cap"};
}

}  // namespace summa
