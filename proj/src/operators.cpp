#include "summa/operators.hpp"

#include <algorithm>
#include <cmath>

#include "summa/error.hpp"

namespace summa {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Coefficient zero_like(bool exact) { return exact ? Coefficient(0) : Coefficient(0.0); }

// Multiplication by z on the window [start, N]: f_{p-1} moves to p.
std::vector<Coefficient> shift_up(const FormalPowerSeries& f) {
  std::vector<Coefficient> out;
  for (int p = f.start_index(); p <= f.available_order(); ++p)
    out.push_back(p >= 1 ? f.at(p - 1) : zero_like(f.is_exact()));
  return out;
}

FormalPowerSeries rebuild(const FormalPowerSeries& like, std::vector<Coefficient> c) {
  return FormalPowerSeries::from_list(like.start_index(), std::move(c), like.tolerance());
}

FormalPowerSeries step(const OperatorKind& kind, const FormalPowerSeries& f) {
  const int start = f.start_index();
  const int n = f.available_order();
  return std::visit(
      overloaded{
          [&](const Diff1&) {
            // z^2 f' + z f
            std::vector<Coefficient> out = shift_up(f);
            for (int p = start; p <= n; ++p)
              if (p >= 2) out[p - start] += Coefficient(p - 1) * f.at(p - 1);
            return rebuild(f, std::move(out));
          },
          [&](const DiffS& d) {
            std::vector<Coefficient> g(f.stored().begin(), f.stored().end());
            for (int it = 0; it < d.s; ++it)
              for (int p = start; p <= n; ++p) g[p - start] = Coefficient(p) * g[p - start] + g[p - start];
            FormalPowerSeries tmp = rebuild(f, std::move(g));
            return rebuild(f, shift_up(tmp));
          },
          [&](const Moment& m) {
            // z d_m (z f); z f is cut at order n since only f_{p-1}, p <= n, is needed.
            std::vector<Coefficient> out;
            if (n - start < 1) {
              for (int p = start; p <= n; ++p) out.push_back(zero_like(f.is_exact()));
              return rebuild(f, std::move(out));
            }
            FormalPowerSeries zf = FormalPowerSeries::from_list(
                start + 1, std::vector<Coefficient>(f.stored().begin(), f.stored().end() - 1), f.tolerance());
            FormalPowerSeries dz = moment_derivative(zf, m.m);
            for (int p = start; p <= n; ++p)
              out.push_back(p - 1 >= dz.start_index() ? dz.at(p - 1) : zero_like(f.is_exact()));
            return rebuild(f, std::move(out));
          },
          [&](const QDilation& q) {
            std::vector<Coefficient> out;
            Rational qp = 1;  // q^{p-1}
            for (int p = 1; p < start; ++p) qp *= q.q;
            for (int p = start; p <= n; ++p) {
              if (p >= 1) {
                out.push_back(Coefficient(qp) * f.at(p - 1));
                qp *= q.q;
              } else {
                out.push_back(zero_like(f.is_exact()));
              }
            }
            return rebuild(f, std::move(out));
          },
      },
      kind);
}

FormalPowerSeries combine(const std::vector<std::pair<Coefficient, const FormalPowerSeries*>>& terms, int start,
                          int N, double tol) {
  std::vector<Coefficient> out;
  for (int p = start; p <= N; ++p) {
    Coefficient acc(0);
    for (const auto& [c, s] : terms)
      if (p >= s->start_index() && !c.is_zero()) acc += c * s->at(p);
    out.push_back(acc);
  }
  return FormalPowerSeries::from_list(start, std::move(out), tol);
}

}  // namespace

OperatorKind diff_operator(int s) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "differential order must be >= 1");
  if (s == 1) return Diff1{};
  return DiffS{s};
}

OperatorKind kind_for_weight(const MomentWeight& w) {
  switch (w.kind()) {
    case MomentWeight::Kind::Factorial: return diff_operator(w.s());
    case MomentWeight::Kind::QPower: return QDilation{w.q()};
    case MomentWeight::Kind::Custom: return Moment{w};
  }
  return Diff1{};
}

MomentWeight weight_for_kind(const OperatorKind& kind) {
  return std::visit(overloaded{
                        [](const Diff1&) { return MomentWeight::factorial(1); },
                        [](const DiffS& d) { return MomentWeight::factorial(d.s); },
                        [](const Moment& m) { return m.m; },
                        [](const QDilation& q) { return MomentWeight::qpower(q.q); },
                    },
                    kind);
}

std::string kind_name(const OperatorKind& kind) {
  return std::visit(overloaded{
                        [](const Diff1&) { return std::string("diff1"); },
                        [](const DiffS&) { return std::string("diffs"); },
                        [](const Moment&) { return std::string("moment"); },
                        [](const QDilation&) { return std::string("qdilation"); },
                    },
                    kind);
}

OdeSpec make_ode_spec(OperatorKind kind, Polynomial P, FormalPowerSeries rhs) {
  if (auto* d = std::get_if<DiffS>(&kind); d && d->s == 1) kind = Diff1{};
  Coefficient p0 = P.coeff(0);
  if (p0.is_zero()) throw Error(ErrorCode::InvalidArgument, "P(0) must be nonzero");
  if (!(p0 == Coefficient(1))) {
    Coefficient inv = Coefficient(1) / p0;
    P = P * inv;
    std::vector<Coefficient> c;
    for (const auto& x : rhs.stored()) c.push_back(x * inv);
    rhs = FormalPowerSeries::from_list(rhs.start_index(), std::move(c), rhs.tolerance());
  }
  return OdeSpec{std::move(kind), std::move(P), std::move(rhs)};
}

FormalPowerSeries apply_operator(const OperatorKind& kind, const FormalPowerSeries& series, int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "operator power must be >= 0");
  FormalPowerSeries out = series;
  for (int i = 0; i < m; ++i) out = step(kind, out);
  return out;
}

FormalPowerSeries moment_derivative(const FormalPowerSeries& series, const MomentWeight& m) {
  const int n = series.available_order();
  const int start = std::max(0, series.start_index() - 1);
  if (n < 1) return FormalPowerSeries::zero(0, 0);
  std::vector<Coefficient> w = m.values(n);
  std::vector<Coefficient> out;
  for (int p = start; p <= n - 1; ++p) out.push_back(w[p + 1] / w[p] * series.at(p + 1));
  return FormalPowerSeries::from_list(start, std::move(out), series.tolerance());
}

OdeSpec recursion_to_ode(const Recursion& rec, std::span<const Coefficient> seeds, int N_rhs,
                         const std::optional<OperatorKind>& kind) {
  OperatorKind k = kind_for_weight(rec.weight);
  if (kind) {
    bool same = kind->index() == k.index();
    if (same && std::holds_alternative<DiffS>(k)) same = std::get<DiffS>(*kind).s == std::get<DiffS>(k).s;
    if (same && std::holds_alternative<QDilation>(k)) same = std::get<QDilation>(*kind).q == std::get<QDilation>(k).q;
    if (!same)
      throw Error(ErrorCode::WeightKindMismatch,
                  "operator " + kind_name(*kind) + " does not match weight " + rec.weight.label());
    k = *kind;
  }
  FormalPowerSeries f = generate_from_recursion(rec, seeds, rec.weight, std::max(N_rhs, rec.r));
  std::vector<Coefficient> w = rec.weight.values(f.available_order());
  std::vector<Coefficient> b;
  for (int j = 1; j <= N_rhs; ++j) {
    Coefficient acc(0);
    for (int k2 = std::max(1, j - rec.r); k2 <= j - 1; ++k2) acc += rec.a[j - k2 - 1] * f.at(k2) / w[k2];
    b.push_back(f.at(j) - w[j] * acc);
  }
  return make_ode_spec(std::move(k), recursion_polynomial(rec), FormalPowerSeries::from_list(1, std::move(b)));
}

FormalPowerSeries formal_residual(const OdeSpec& spec, const FormalPowerSeries& f, int N) {
  if (f.available_order() < N || spec.rhs.available_order() < N)
    throw Error(ErrorCode::IndexOutOfRange, "series and rhs must reach order " + std::to_string(N));
  FormalPowerSeries base = f.truncated(N);
  std::vector<FormalPowerSeries> powers{base};
  for (int i = 1; i <= spec.P.degree(); ++i) powers.push_back(step(spec.kind, powers.back()));
  std::vector<std::pair<Coefficient, const FormalPowerSeries*>> terms;
  for (int i = 0; i <= spec.P.degree(); ++i) terms.emplace_back(spec.P.coeff(i), &powers[i]);
  FormalPowerSeries neg_rhs = rebuild(spec.rhs, [&] {
    std::vector<Coefficient> c;
    for (const auto& x : spec.rhs.stored()) c.push_back(-x);
    return c;
  }());
  terms.emplace_back(Coefficient(1), &neg_rhs);
  int start = std::min(f.start_index(), spec.rhs.start_index());
  return combine(terms, start, N, f.tolerance());
}

bool is_formal_solution(const OdeSpec& spec, const FormalPowerSeries& f, int N) {
  FormalPowerSeries res = formal_residual(spec, f, N);
  if (res.is_exact()) return res.is_zero();
  double scale = std::max({1.0, f.truncated(N).max_abs(), spec.rhs.truncated(N).max_abs()});
  for (const auto& c : res.stored())
    if (!near_zero(c, f.tolerance() * 1e3, scale)) return false;
  return true;
}

Outcome<ApproxRecursionCertificate> ode_to_recursion(const OdeSpec& spec, const FormalPowerSeries& f, int N,
                                                     std::span<const double> M_grid) {
  if (!is_formal_solution(spec, f, N))
    throw Error(ErrorCode::NotAFormalSolution, "P(op) f - g is not the null series through order " +
                                                   std::to_string(N));
  const int r = spec.P.degree();
  if (r <= 0) return NotFound{NotFoundReason::ConvergentCase, "P is constant: y = g converges"};
  MomentWeight weight = weight_for_kind(spec.kind);
  Recursion rec;
  rec.r = r;
  rec.weight = weight;
  for (int k = 1; k <= r; ++k) rec.a.push_back(-spec.P.coeff(k));
  std::vector<Coefficient> w = weight.values(N);
  std::vector<Coefficient> d;
  double dmax = 0.0;
  for (int j = 1; j <= N; ++j) {
    d.push_back(f.at(j) / w[j]);
    dmax = std::max(dmax, d.back().abs());
  }
  RecursionCheck chk = verify_recursion(d, rec);
  std::vector<int> idx;
  std::vector<double> logs;
  double worst = 0.0;
  for (int j = r + 1; j <= N; ++j) {
    const Coefficient& res = chk.residuals[j - r - 1];
    idx.push_back(j);
    logs.push_back(res.log_abs() + weight.log_value(j));
    if (dmax > 0) worst = std::max(worst, res.abs() / dmax);
  }
  static const double default_grid[] = {1.0, 2.0, 4.0, 8.0};
  std::span<const double> grid = M_grid.empty() ? std::span<const double>(default_grid) : M_grid;
  BoundFit bound = fit_bound(idx, logs, grid);
  return ApproxRecursionCertificate{rec, bound.C, bound.M, worst, bound.growth_consistent};
}

}  // namespace summa
