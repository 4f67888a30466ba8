#include "summa/regular_seq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "summa/error.hpp"

namespace summa {

SequenceM SequenceM::gevrey(double s, int max_index) {
  if (!(s > 0)) throw Error(ErrorCode::InvalidArgument, "gevrey order must be positive");
  SequenceM m;
  m.log_m_ = [s](int p) { return s * std::lgamma(p + 1.0); };
  m.max_index_ = max_index;
  m.known_lc_ = true;
  m.label_ = "gevrey:" + std::to_string(s);
  return m;
}

SequenceM SequenceM::q_power(double q, int max_index) {
  if (!(q > 1)) throw Error(ErrorCode::InvalidArgument, "q-power sequence needs q > 1");
  SequenceM m;
  const double lq = std::log(q);
  m.log_m_ = [lq](int p) { return 0.5 * p * (p - 1.0) * lq; };
  m.max_index_ = max_index;
  m.known_lc_ = true;
  m.label_ = "qpower:" + std::to_string(q);
  return m;
}

SequenceM SequenceM::constant(int max_index) {
  SequenceM m;
  m.log_m_ = [](int) { return 0.0; };
  m.max_index_ = max_index;
  m.known_lc_ = true;
  m.label_ = "constant";
  return m;
}

SequenceM SequenceM::from_values(const std::vector<double>& values, std::string label) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "sequence needs M_0");
  if (std::fabs(values[0] - 1.0) > 1e-12) throw Error(ErrorCode::InvalidArgument, "M_0 must equal 1");
  auto table = std::make_shared<std::vector<double>>();
  for (double v : values) {
    if (!(v > 0) || !std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "sequence values must be positive");
    table->push_back(std::log(v));
  }
  SequenceM m;
  m.table_ = table;
  m.max_index_ = static_cast<int>(values.size()) - 1;
  m.label_ = std::move(label);
  return m;
}

SequenceM SequenceM::from_log_generator(std::function<double(int)> log_m, int max_index, std::string label) {
  if (std::fabs(log_m(0)) > 1e-12) throw Error(ErrorCode::InvalidArgument, "M_0 must equal 1");
  SequenceM m;
  m.log_m_ = std::move(log_m);
  m.max_index_ = max_index;
  m.label_ = std::move(label);
  return m;
}

double SequenceM::log_value(int p) const {
  if (p < 0 || p > max_index_)
    throw Error(ErrorCode::WindowExceeded, "index " + std::to_string(p) + " outside [0, " +
                                               std::to_string(max_index_) + "]");
  return table_ ? (*table_)[p] : log_m_(p);
}

std::vector<double> SequenceM::logs(int n) const {
  if (n > max_index_) throw Error(ErrorCode::WindowExceeded, "window beyond max_index");
  std::vector<double> out(n + 1);
  for (int p = 0; p <= n; ++p) out[p] = log_value(p);
  return out;
}

bool check_lc(const SequenceM& M, int N) {
  if (N > M.max_index() - 1) throw Error(ErrorCode::WindowExceeded, "check_lc needs N <= max_index - 1");
  std::vector<double> L = M.logs(N + 1);
  for (int p = 1; p <= N; ++p) {
    double slack = 1e-14 * std::max(1.0, std::fabs(L[p]));
    if (2.0 * L[p] > L[p - 1] + L[p + 1] + slack) return false;
  }
  return true;
}

double mg_log_constant(const std::vector<double>& L, int N, Exec exec) {
  double best = 0.0;
  if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(max : best) schedule(dynamic, 16)
    for (int n = 2; n <= N; ++n)
      for (int p = 1; p <= n / 2; ++p) best = std::max(best, (L[n] - L[p] - L[n - p]) / n);
  } else {
    for (int n = 2; n <= N; ++n)
      for (int p = 1; p <= n / 2; ++p) best = std::max(best, (L[n] - L[p] - L[n - p]) / n);
  }
  // p = 0 or n = 1 pairs contribute exactly 0.
  return best;
}

MgResult check_mg(const SequenceM& M, int N, Exec exec) {
  if (2 * N > M.max_index()) throw Error(ErrorCode::WindowExceeded, "check_mg needs 2N <= max_index");
  if (N < 4) throw Error(ErrorCode::InvalidArgument, "check_mg needs N >= 4");
  std::vector<double> L = M.logs(N);
  double full = mg_log_constant(L, N, exec);
  double half = mg_log_constant(L, N / 2, exec);
  MgResult r;
  r.A = std::exp(full);
  r.A_half = std::exp(half);
  r.ok = full <= 1e-12 || (full - half) / full <= 0.2;
  return r;
}

SnqResult check_snq(const SequenceM& M, int N, int tail_horizon) {
  if (tail_horizon < 3) throw Error(ErrorCode::InvalidArgument, "tail horizon must be >= 3");
  if (N + tail_horizon > M.max_index()) throw Error(ErrorCode::WindowExceeded, "check_snq needs N + horizon <= max_index");
  const int top = N + tail_horizon;
  if (!check_lc(M, top - 1)) return {SnqStatus::Inconclusive, 0.0, "(lc) fails on the window"};
  std::vector<double> L = M.logs(top);
  SnqResult out{SnqStatus::Finite, 0.0, ""};
  for (int p = 0; p <= N; ++p) {
    const double lnorm = L[p] - L[p + 1];
    // log of M_q / ((q+1) M_{q+1}) relative to M_p / M_{p+1}
    auto lterm = [&](int q) { return L[q] - L[q + 1] - std::log(q + 1.0) - lnorm; };
    const int last = p + tail_horizon - 1;
    double sum = 0.0;
    for (int q = p; q <= last; ++q) sum += std::exp(lterm(q));
    double alpha = -(lterm(last) - lterm(last - 1)) / std::log((last + 1.0) / last);
    if (!(alpha > 1.0 + 1e-9))
      return {SnqStatus::Inconclusive, 0.0, "terms decay no faster than 1/q at p = " + std::to_string(p)};
    double tail = std::exp(lterm(last)) * (last + 1.0) / (alpha - 1.0);
    out.B = std::max(out.B, sum + tail);
  }
  return out;
}

namespace {

std::vector<double> growth_ratios(const SequenceM& M, int lo, int hi) {
  std::vector<double> r;
  for (int p = std::max(2, lo); p <= hi; ++p) r.push_back((M.log_value(p + 1) - M.log_value(p)) / std::log(p));
  return r;
}

}  // namespace

OmegaResult omega(const SequenceM& M, int N, const OmegaOptions& opts) {
  if (N < 10) throw Error(ErrorCode::InvalidArgument, "omega needs N >= 10");
  if (N + 1 > M.max_index()) throw Error(ErrorCode::WindowExceeded, "omega needs N + 1 <= max_index");
  std::vector<double> r = growth_ratios(M, N / 2, N);
  OmegaResult out;
  const std::size_t n = r.size(), half = n / 2, quarter = std::max<std::size_t>(1, n / 4);
  out.value = *std::min_element(r.begin(), r.end());
  double first = *std::min_element(r.begin(), r.begin() + half);
  double second = *std::min_element(r.begin() + half, r.end());
  out.spread = std::fabs(second - first);
  double early = 0.0, late = 0.0;
  for (std::size_t i = 0; i < quarter; ++i) {
    early += r[i];
    late += r[n - 1 - i];
  }
  // Bounded ratios level off across the window; log q^p / log p keeps climbing.
  out.infinite = (out.value > opts.ceiling && late > early) || (early > 0 && late > opts.growth_factor * early);
  out.stable = !out.infinite && out.spread < opts.stability_eps;
  return out;
}

double m_of_t(const SequenceM& M, double t) {
  if (!(t > 0)) throw Error(ErrorCode::InvalidArgument, "m_of_t needs t > 0");
  const double lt = std::log(t);
  const int top = M.max_index();
  double best = 0.0;  // p = 0
  int arg = 0;
  double prev = 0.0;
  for (int p = 1; p <= top; ++p) {
    double v = p * lt - M.log_value(p);
    if (M.known_lc() && v <= prev) return best;
    if (v > best) {
      best = v;
      arg = p;
    }
    prev = v;
  }
  if (arg == top)
    throw Error(ErrorCode::SupAtWindowEdge, "sup attained at max_index " + std::to_string(top) + " for t = " +
                                                std::to_string(t));
  return best;
}

double m_of_t_counting(const SequenceM& M, double t) {
  if (!(t > 0)) throw Error(ErrorCode::InvalidArgument, "m_of_t_counting needs t > 0");
  const double lt = std::log(t);
  std::vector<double> lmu;
  for (int j = 0; j < M.max_index(); ++j) lmu.push_back(M.log_value(j + 1) - M.log_value(j));
  std::sort(lmu.begin(), lmu.end());
  if (!lmu.empty() && lmu.back() <= lt)
    throw Error(ErrorCode::SupAtWindowEdge, "every window ratio lies below t");
  // N(r) is the number of ratios <= r; integrate N(r)/r piecewise in log r.
  double total = 0.0;
  for (std::size_t k = 0; k < lmu.size() && lmu[k] <= lt; ++k) {
    double next = (k + 1 < lmu.size()) ? std::min(lmu[k + 1], lt) : lt;
    total += static_cast<double>(k + 1) * (next - lmu[k]);
  }
  return total;
}

double d_M(const SequenceM& M, double t) {
  if (!(t > 1)) throw Error(ErrorCode::NotYetPositive, "d_M needs t > 1");
  double m = m_of_t(M, t);
  if (!(m > 1)) throw Error(ErrorCode::NotYetPositive, "M(t) <= 1 at t = " + std::to_string(t));
  return std::log(m) / std::log(t);
}

ProximateOrderResult proximate_order_check(const SequenceM& M, int N, double eps) {
  if (N < 100) throw Error(ErrorCode::InvalidArgument, "proximate_order_check needs N >= 100");
  if (N + 1 > M.max_index()) throw Error(ErrorCode::WindowExceeded, "needs N + 1 <= max_index");
  std::vector<double> r = growth_ratios(M, N / 2, N);
  ProximateOrderResult out;
  out.liminf = *std::min_element(r.begin(), r.end());
  out.limsup = *std::max_element(r.begin(), r.end());
  out.spread = out.limsup - out.liminf;
  out.ok = out.spread < eps;
  return out;
}

Diagnostics diagnose(const SequenceM& M, const DiagnosticsOptions& opts) {
  Diagnostics d;
  const int N = opts.N;
  d.lc_ok = check_lc(M, std::min(N, M.max_index() - 1));
  d.mg_detail = check_mg(M, std::min(N, M.max_index() / 2), opts.exec);
  if (d.mg_detail.ok) d.mg = d.mg_detail.A;
  const int snq_n = std::min(N, M.max_index() - opts.horizon);
  d.snq = snq_n >= 0 ? check_snq(M, snq_n, opts.horizon) : SnqResult{SnqStatus::Inconclusive, 0.0, "window too short"};
  const int top = std::min(N, M.max_index() - 1);
  d.omega = omega(M, top, opts.omega);
  d.proximate = proximate_order_check(M, top, opts.proximate_eps);
  return d;
}

}  // namespace summa
