#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace summa {

enum class Exec { Serial, Parallel };

// Positive sequence M_0 = 1, M_1, ..., M_{max_index}, held as log M_p.
class SequenceM {
 public:
  static SequenceM gevrey(double s, int max_index);  // p!^s
  static SequenceM q_power(double q, int max_index);  // q^{p(p-1)/2}
  static SequenceM constant(int max_index);           // 1
  static SequenceM from_values(const std::vector<double>& values, std::string label = "custom");
  static SequenceM from_log_generator(std::function<double(int)> log_m, int max_index, std::string label);

  double log_value(int p) const;
  int max_index() const { return max_index_; }
  const std::string& label() const { return label_; }
  // Log-convexity known from the family (p!^s, q-power, constant) rather than checked.
  bool known_lc() const { return known_lc_; }
  // log M_0 .. log M_n
  std::vector<double> logs(int n) const;

 private:
  std::function<double(int)> log_m_;
  std::shared_ptr<const std::vector<double>> table_;
  int max_index_ = 0;
  bool known_lc_ = false;
  std::string label_;
};

// M_p^2 <= M_{p-1} M_{p+1} for 1 <= p <= N (log space, slack 1e-14 relative).
bool check_lc(const SequenceM& M, int N);

struct MgResult {
  bool ok = false;
  double A = 0.0;  // max over p+q <= N of (M_{p+q}/(M_p M_q))^{1/(p+q)}
  double A_half = 0.0;  // same over p+q <= N/2
};

// Failure (ok = false) when log A still grows by more than 20% between N/2 and N.
MgResult check_mg(const SequenceM& M, int N, Exec exec = Exec::Serial);
// The raw pair-scan maximum of log(M_{p+q}/(M_p M_q))/(p+q) over 2 <= p+q <= N.
double mg_log_constant(const std::vector<double>& logs, int N, Exec exec);

enum class SnqStatus { Finite, Inconclusive };

struct SnqResult {
  SnqStatus status = SnqStatus::Inconclusive;
  double B = 0.0;
  std::string reason;
};

SnqResult check_snq(const SequenceM& M, int N, int tail_horizon);

// omega is flagged infinite when the ratios log(M_{p+1}/M_p)/log p exceed the
// ceiling, or when their mean over the last quarter of [N/2, N] exceeds
// growth_factor times the mean over the first quarter.
struct OmegaOptions {
  double ceiling = 50.0;
  double growth_factor = 1.25;
  double stability_eps = 0.05;
};

struct OmegaResult {
  double value = 0.0;  // infimum over [N/2, N]
  bool infinite = false;
  bool stable = false;  // inf over [N/2, 3N/4] vs [3N/4, N] within eps
  double spread = 0.0;
};

OmegaResult omega(const SequenceM& M, int N, const OmegaOptions& opts = {});

// sup_p (p log t - log M_p); SupAtWindowEdge when attained at max_index.
double m_of_t(const SequenceM& M, double t);
// int_0^t #{j : M_{j+1}/M_j <= r} dr / r, the counting form.
double m_of_t_counting(const SequenceM& M, double t);
// log M(t) / log t; NotYetPositive while t <= 1 or M(t) <= 1.
double d_M(const SequenceM& M, double t);

struct ProximateOrderResult {
  bool ok = false;
  double spread = 0.0;  // limsup - liminf estimate over [N/2, N]
  double liminf = 0.0;
  double limsup = 0.0;
};

ProximateOrderResult proximate_order_check(const SequenceM& M, int N, double eps = 0.05);

struct DiagnosticsOptions {
  int N = 1000;
  int horizon = 200;
  OmegaOptions omega;
  double proximate_eps = 0.05;
  Exec exec = Exec::Serial;
};

struct Diagnostics {
  bool lc_ok = false;
  std::optional<double> mg;  // empty on Failure
  MgResult mg_detail;
  SnqResult snq;
  OmegaResult omega;
  ProximateOrderResult proximate;
};

Diagnostics diagnose(const SequenceM& M, const DiagnosticsOptions& opts);

}  // namespace summa
