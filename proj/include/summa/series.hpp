#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "summa/coefficient.hpp"
#include "summa/recursion.hpp"
#include "summa/weight.hpp"

namespace summa {

inline constexpr double kDefaultTolerance = 1e-12;

// Truncated formal power series f_start ... f_N, materialised at construction.
// Exact or float mode is uniform across the coefficients.
class FormalPowerSeries {
 public:
  struct ExplicitList {};
  struct RecursionGenerated {
    Recursion rec;
    std::vector<Coefficient> seeds;
  };
  struct ClosedForm {
    std::string label;
  };
  using Source = std::variant<ExplicitList, RecursionGenerated, ClosedForm>;

  FormalPowerSeries() = default;  // empty series starting at 1

  // coeffs[i] is f_{start+i}.
  static FormalPowerSeries from_list(int start, std::vector<Coefficient> coeffs,
                                     double tol = kDefaultTolerance);
  static FormalPowerSeries from_closed_form(int start, int order,
                                            const std::function<Coefficient(int)>& f,
                                            std::string label, double tol = kDefaultTolerance);
  static FormalPowerSeries zero(int start, int order);

  int start_index() const { return start_; }
  int available_order() const { return start_ + static_cast<int>(c_.size()) - 1; }
  bool is_exact() const { return exact_; }
  double tolerance() const { return tol_; }
  const Source& source() const { return source_; }

  // f_p for start <= p <= N; IndexOutOfRange otherwise.
  const Coefficient& coeff(int p) const;
  // f_p with implicit zeros below start; IndexOutOfRange above N.
  Coefficient at(int p) const;
  // Constant term f_0 (zero unless start == 0).
  Coefficient offset() const;
  // f_1 ... f_N (the p >= 1 view).
  std::vector<Coefficient> canonical() const;
  // f_0 ... f_N.
  std::vector<Coefficient> dense() const;
  std::span<const Coefficient> stored() const { return c_; }

  FormalPowerSeries truncated(int order) const;
  // Same coefficients from p = 1, constant term dropped.
  FormalPowerSeries canonicalized() const;
  bool is_zero() const;
  double max_abs() const;
  // sum_{p <= n} f_p z^p
  Complex partial_sum(Complex z, int n) const;

  FormalPowerSeries with_source(Source s) const;

 private:
  int start_ = 1;
  bool exact_ = true;
  double tol_ = kDefaultTolerance;
  std::vector<Coefficient> c_;
  Source source_ = ExplicitList{};
};

const Coefficient& coeff(const FormalPowerSeries& series, int p);

// f_p / w_p termwise.
FormalPowerSeries borel_transform(const FormalPowerSeries& series, const MomentWeight& weight);

// f_1..f_r = seeds, f_j = w_j sum_{k=j-r}^{j-1} a_{j-k} f_k / w_k for r < j <= N.
FormalPowerSeries generate_from_recursion(const Recursion& rec, std::span<const Coefficient> seeds,
                                          const MomentWeight& weight, int N);

// Gevrey order s in |f_p| <= C A^p p!^s: least-squares coefficient of log p!
// in a fit of log|f_p| on (1, p, log p!).
double gevrey_order_estimate(const FormalPowerSeries& series, int p_max);

}  // namespace summa
