#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "summa/coefficient.hpp"

namespace summa {

// Moment weight w_p dividing f_p in the formal Borel transform:
// p!^s, q^{p(p-1)/2}, or a user moment sequence m(p) with m(0) = 1.
class MomentWeight {
 public:
  enum class Kind { Factorial, QPower, Custom };

  static MomentWeight factorial(int s = 1);
  static MomentWeight qpower(const Rational& q);
  static MomentWeight qpower(double q) { return qpower(rational_from_double(q)); }
  static MomentWeight custom(std::vector<Coefficient> values, std::string label = "custom");
  static MomentWeight custom(std::function<Coefficient(int)> generator, std::string label);
  // m(p) = 1 for all p.
  static MomentWeight unit();

  Kind kind() const { return kind_; }
  int s() const { return s_; }
  const Rational& q() const { return q_; }
  double q_double() const { return q_.get_d(); }
  bool is_unit() const { return unit_; }
  bool is_exact() const;
  // Largest index with a defined value (custom lists only).
  std::optional<int> max_index() const;
  const std::string& label() const { return label_; }

  Coefficient value(int p) const;
  // w_0 ... w_n, computed incrementally.
  std::vector<Coefficient> values(int n) const;
  double log_value(int p) const;

 private:
  MomentWeight() = default;
  void check_index(int p) const;

  Kind kind_ = Kind::Factorial;
  int s_ = 1;
  Rational q_{0};
  bool unit_ = false;
  std::string label_;
  std::shared_ptr<const std::vector<Coefficient>> list_;
  std::function<Coefficient(int)> generator_;
};

}  // namespace summa
