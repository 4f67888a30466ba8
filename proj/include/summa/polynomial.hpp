#pragma once

#include <vector>

#include "summa/coefficient.hpp"

namespace summa {

// Dense polynomial c_0 + c_1 z + ... + c_n z^n, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coefficient> coeffs);
  static Polynomial constant(Coefficient c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(int degree, Coefficient c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_exact() const;
  const std::vector<Coefficient>& coeffs() const { return c_; }
  // c_i, zero beyond the degree.
  Coefficient coeff(int i) const;
  const Coefficient& leading() const { return c_.back(); }

  Complex eval(Complex z) const;
  // sum |c_i| |z|^i, the scale for backward-error checks.
  double abs_eval(double r) const;
  Polynomial derivative() const;
  Polynomial conj() const;
  Polynomial to_float() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Coefficient& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Coefficient> c_;
};

// Quotient and remainder; exact when both inputs are exact.
void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem);
// Monic gcd of exact polynomials.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct Root {
  Complex value;
  int multiplicity = 1;
};

// All complex roots with multiplicities. Exact input is split into square-free
// factors first; float input relies on clustering within cluster_tol.
std::vector<Root> roots(const Polynomial& p, double cluster_tol = 1e-8);

}  // namespace summa
