#include "summa/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "summa/error.hpp"

namespace summa {

Polynomial::Polynomial(std::vector<Coefficient> coeffs) : c_(std::move(coeffs)) {
  if (!is_exact())
    for (auto& c : c_) c = c.to_float();
  trim();
}

Polynomial Polynomial::monomial(int degree, Coefficient c) {
  std::vector<Coefficient> v(static_cast<std::size_t>(degree) + 1, Coefficient(0));
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::is_exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const Coefficient& c) { return c.is_exact(); });
}

Coefficient Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Coefficient(0);
  return c_[i];
}

Complex Polynomial::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

double Polynomial::abs_eval(double r) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + it->abs();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Coefficient> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * Coefficient(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::conj() const {
  std::vector<Coefficient> d;
  for (const auto& c : c_) d.push_back(c.conj());
  return Polynomial(std::move(d));
}

Polynomial Polynomial::to_float() const {
  std::vector<Coefficient> d;
  for (const auto& c : c_) d.push_back(c.to_float());
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<Coefficient> d;
  for (const auto& c : c_) d.push_back(-c);
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Coefficient> d(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (int i = 0; i < static_cast<int>(d.size()); ++i) d[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(d));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Coefficient> d(static_cast<std::size_t>(a.degree() + b.degree() + 1), Coefficient(0));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(d));
}

Polynomial operator*(const Polynomial& a, const Coefficient& c) {
  std::vector<Coefficient> d;
  for (const auto& x : a.c_) d.push_back(x * c);
  return Polynomial(std::move(d));
}

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Coefficient> r = a.coeffs();
  int db = b.degree();
  std::vector<Coefficient> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), Coefficient(0));
  for (int i = a.degree() - db; i >= 0; --i) {
    Coefficient t = r[i + db] / b.leading();
    q[i] = t;
    for (int j = 0; j <= db; ++j) r[i + j] -= t * b.coeffs()[j];
    r[i + db] = r[i + db].is_exact() ? Coefficient(0) : Coefficient(0.0);
  }
  r.resize(static_cast<std::size_t>(std::max(0, db)));
  quot = Polynomial(std::move(q));
  rem = Polynomial(std::move(r));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.is_exact() || !b.is_exact()) throw Error(ErrorCode::InvalidArgument, "gcd needs exact polynomials");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Coefficient(1) / x.leading());
}

namespace {

std::vector<Complex> to_complex(const Polynomial& p) {
  std::vector<Complex> c;
  for (const auto& x : p.coeffs()) c.push_back(x.to_complex());
  return c;
}

void horner2(const std::vector<Complex>& c, Complex z, Complex& p, Complex& dp) {
  p = 0.0;
  dp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

// Aberth-Ehrlich simultaneous iteration on a polynomial with c[0] != 0.
std::vector<Complex> aberth(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) return {-c[0] / c[1]};
  double radius = std::pow(std::abs(c[0] / c[n]), 1.0 / n);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);
  for (int iter = 0; iter < 800; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex p, dp;
      horner2(c, z[k], p, dp);
      if (p == Complex(0.0)) continue;
      Complex ratio = p / dp;
      Complex s = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      Complex w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      max_step = std::max(max_step, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    if (max_step < 1e-16) break;
  }
  // Newton polish, kept only when the residual improves.
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      Complex p, dp;
      horner2(c, r, p, dp);
      if (dp == Complex(0.0)) break;
      Complex cand = r - p / dp;
      Complex pc, dpc;
      horner2(c, cand, pc, dpc);
      if (std::abs(pc) < std::abs(p)) r = cand;
      else break;
    }
  }
  return z;
}

std::vector<Root> cluster(const std::vector<Complex>& zs, int base_mult, double tol) {
  std::vector<Root> out;
  std::vector<bool> used(zs.size(), false);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (used[i]) continue;
    Complex sum = zs[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      if (!used[j] && std::abs(zs[j] - zs[i]) <= tol * std::max(1.0, std::abs(zs[i]))) {
        used[j] = true;
        sum += zs[j];
        ++count;
      }
    }
    out.push_back({sum / static_cast<double>(count), count * base_mult});
  }
  return out;
}

// Square-free decomposition (Yun): factors[i] has multiplicity i+1.
std::vector<Polynomial> squarefree(const Polynomial& f) {
  std::vector<Polynomial> out;
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial q, r;
  divmod(f, a, q, r);
  Polynomial b = q;
  divmod(df, a, q, r);
  Polynomial c = q;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial ai = gcd(b, d);
    out.push_back(ai);
    divmod(b, ai, q, r);
    b = q;
    divmod(d, ai, q, r);
    c = q;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace

std::vector<Root> roots(const Polynomial& p, double cluster_tol) {
  if (p.degree() < 1) throw Error(ErrorCode::DegreeZero, "roots of a constant polynomial");
  std::vector<Root> out;
  int zeros = 0;
  while (p.coeff(zeros).is_zero()) ++zeros;
  std::vector<Coefficient> rest(p.coeffs().begin() + zeros, p.coeffs().end());
  Polynomial core(std::move(rest));
  if (zeros > 0) out.push_back({Complex(0.0), zeros});
  if (core.degree() >= 1) {
    if (core.is_exact()) {
      auto factors = squarefree(core);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        auto part = cluster(aberth(to_complex(factors[i])), static_cast<int>(i) + 1, cluster_tol);
        out.insert(out.end(), part.begin(), part.end());
      }
    } else {
      auto part = cluster(aberth(to_complex(core)), 1, cluster_tol);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (std::abs(a.value) != std::abs(b.value)) return std::abs(a.value) < std::abs(b.value);
    return std::arg(a.value) < std::arg(b.value);
  });
  return out;
}

}  // namespace summa
