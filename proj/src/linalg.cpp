#include "linalg.hpp"

#include <algorithm>
#include <cmath>

namespace summa::detail {

bool all_exact(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.is_exact()) return false;
  return true;
}

Coefficient det_bareiss(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Coefficient(1);
  bool negate = false;
  Coefficient prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m[i][k].is_zero()) ++i;
      if (i == n) return Coefficient(0);
      std::swap(m[i], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Coefficient det_lu(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].to_complex();
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (a[piv][k] == Complex(0.0)) return Coefficient(Complex(0.0));
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex f = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return Coefficient(det);
}

bool solve_linear(Matrix a, std::vector<Coefficient> b, std::vector<Coefficient>& x,
                  double rel_tol) {
  const std::size_t n = a.size();
  const bool exact = all_exact(a) && std::all_of(b.begin(), b.end(), [](const Coefficient& c) {
                       return c.is_exact();
                     });
  double scale = 0.0;
  if (!exact)
    for (const auto& row : a)
      for (const auto& v : row) scale = std::max(scale, v.abs());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    if (exact) {
      for (std::size_t i = k; i < n; ++i)
        if (!a[i][k].is_zero()) {
          piv = i;
          break;
        }
    } else {
      double best = rel_tol * scale;
      for (std::size_t i = k; i < n; ++i)
        if (a[i][k].abs() > best) {
          best = a[i][k].abs();
          piv = i;
        }
    }
    if (piv == n) return false;
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      Coefficient f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  x.assign(n, Coefficient(0));
  for (std::size_t k = n; k-- > 0;) {
    Coefficient s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return true;
}

}  // namespace summa::detail
