#pragma once

#include <functional>
#include <span>
#include <vector>

#include "summa/coefficient.hpp"

namespace summa {

// Writes dim integrand components at x into out.
using VectorIntegrand = std::function<void(double x, std::span<Complex> out)>;

struct QuadResult {
  std::vector<Complex> value;
  std::vector<double> error;
  int nodes = 0;
  int subdivisions = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod (7, 15) over [b_0, b_1] u ... u [b_{m-1}, b_m].
// Converges when every component satisfies err <= max(abs_tol, rel_tol |I|).
QuadResult integrate_gk15(const VectorIntegrand& f, int dim, std::span<const double> breakpoints,
                          double rel_tol, double abs_tol, int max_subdivisions);

}  // namespace summa
