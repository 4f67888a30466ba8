#pragma once

#include <vector>

#include "summa/coefficient.hpp"

namespace summa::detail {

using Matrix = std::vector<std::vector<Coefficient>>;

bool all_exact(const Matrix& m);

// Fraction-free Bareiss elimination; exact entries only.
Coefficient det_bareiss(Matrix m);
// Partial-pivot LU determinant on complex doubles.
Coefficient det_lu(const Matrix& m);

// Solves A x = b. Exact: first nonzero pivot; float: partial pivoting.
// Returns false if A is singular (exact) or a pivot underflows rel_tol (float).
bool solve_linear(Matrix a, std::vector<Coefficient> b, std::vector<Coefficient>& x,
                  double rel_tol = 1e-14);

}  // namespace summa::detail
