#pragma once

#include <span>
#include <vector>

#include "summa/regular_seq.hpp"
#include "summa/summation.hpp"

namespace summa {

// Batched evaluation over a z-grid. Parallel runs one OpenMP task per point;
// jobs <= 0 leaves the thread count to OpenMP. If any point throws, the error
// of the lowest failing index is rethrown after the batch completes.
std::vector<SumResult> laplace_grid(const RationalFunction& G, double d, std::span<const Complex> zs, double k,
                                    const QuadratureConfig& cfg = {}, Exec exec = Exec::Serial, int jobs = 0);

std::vector<SumResult> q_laplace_grid(const RationalFunction& Phi, double d, std::span<const Complex> zs, double q,
                                      const QuadratureConfig& cfg = {}, Exec exec = Exec::Serial, int jobs = 0);

std::vector<Complex> theta_grid(std::span<const Complex> zs, double q, Exec exec = Exec::Serial, int jobs = 0);

// n points spaced evenly on the segment [a, b].
std::vector<Complex> segment_grid(Complex a, Complex b, int n);

}  // namespace summa
