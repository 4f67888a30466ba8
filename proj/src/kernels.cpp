#include "summa/kernels.hpp"

#include <exception>

#include <omp.h>

#include "summa/error.hpp"

namespace summa {

namespace {

template <class T, class F>
std::vector<T> run_batch(std::size_t n, Exec exec, int jobs, F&& body) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
  if (exec == Exec::Parallel) {
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < count; ++i) {
      try {
        out[i] = body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < count; ++i) {
      try {
        out[i] = body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

std::vector<SumResult> laplace_grid(const RationalFunction& G, double d, std::span<const Complex> zs, double k,
                                    const QuadratureConfig& cfg, Exec exec, int jobs) {
  return run_batch<SumResult>(zs.size(), exec, jobs, [&](long i) { return laplace_sum(G, d, zs[i], k, cfg); });
}

std::vector<SumResult> q_laplace_grid(const RationalFunction& Phi, double d, std::span<const Complex> zs, double q,
                                      const QuadratureConfig& cfg, Exec exec, int jobs) {
  return run_batch<SumResult>(zs.size(), exec, jobs, [&](long i) { return q_laplace_sum(Phi, d, zs[i], q, cfg); });
}

std::vector<Complex> theta_grid(std::span<const Complex> zs, double q, Exec exec, int jobs) {
  return run_batch<Complex>(zs.size(), exec, jobs, [&](long i) { return theta(zs[i], q); });
}

std::vector<Complex> segment_grid(Complex a, Complex b, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one point");
  if (n == 1) return {a};
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * (static_cast<double>(i) / (n - 1)));
  return out;
}

}  // namespace summa
