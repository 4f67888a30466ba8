#include <doctest.h>

#include "summa/kernels.hpp"
#include "support.hpp"

using namespace summa;

namespace {

RationalFunction euler_G() {
  return RationalFunction(Polynomial({Coefficient(0), Coefficient(-1)}), Polynomial({Coefficient(1), Coefficient(1)}));
}

}  // namespace

TEST_CASE("parallel grids reproduce the serial reference bit for bit") {
  auto zs = segment_grid(0.02, 0.3, 24);
  auto s = laplace_grid(euler_G(), 0.0, zs, 1.0, {}, Exec::Serial);
  auto p = laplace_grid(euler_G(), 0.0, zs, 1.0, {}, Exec::Parallel, 4);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].value == p[i].value);
    CHECK(s[i].nodes_used == p[i].nodes_used);
  }
  auto qs = q_laplace_grid(euler_G(), 0.0, zs, 2.0, {}, Exec::Serial);
  auto qp = q_laplace_grid(euler_G(), 0.0, zs, 2.0, {}, Exec::Parallel, 3);
  for (std::size_t i = 0; i < qs.size(); ++i) CHECK(qs[i].value == qp[i].value);

  auto ts = theta_grid(zs, 1.5, Exec::Serial);
  auto tp = theta_grid(zs, 1.5, Exec::Parallel);
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(ts[i] == tp[i]);
}

TEST_CASE("batch errors rethrow the lowest failing index") {
  std::vector<Complex> zs{0.1, Complex(0, 0.1), 0.0, 0.2};
  for (Exec e : {Exec::Serial, Exec::Parallel}) {
    CHECK_THROWS_CODE(laplace_grid(euler_G(), 0.0, zs, 1.0, {}, e, 4), ErrorCode::KernelNonDecaying);
    CHECK_THROWS_CODE(theta_grid(zs, 2.0, e, 4), ErrorCode::ZeroArgument);
  }
}

TEST_CASE("segment_grid") {
  auto g = segment_grid(0.05, 0.2, 4);
  REQUIRE(g.size() == 4);
  CHECK(g[1].real() == doctest::Approx(0.1));
  CHECK(segment_grid(1.0, 2.0, 1).size() == 1);
  CHECK_THROWS_CODE(segment_grid(1.0, 2.0, 0), ErrorCode::InvalidArgument);
}
