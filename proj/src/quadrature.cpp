#include "summa/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "summa/error.hpp"

namespace summa {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  std::vector<Complex> value;
  std::vector<double> error;
  double priority = 0.0;
};

Panel evaluate(const VectorIntegrand& f, int dim, double a, double b) {
  Panel p{a, b, std::vector<Complex>(dim, 0.0), std::vector<double>(dim, 0.0)};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::vector<Complex> k(dim, 0.0), g(dim, 0.0), f1(dim), f2(dim);
  f(c, f1);
  for (int i = 0; i < dim; ++i) {
    k[i] = kWgk[7] * f1[i];
    g[i] = kWg[3] * f1[i];
  }
  for (int j = 0; j < 7; ++j) {
    f(c - h * kXgk[j], f1);
    f(c + h * kXgk[j], f2);
    for (int i = 0; i < dim; ++i) {
      Complex s = f1[i] + f2[i];
      k[i] += kWgk[j] * s;
      if (j % 2 == 1) g[i] += kWg[j / 2] * s;
    }
  }
  for (int i = 0; i < dim; ++i) {
    p.value[i] = h * k[i];
    p.error[i] = std::abs(h * (k[i] - g[i]));
  }
  return p;
}

}  // namespace

QuadResult integrate_gk15(const VectorIntegrand& f, int dim, std::span<const double> breakpoints, double rel_tol,
                          double abs_tol, int max_subdivisions) {
  if (breakpoints.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least one interval");
  if (!(rel_tol > 0) || !(abs_tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  QuadResult res;
  res.value.assign(dim, 0.0);
  res.error.assign(dim, 0.0);
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;
    panels.push_back(evaluate(f, dim, breakpoints[i], breakpoints[i + 1]));
    res.nodes += 15;
  }
  auto totals = [&] {
    std::fill(res.value.begin(), res.value.end(), Complex(0.0));
    std::fill(res.error.begin(), res.error.end(), 0.0);
    for (const auto& p : panels)
      for (int i = 0; i < dim; ++i) {
        res.value[i] += p.value[i];
        res.error[i] += p.error[i];
      }
  };
  totals();
  while (true) {
    std::vector<double> budget(dim);
    bool done = true;
    for (int i = 0; i < dim; ++i) {
      budget[i] = std::max(abs_tol, rel_tol * std::abs(res.value[i]));
      if (res.error[i] > budget[i]) done = false;
    }
    if (done) {
      res.converged = true;
      break;
    }
    if (res.subdivisions >= max_subdivisions) break;
    std::size_t worst = 0;
    double worst_score = -1.0;
    for (std::size_t j = 0; j < panels.size(); ++j) {
      double s = 0.0;
      for (int i = 0; i < dim; ++i) s = std::max(s, panels[j].error[i] / budget[i]);
      if (s > worst_score) {
        worst_score = s;
        worst = j;
      }
    }
    Panel old = panels[worst];
    double mid = 0.5 * (old.a + old.b);
    if (!(mid > old.a && mid < old.b)) break;
    panels[worst] = evaluate(f, dim, old.a, mid);
    panels.push_back(evaluate(f, dim, mid, old.b));
    res.nodes += 30;
    ++res.subdivisions;
    totals();
  }
  return res;
}

}  // namespace summa
