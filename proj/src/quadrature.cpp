#include "qint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qint {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  int depth = 0;
};

Panel evaluate_panel(const std::function<double(double)>& fn, double lo, double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fc = fn(center);
  double gauss = fc * kWg[3];
  double kronrod = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double dx = half * kXgk[j];
    double fsum = fn(center - dx) + fn(center + dx);
    kronrod += fsum * kWgk[j];
    if (j % 2 == 1) gauss += fsum * kWg[j / 2];
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = kronrod * half;
  p.error = std::abs((kronrod - gauss) * half);
  p.depth = depth;
  return p;
}

}  // namespace

QuadratureResult adaptive_integrate(const std::function<double(double)>& fn, double lo, double hi,
                                    const std::vector<double>& splits, double abs_tol,
                                    int max_depth) {
  if (!(hi > lo)) return {0.0, 0.0};

  std::vector<double> cuts{lo, hi};
  for (double s : splits) {
    if (s > lo && s < hi) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-15; }),
             cuts.end());

  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    panels.push_back(evaluate_panel(fn, cuts[i], cuts[i + 1], 0));
  }

  auto total_error = [&panels]() {
    double e = 0.0;
    for (const Panel& p : panels) e += p.error;
    return e;
  };

  constexpr std::size_t kMaxPanels = 100000;
  while (total_error() > abs_tol && panels.size() < kMaxPanels) {
    // Refine the splittable panel with the largest error estimate.
    std::size_t worst = panels.size();
    double worst_error = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (panels[i].depth >= max_depth) continue;
      if (panels[i].error > worst_error) {
        worst_error = panels[i].error;
        worst = i;
      }
    }
    if (worst == panels.size()) break;  // every contributor is at max depth

    Panel p = panels[worst];
    double mid = 0.5 * (p.lo + p.hi);
    panels[worst] = evaluate_panel(fn, p.lo, mid, p.depth + 1);
    panels.push_back(evaluate_panel(fn, mid, p.hi, p.depth + 1));
  }

  // Deterministic combination order: sum left to right.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  QuadratureResult result;
  for (const Panel& p : panels) {
    result.value += p.value;
    result.error_estimate += p.error;
  }

  if (result.error_estimate > abs_tol) {
    throw quadrature_error("adaptive_integrate: tolerance not reached", result.value,
                           result.error_estimate);
  }
  return result;
}

}  // namespace qint
