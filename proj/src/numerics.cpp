#include "ladderlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ladderlab::numerics {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Gauss7/Kronrod15 nodes and weights on [-1, 1] (positive half; the rule is
// symmetric). Even-indexed Kronrod nodes are the embedded Gauss points.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891715,
};
constexpr double kWeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
  double value;
  double error;
};

PanelResult gk15(const Fn& fn, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum_k = 0.0, sum_g = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kNodes[i];
    const double f = i == 7 ? fn(mid) : fn(mid - dx) + fn(mid + dx);
    sum_k += kWeightsK[i] * f;
    if (i % 2 == 1 || i == 7) sum_g += kWeightsG[i / 2] * f;
  }
  const double value = sum_k * half;
  const double diff = std::abs(sum_k - sum_g) * half;
  return {value, std::min(diff, std::pow(200.0 * diff, 1.5))};
}

double integrate_panel(const Fn& fn, double a, double b, double tol,
                       int depth) {
  const PanelResult r = gk15(fn, a, b);
  if (r.error <= tol || b - a <= 1e-14 * (std::abs(a) + 1.0)) return r.value;
  if (depth >= 60)
    throw NoConvergence("integrate_adaptive: depth cap exceeded");
  const double mid = 0.5 * (a + b);
  return integrate_panel(fn, a, mid, 0.5 * tol, depth + 1) +
         integrate_panel(fn, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

namespace detail {

double oscillation_step(double b) {
  const double ln = std::log(b / (2 * kPi));
  return (2 * kPi / std::max(1.0, ln)) / 8.0;
}

}  // namespace detail

double integrate_adaptive(const Fn& fn, double a, double b, double tol) {
  if (a > b) throw OutOfRange("integrate_adaptive: a > b");
  if (a == b) return 0.0;
  const double step = detail::oscillation_step(b);
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
  const double width = (b - a) / panels;
  const double tol_panel = tol / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = i + 1 == panels ? b : a + (i + 1) * width;
    total += integrate_panel(fn, lo, hi, tol_panel, 0);
  }
  return total;
}

double mean_value_point(const Fn& fn, double a, double b, double target,
                        double tol) {
  if (!(a < b)) throw OutOfRange("mean_value_point: empty interval");
  const double tolres = tol * (1.0 + std::abs(target));
  const double step = detail::oscillation_step(b);
  const int base_cells =
      std::max(1, static_cast<int>(std::ceil((b - a) / step)));

  // A weighted mean can sit close to an extremum of fn, leaving a crossing
  // set far narrower than the oscillation scale. Rescan at 8x finer grids
  // before concluding the target is unattained.
  for (int round = 0; round < 4; ++round) {
    const int cells = base_cells << (3 * round);

    // Residuals on the scan grid; grid point i is a + i*(b-a)/cells.
    const auto grid = [&](int i) {
      return i == cells ? b : a + i * (b - a) / cells;
    };
    std::vector<double> g(cells + 1);
    bool plateau = round == 0;
    for (int i = 0; i <= cells; ++i) {
      g[i] = fn(grid(i)) - target;
      if (std::abs(g[i]) > tolres) plateau = false;
    }
    if (plateau) return 0.5 * (a + b);

    // Walk cells left to right so the leftmost attainment wins: an interior
    // grid point well inside tolerance is an immediate hit, otherwise a sign
    // change within the cell is refined by bisection.
    for (int i = 0; i < cells; ++i) {
      if (i > 0 && std::abs(g[i]) <= 0.25 * tolres) return grid(i);
      if ((g[i] < 0) == (g[i + 1] < 0)) continue;
      double lo = grid(i), hi = grid(i + 1);
      double glo = g[i];
      for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double gm = fn(mid) - target;
        if (std::abs(gm) <= tolres) return mid;
        if (hi - lo <= 4e-16 * (std::abs(mid) + 1.0))
          throw NoConvergence("mean_value_point: bracket collapsed");
        if ((gm < 0) == (glo < 0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      throw NoConvergence("mean_value_point: bisection stalled");
    }
  }
  throw TargetOutsideRange("mean_value_point: no crossing on scan grid");
}

double invert_increasing(const Fn& fn, double target, double a, double b) {
  if (!(a <= b)) throw NotBracketed("invert_increasing: empty interval");
  const double tolres = 1e-12 * (1.0 + std::abs(target));
  double fa = fn(a), fb = fn(b);
  if (std::abs(fa - target) <= tolres) return a;
  if (std::abs(fb - target) <= tolres) return b;
  if (fa > target || fb < target)
    throw NotBracketed("invert_increasing: target outside [fn(a), fn(b)]");
  double lo = a, hi = b;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;  // interval at double resolution
    const double fm = fn(mid);
    if (std::abs(fm - target) <= tolres) return mid;
    if (fm < target)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace ladderlab::numerics
