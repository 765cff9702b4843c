#include "stolarsky/abscissa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stolarsky {

namespace {

struct Scan {
  std::vector<double> roots;
  double slope = 0.0;
  bool degenerate = false;
};

Scan scan_abscissas(const DifferentiableFn& f, const Interval& iv, int grid_n,
                    double tol) {
  if (grid_n < 8) throw DomainError("grid_n must be at least 8");
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (iv.a() == iv.b()) throw DomainError("abscissa scan needs a < b");

  const double a = iv.a();
  const double b = iv.b();
  const double w = b - a;

  Scan out;
  out.slope = (f.eval(b) - f.eval(a)) / w;
  const double residual_bound = tol * (1.0 + std::fabs(out.slope));
  const auto g = [&](double x) { return f.eval(x, 1) - out.slope; };

  const int n = grid_n;
  std::vector<double> xs(static_cast<std::size_t>(n) + 1);
  std::vector<double> gv(xs.size());
  int near = 0;
  for (int i = 0; i <= n; ++i) {
    xs[i] = (i == n) ? b : a + w * (static_cast<double>(i) / n);
    gv[i] = g(xs[i]);
    if (std::fabs(gv[i]) <= residual_bound) ++near;
  }
  if (near >= static_cast<int>(0.9 * (n + 1))) {
    out.degenerate = true;
    return out;
  }

  // Bisection halves the bracket each step, so ceil(log2(1/(grid_n*tol)))
  // steps reach width tol*(b-a).  When f'' is steep the residual bound can
  // still fail there, so halving continues until it holds or the bracket is
  // at machine width.
  const auto refine = [&](double lo, double hi, double glo) {
    for (int step = 0; step < 160; ++step) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double gm = g(mid);
      if (gm == 0.0) return mid;
      if (hi - lo <= tol * w && std::fabs(gm) <= residual_bound) return mid;
      if ((gm < 0.0) == (glo < 0.0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  std::vector<double> candidates;
  for (int i = 1; i <= n; ++i) {
    if (gv[i] == 0.0) {
      candidates.push_back(xs[i]);
      continue;
    }
    if (gv[i - 1] == 0.0) continue;  // already recorded
    if ((gv[i - 1] < 0.0) != (gv[i] < 0.0)) {
      candidates.push_back(refine(xs[i - 1], xs[i], gv[i - 1]));
    } else if (std::fabs(gv[i]) <= residual_bound && i < n) {
      candidates.push_back(xs[i]);  // tangential root sitting on the grid
    }
  }
  if (std::fabs(gv[0]) == 0.0) candidates.push_back(xs[0]);

  std::sort(candidates.begin(), candidates.end());
  const double dedup = 10.0 * tol * w;
  for (double c : candidates) {
    if (!(c > a && c < b)) continue;
    if (std::fabs(g(c)) > residual_bound) continue;  // independent re-check
    if (!out.roots.empty() && c - out.roots.back() <= dedup) continue;
    out.roots.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<double> mean_value_abscissas(const DifferentiableFn& f,
                                         const Interval& iv, int grid_n,
                                         double tol) {
  Scan scan = scan_abscissas(f, iv, grid_n, tol);
  if (scan.degenerate) {
    throw DegenerateFunctionError(
        "f' equals the secant slope on the whole grid; every point is an "
        "abscissa");
  }
  if (scan.roots.empty()) {
    throw NoRootFoundError(
        "no sign change of f' - slope and no grid point within tolerance");
  }
  return scan.roots;
}

AbscissaReport abscissa_report(const DifferentiableFn& f, const Alpha& alpha,
                               const Interval& iv, int grid_n, double tol) {
  Scan scan = scan_abscissas(f, iv, grid_n, tol);
  AbscissaReport rep;
  rep.s_alpha = stolarsky_mean(alpha, iv);
  rep.slope = scan.slope;
  rep.degenerate = scan.degenerate;
  if (scan.degenerate) {
    rep.min_distance = 0.0;
    rep.matches = true;  // the whole interval, s_alpha included, qualifies
    return rep;
  }
  if (scan.roots.empty()) {
    throw NoRootFoundError(
        "no sign change of f' - slope and no grid point within tolerance");
  }
  rep.abscissas = std::move(scan.roots);
  rep.min_distance = std::numeric_limits<double>::infinity();
  for (double c : rep.abscissas) {
    rep.min_distance = std::fmin(rep.min_distance, std::fabs(c - rep.s_alpha));
  }
  rep.matches = rep.min_distance <= 10.0 * tol * iv.width();
  return rep;
}

}  // namespace stolarsky
