#ifndef STOLARSKY_ABSCISSA_HPP_
#define STOLARSKY_ABSCISSA_HPP_

#include <vector>

#include "stolarsky/means.hpp"
#include "stolarsky/solutions.hpp"

namespace stolarsky {

//======================================================================
// Mean-value abscissas: the points c in (a, b) with
//
//   f'(c) = (f(b) - f(a)) / (b - a),
//
// guaranteed to exist by the mean value theorem.  Roots are located by a
// uniform grid scan of f' - slope followed by bisection of every sign
// change; only derivative values are used.
//======================================================================

inline constexpr int kDefaultGridN = 256;
inline constexpr double kDefaultAbscissaTol = 1e-10;

// All abscissas, sorted ascending, deduplicated within 10*tol*(b-a), each
// satisfying |f'(c) - slope| <= tol*(1 + |slope|).
//
// Throws DegenerateFunctionError when f' - slope vanishes at 90% or more of
// the grid points (affine f: the abscissa set is the whole interval), and
// NoRootFoundError when no sign change and no grid point meet the residual
// bound (possible for tangential roots below the grid resolution).
std::vector<double> mean_value_abscissas(const DifferentiableFn& f,
                                         const Interval& iv,
                                         int grid_n = kDefaultGridN,
                                         double tol = kDefaultAbscissaTol);

struct AbscissaReport {
  double s_alpha = 0.0;            // S_alpha(a, b)
  double slope = 0.0;              // (f(b) - f(a)) / (b - a)
  std::vector<double> abscissas;   // empty when degenerate
  double min_distance = 0.0;       // min |c - s_alpha|; 0 when degenerate
  bool matches = false;            // min_distance <= 10*tol*(b-a)
  bool degenerate = false;         // f' == slope on (essentially) all of (a,b)
};

// Abscissas of f on iv compared against S_alpha(a, b).  A degenerate
// (affine) f matches trivially: every point of the interval, S_alpha
// included, is an abscissa.  NoRootFoundError propagates.
AbscissaReport abscissa_report(const DifferentiableFn& f, const Alpha& alpha,
                               const Interval& iv, int grid_n = kDefaultGridN,
                               double tol = kDefaultAbscissaTol);

}  // namespace stolarsky

#endif  // STOLARSKY_ABSCISSA_HPP_
