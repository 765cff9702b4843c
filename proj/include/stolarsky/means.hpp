#ifndef STOLARSKY_MEANS_HPP_
#define STOLARSKY_MEANS_HPP_

#include "stolarsky/errors.hpp"

namespace stolarsky {

//======================================================================
// The Stolarsky mean family
//
//   S_alpha(a, b) = ((b^alpha - a^alpha) / (alpha (b - a)))^(1/(alpha-1))
//
// for a, b > 0, a != b and alpha outside {0, 1}, extended by continuity
// with the logarithmic mean at alpha = 0, the identric mean at alpha = 1,
// and S_alpha(a, a) = a.  alpha = 2 gives the arithmetic mean, alpha = -1
// the geometric mean.
//
// Evaluation works in ratio/log space: with u = log(b/a),
//
//   S_alpha = a * exp(E),
//   E = [log|expm1(alpha u)| - log|alpha| - log(expm1(u))] / (alpha - 1),
//
// which removes the b^alpha - a^alpha cancellation for b/a near 1 and makes
// homogeneity S(ta, tb) = t S(a, b) hold to a few ulp.  The exponent is a
// small difference of logarithms divided by alpha - 1, so working precision
// would lose eps/|alpha - 1| near the removable singularities; the kernels
// therefore run in double-double arithmetic, which also makes the exact
// members (arithmetic, geometric) round correctly.  Within 1e-13 of the
// singular values the closed limit formulas are used outright (switching
// error below 5e-13 relative; see Alpha::kLimitWindow), and endpoints
// closer than 1e-8 in log space take a second-order expansion about a == b.
//======================================================================

enum class AlphaBranch {
  Generic,       // alpha outside the singular windows
  LogCase,       // alpha == 0 exactly: logarithmic mean
  IdentricCase,  // alpha == 1 exactly: identric mean
  NearZero,      // 0 < |alpha| <= kLimitWindow: dispatched to the S_0 limit
  NearOne,       // 0 < |alpha - 1| <= kLimitWindow: dispatched to the S_1 limit
};

// Family parameter with its classified branch.  Classification is a pure
// function of the value and the thresholds below.
class Alpha {
 public:
  // Half-width of the windows around 0 and 1 that dispatch to the limit
  // formulas.  |d log S / d alpha| <= max(u/2 - log u, 1) over log-gaps
  // u <= ~30, so the substitution error stays below ~5e-13 relative;
  // validated against the high-precision reference in the test suite.
  static constexpr double kLimitWindow = 1e-13;

  explicit Alpha(double value);

  double value() const { return value_; }
  AlphaBranch branch() const { return branch_; }

  bool log_like() const {
    return branch_ == AlphaBranch::LogCase || branch_ == AlphaBranch::NearZero;
  }
  bool identric_like() const {
    return branch_ == AlphaBranch::IdentricCase ||
           branch_ == AlphaBranch::NearOne;
  }
  bool generic() const { return branch_ == AlphaBranch::Generic; }

 private:
  double value_;
  AlphaBranch branch_;
};

// Ordered pair of strictly positive endpoints.  Construction normalizes so
// that a() <= b(); swapped() records whether the inputs arrived reversed.
class Interval {
 public:
  Interval(double x, double y);

  double a() const { return a_; }
  double b() const { return b_; }
  double width() const { return b_ - a_; }
  bool swapped() const { return swapped_; }

 private:
  double a_, b_;
  bool swapped_;
};

// S_alpha(a, b).  Exactly a when a == b; otherwise strictly between the
// endpoints.  Throws OverflowError if a log-space intermediate leaves the
// representable range (requires absurd alpha; never for |alpha| <= 64).
double stolarsky_mean(const Alpha& alpha, const Interval& iv);

// (b - a) / (log b - log a); the alpha = 0 member.  Agrees bit-for-bit with
// stolarsky_mean(Alpha(0), iv).
double logarithmic_mean(const Interval& iv);

// (1/e) exp((b log b - a log a) / (b - a)); the alpha = 1 member.  Agrees
// bit-for-bit with stolarsky_mean(Alpha(1), iv).
double identric_mean(const Interval& iv);

// Inverse problem: the alpha with S_alpha(a, b) = c, by bisection in alpha
// over [kAlphaWindowLo, kAlphaWindowHi] (S_alpha is strictly increasing in
// alpha for fixed a != b).  `tol` is relative to c.
//
// Throws OutOfRangeError unless a < b and c lies strictly between them, and
// NotBracketedError when c is not attained inside the search window.
inline constexpr double kAlphaWindowLo = -64.0;
inline constexpr double kAlphaWindowHi = 64.0;
Alpha invert_alpha(const Interval& iv, double c, double tol = 1e-12);

namespace detail {

// log(b/a) for 0 < a <= b, via log1p when the endpoints are close.
double log_ratio(double a, double b);

// log|expm1(x)| for x != 0, valid across the whole double range.
double log_abs_expm1(double x);

// a * exp(e) without overflowing when exp(e) alone would.
double scale_by_exp(double a, double e);

// The exponent E with S_alpha(a, b) = a * exp(E), generic double path.
double stolarsky_exponent(double alpha, double u);

}  // namespace detail

}  // namespace stolarsky

#endif  // STOLARSKY_MEANS_HPP_
