#include "stolarsky/means.hpp"

#include <cmath>
#include <string>

#include "stolarsky/ddouble.hpp"

namespace stolarsky {

namespace {

// Endpoints closer than this in log space take the series branch below.
constexpr double kNearEqualLogGap = 1e-8;
// ... provided alpha*u is also small; otherwise the generic path is fine
// even for tiny u (no cancellation once expm1(alpha u) is O(1)).
constexpr double kNearEqualAlphaGap = 1e-4;

constexpr int kInvertMaxSteps = 200;

// log(b/a) in double-double; the seed log is refined by Newton steps, so
// near-equal endpoints keep their full relative accuracy.
DDouble log_ratio_dd(double a, double b) {
  return log(DDouble(b) / DDouble(a));
}

double finish(double a, DDouble e) {
  if (e.hi() > 690.0) return detail::scale_by_exp(a, e.to_double());
  return (DDouble(a) * exp(e)).to_double();
}

double log_mean_kernel(double a, double b) {
  const DDouble u = log_ratio_dd(a, b);
  if (u.hi() > 500.0) return ((DDouble(b) - DDouble(a)) / u).to_double();
  return (DDouble(a) * (expm1(u) / u)).to_double();
}

// S_1(a, b) = a * exp(u + u/expm1(u) - 1) with u = log(b/a).
double identric_kernel(double a, double b) {
  const DDouble u = log_ratio_dd(a, b);
  DDouble e;
  if (u.hi() > 500.0) {
    e = u - DDouble(1.0);  // u/expm1(u) is far below resolution
  } else {
    e = u + u / expm1(u) - DDouble(1.0);
  }
  return finish(a, e);
}

// Second-order expansion about a == b:
//   log(S/a) = u/2 + (alpha+1) u^2/24 + O(alpha^3 u^4),
// valid whenever both u and alpha*u are small.
double near_equal_kernel(double a, double alpha, double u) {
  return a * std::exp(u * (0.5 + (alpha + 1.0) * u / 24.0));
}

DDouble log_abs_expm1_dd(DDouble x) {
  if (x.hi() > 500.0) {
    // log(e^x - 1) = x + log(1 - e^-x); e^-x underflows harmlessly.
    return x + log1p(-exp(-x));
  }
  if (x.hi() > 0.0) return log(expm1(x));
  return log(-expm1(x));
}

// The ratio/log-space exponent in double-double.  Working precision alone
// loses eps/|alpha - 1| of accuracy near the removable singularities and
// ~2 ulp everywhere else; double-double keeps every branch comfortably
// inside 1e-13 and rounds correctly on the exact family members.
double ratio_kernel(double a, double alpha, double b) {
  const DDouble u = log_ratio_dd(a, b);
  const DDouble au = DDouble(alpha) * u;
  const DDouble num = log_abs_expm1_dd(au) -
                      log(DDouble(std::fabs(alpha))) -
                      log_abs_expm1_dd(u);
  const DDouble e = num / DDouble::two_sum(alpha, -1.0);
  return finish(a, e);
}

}  // namespace

namespace detail {

double log_ratio(double a, double b) {
  const double r = b / a;
  if (std::isinf(r)) return std::log(b) - std::log(a);
  if (r <= 2.0) return std::log1p((b - a) / a);
  return std::log(r);
}

double log_abs_expm1(double x) {
  if (x > 500.0) return x + std::log1p(-std::exp(-x));
  if (x > 0.0) return std::log(std::expm1(x));
  return std::log(-std::expm1(x));
}

double scale_by_exp(double a, double e) {
  if (e > 690.0) {
    const double half = std::exp(0.5 * e);
    return (a * half) * half;
  }
  return a * std::exp(e);
}

double stolarsky_exponent(double alpha, double u) {
  const double au = alpha * u;
  return (log_abs_expm1(au) - std::log(std::fabs(alpha)) - log_abs_expm1(u)) /
         (alpha - 1.0);
}

}  // namespace detail

Alpha::Alpha(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw DomainError("alpha must be finite");
  }
  if (value == 0.0) {
    branch_ = AlphaBranch::LogCase;
  } else if (value == 1.0) {
    branch_ = AlphaBranch::IdentricCase;
  } else if (std::fabs(value) <= kLimitWindow) {
    branch_ = AlphaBranch::NearZero;
  } else if (std::fabs(value - 1.0) <= kLimitWindow) {
    branch_ = AlphaBranch::NearOne;
  } else {
    branch_ = AlphaBranch::Generic;
  }
}

Interval::Interval(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("interval endpoints must be finite and positive");
  }
  swapped_ = y < x;
  a_ = swapped_ ? y : x;
  b_ = swapped_ ? x : y;
}

double stolarsky_mean(const Alpha& alpha, const Interval& iv) {
  const double a = iv.a();
  const double b = iv.b();
  if (a == b) return a;

  double s;
  if (alpha.log_like()) {
    s = log_mean_kernel(a, b);
  } else if (alpha.identric_like()) {
    s = identric_kernel(a, b);
  } else {
    const double av = alpha.value();
    const double u = detail::log_ratio(a, b);  // > 0
    if (u < kNearEqualLogGap && std::fabs(av) * u < kNearEqualAlphaGap) {
      s = near_equal_kernel(a, av, u);
    } else {
      s = ratio_kernel(a, av, b);
    }
  }
  if (!std::isfinite(s)) {
    throw OverflowError("stolarsky_mean: log-space intermediate overflowed");
  }
  return s;
}

double logarithmic_mean(const Interval& iv) {
  if (iv.a() == iv.b()) return iv.a();
  return log_mean_kernel(iv.a(), iv.b());
}

double identric_mean(const Interval& iv) {
  if (iv.a() == iv.b()) return iv.a();
  return identric_kernel(iv.a(), iv.b());
}

Alpha invert_alpha(const Interval& iv, double c, double tol) {
  if (!(c > iv.a() && c < iv.b())) {
    throw OutOfRangeError("invert_alpha: c must lie strictly between the endpoints");
  }
  const auto residual = [&](double alpha) {
    return stolarsky_mean(Alpha(alpha), iv) - c;
  };
  double lo = kAlphaWindowLo;
  double hi = kAlphaWindowHi;
  // S_alpha is strictly increasing in alpha for a != b.
  if (residual(lo) > 0.0 || residual(hi) < 0.0) {
    throw NotBracketedError("invert_alpha: c not attained for alpha in [" +
                            std::to_string(kAlphaWindowLo) + ", " +
                            std::to_string(kAlphaWindowHi) + "]");
  }
  double mid = 0.0;
  for (int step = 0; step < kInvertMaxSteps; ++step) {
    mid = 0.5 * (lo + hi);
    const double f = residual(mid);
    if (f == 0.0) return Alpha(mid);
    (f < 0.0 ? lo : hi) = mid;
    if (hi - lo <= 1e-15 * std::fmax(1.0, std::fabs(mid))) break;
  }
  mid = 0.5 * (lo + hi);
  if (std::fabs(residual(mid)) > tol * c) {
    throw NotBracketedError(
        "invert_alpha: bisection converged but |S_alpha - c| > tol*c");
  }
  return Alpha(mid);
}

}  // namespace stolarsky
