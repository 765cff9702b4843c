#ifndef STOLARSKY_DDOUBLE_HPP_
#define STOLARSKY_DDOUBLE_HPP_

#include <cmath>

namespace stolarsky {

// Unevaluated sum of two doubles with |lo| <= ulp(hi)/2, giving roughly
// 32 significant decimal digits.  Only the operations this project needs
// are provided: field arithmetic plus exp/log/expm1/log1p/pow on positive
// arguments.  Error-free transforms follow Dekker and Knuth; the elementary
// functions use argument reduction + Taylor (exp) and Newton on exp (log),
// good to ~1e-30 relative over the ranges used here.
class DDouble {
 public:
  DDouble() : hi_(0.0), lo_(0.0) {}
  DDouble(double x) : hi_(x), lo_(0.0) {}  // NOLINT: implicit by design
  DDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

  double hi() const { return hi_; }
  double lo() const { return lo_; }
  double to_double() const { return hi_ + lo_; }

  // |a| >= |b| assumed.
  static DDouble fast_two_sum(double a, double b) {
    double s = a + b;
    double t = b - (s - a);
    return DDouble(s, t);
  }

  static DDouble two_sum(double a, double b) {
    double s = a + b;
    double ap = s - b;
    double bp = s - ap;
    double t = (a - ap) + (b - bp);
    return DDouble(s, t);
  }

  static DDouble two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return DDouble(p, e);
  }

  friend DDouble operator-(DDouble x) { return DDouble(-x.hi_, -x.lo_); }

  friend DDouble operator+(DDouble x, DDouble y) {
    DDouble s = two_sum(x.hi_, y.hi_);
    DDouble t = two_sum(x.lo_, y.lo_);
    double c = s.lo_ + t.hi_;
    DDouble v = fast_two_sum(s.hi_, c);
    double w = t.lo_ + v.lo_;
    return fast_two_sum(v.hi_, w);
  }

  friend DDouble operator-(DDouble x, DDouble y) { return x + (-y); }

  friend DDouble operator*(DDouble x, DDouble y) {
    DDouble p = two_prod(x.hi_, y.hi_);
    double t = x.hi_ * y.lo_ + x.lo_ * y.hi_ + p.lo_;
    return fast_two_sum(p.hi_, t);
  }

  friend DDouble operator/(DDouble x, DDouble y) {
    double q1 = x.hi_ / y.hi_;
    DDouble r = x - y * DDouble(q1);
    double q2 = r.hi_ / y.hi_;
    r = r - y * DDouble(q2);
    double q3 = r.hi_ / y.hi_;
    DDouble q = fast_two_sum(q1, q2);
    return q + DDouble(q3);
  }

  DDouble& operator+=(DDouble y) { return *this = *this + y; }
  DDouble& operator-=(DDouble y) { return *this = *this - y; }
  DDouble& operator*=(DDouble y) { return *this = *this * y; }
  DDouble& operator/=(DDouble y) { return *this = *this / y; }

  friend bool operator<(DDouble x, DDouble y) {
    return x.hi_ < y.hi_ || (x.hi_ == y.hi_ && x.lo_ < y.lo_);
  }
  friend bool operator>(DDouble x, DDouble y) { return y < x; }

  friend DDouble ldexp(DDouble x, int n) {
    return DDouble(std::ldexp(x.hi_, n), std::ldexp(x.lo_, n));
  }

 private:
  double hi_;
  double lo_;
};

namespace ddconst {
// log(2) split into two doubles (hi is the correctly rounded head).
inline constexpr double kLn2Hi = 0.6931471805599453;
inline constexpr double kLn2Lo = 2.3190468138462996e-17;
}  // namespace ddconst

// e^x by reduction x = k log2 + r, |r| <= log(2)/2, then 26 Taylor terms.
inline DDouble exp(DDouble x) {
  if (x.hi() > 709.0) return DDouble(HUGE_VAL, 0.0);
  if (x.hi() < -745.0) return DDouble(0.0);
  const double k = std::nearbyint(x.hi() / ddconst::kLn2Hi);
  const DDouble ln2(ddconst::kLn2Hi, ddconst::kLn2Lo);
  DDouble r = x - ln2 * DDouble(k);
  DDouble s(1.0);
  for (int n = 26; n >= 1; --n) {
    s = DDouble(1.0) + (r * s) / DDouble(static_cast<double>(n));
  }
  return ldexp(s, static_cast<int>(k));
}

// Newton iteration on exp: y <- y + (x e^{-y} - 1); three steps from the
// double-precision seed leave ~1e-30 relative error.
inline DDouble log(DDouble x) {
  DDouble y(std::log(x.hi()));
  for (int i = 0; i < 3; ++i) {
    y = y + (x * exp(-y) - DDouble(1.0));
  }
  return y;
}

// e^x - 1; direct Taylor when the leading term would cancel.
inline DDouble expm1(DDouble x) {
  if (std::fabs(x.hi()) > 0.35) return exp(x) - DDouble(1.0);
  DDouble q(1.0);
  for (int n = 25; n >= 1; --n) {
    q = DDouble(1.0) + (x * q) / DDouble(static_cast<double>(n + 1));
  }
  return x * q;
}

// log(1 + x).  two_sum keeps 1 + x exact, so no accuracy is lost for tiny x.
inline DDouble log1p(DDouble x) {
  DDouble w = DDouble::two_sum(1.0, x.hi()) + DDouble(x.lo());
  return log(w);
}

// b^e for b > 0.
inline DDouble pow(DDouble b, DDouble e) { return exp(e * log(b)); }

}  // namespace stolarsky

#endif  // STOLARSKY_DDOUBLE_HPP_
