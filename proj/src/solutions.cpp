#include "stolarsky/solutions.hpp"

#include <cmath>
#include <utility>

namespace stolarsky {

namespace {

void check_point(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("evaluation point must be finite and positive");
  }
}

// x^alpha log x family used at alpha in {0, 1}.
double log_form_eval(double alpha, double c1, double c2, double c3, double x,
                     int order) {
  if (alpha == 0.0) {
    switch (order) {
      case 0: return c1 * std::log(x) + c2 * x + c3;
      case 1: return c1 / x + c2;
      case 2: return -c1 / (x * x);
      default: return 2.0 * c1 / (x * x * x);
    }
  }
  // alpha == 1: f = c1 x log x + c2 x + c3
  switch (order) {
    case 0: return c1 * x * std::log(x) + c2 * x + c3;
    case 1: return c1 * (std::log(x) + 1.0) + c2;
    case 2: return c1 / x;
    default: return -c1 / (x * x);
  }
}

double generic_eval(double alpha, double c1, double c2, double c3, double x,
                    int order) {
  switch (order) {
    case 0: return c1 * std::pow(x, alpha) + c2 * x + c3;
    case 1: return c1 * alpha * std::pow(x, alpha - 1.0) + c2;
    case 2: return c1 * alpha * (alpha - 1.0) * std::pow(x, alpha - 2.0);
    default:
      return c1 * alpha * (alpha - 1.0) * (alpha - 2.0) *
             std::pow(x, alpha - 3.0);
  }
}

// First 32 points of the Halton sequence in the given base.
double radical_inverse(unsigned index, unsigned base) {
  double inv = 1.0 / base;
  double scale = inv;
  double value = 0.0;
  while (index > 0) {
    value += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv;
  }
  return value;
}

}  // namespace

double family_eval(const SolutionFamily& fam, double x, int order) {
  check_point(x);
  if (order < 0 || order > 3) {
    throw DomainError("derivative order must be in [0, 3]");
  }
  const double a = fam.alpha.value();
  if (a == 0.0 || a == 1.0) {
    return log_form_eval(a, fam.c1, fam.c2, fam.c3, x, order);
  }
  return generic_eval(a, fam.c1, fam.c2, fam.c3, x, order);
}

DifferentiableFn::DifferentiableFn(
    std::array<std::function<double(double)>, 4> evals, Origin origin)
    : evals_(std::move(evals)), origin_(std::move(origin)) {}

DifferentiableFn DifferentiableFn::from_family(const SolutionFamily& fam) {
  std::array<std::function<double(double)>, 4> evals;
  for (int k = 0; k < 4; ++k) {
    evals[k] = [fam, k](double x) { return family_eval(fam, x, k); };
  }
  return DifferentiableFn(std::move(evals), Origin(fam));
}

DifferentiableFn DifferentiableFn::from_expr(const ExprPtr& ast) {
  std::array<ExprPtr, 4> d;
  d[0] = ast;
  for (int k = 1; k < 4; ++k) d[k] = differentiate(d[k - 1]);
  std::array<std::function<double(double)>, 4> evals;
  for (int k = 0; k < 4; ++k) {
    evals[k] = [e = d[k]](double x) { return evaluate(e, x); };
  }
  return DifferentiableFn(std::move(evals), Origin(ast));
}

DifferentiableFn DifferentiableFn::from_callables(
    std::function<double(double)> f0, std::function<double(double)> f1,
    std::function<double(double)> f2, std::function<double(double)> f3) {
  return DifferentiableFn(
      {std::move(f0), std::move(f1), std::move(f2), std::move(f3)},
      Origin(std::monostate{}));
}

double DifferentiableFn::eval(double x, int order) const {
  if (order < 0 || order > 3) {
    throw DomainError("derivative order must be in [0, 3]");
  }
  return evals_[static_cast<std::size_t>(order)](x);
}

double fde_residual(const DifferentiableFn& f, const Alpha& alpha,
                    const Interval& iv) {
  const double s = stolarsky_mean(alpha, iv);
  return f.eval(iv.b()) - f.eval(iv.a()) - iv.width() * f.eval(s, 1);
}

double ode_residual(const DifferentiableFn& f, const Alpha& alpha, double t) {
  check_point(t);
  return f.eval(t, 3) - (alpha.value() - 2.0) / t * f.eval(t, 2);
}

double fde_residual_scale(const DifferentiableFn& f, const Interval& iv) {
  return 1.0 + std::fabs(f.eval(iv.a())) + std::fabs(f.eval(iv.b()));
}

MembershipResult fde_membership(const DifferentiableFn& f, const Alpha& alpha,
                                const Interval& box) {
  MembershipResult out;
  const double lo = box.a();
  const double span = box.width();
  const auto consider = [&](double x, double y) {
    if (std::fabs(x - y) < 1e-6 * span) return;  // residual trivially ~0
    const Interval iv(x, y);
    const double r = std::fabs(fde_residual(f, alpha, iv));
    out.max_abs = std::fmax(out.max_abs, r);
    out.max_rel = std::fmax(out.max_rel, r / fde_residual_scale(f, iv));
    ++out.pairs;
  };
  consider(box.a(), box.b());
  for (unsigned i = 1; i <= 32; ++i) {
    consider(lo + span * radical_inverse(i, 2),
             lo + span * radical_inverse(i, 3));
  }
  out.member = out.max_rel <= kMembershipTolerance;
  return out;
}

}  // namespace stolarsky
