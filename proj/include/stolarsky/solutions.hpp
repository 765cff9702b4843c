#ifndef STOLARSKY_SOLUTIONS_HPP_
#define STOLARSKY_SOLUTIONS_HPP_

#include <array>
#include <functional>
#include <variant>

#include "stolarsky/expr.hpp"
#include "stolarsky/means.hpp"

namespace stolarsky {

//======================================================================
// Solution families of the mean-value functional equation
//
//   f(b) - f(a) = (b - a) f'(S_alpha(a, b))   for all a, b > 0
//
// and residual checks for arbitrary three-times differentiable functions.
// The family solving the equation is
//
//   f(x) = c1 x^alpha + c2 x + c3            (alpha outside {0, 1})
//   f(x) = c1 x^alpha log x + c2 x + c3      (alpha in {0, 1})
//
// and every member also satisfies the reduced ordinary differential
// equation f'''(t) = ((alpha - 2)/t) f''(t).
//======================================================================

struct SolutionFamily {
  Alpha alpha;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

// f^(order)(x) in closed form, order in [0, 3].  The log-carrying form is
// used only for alpha exactly 0 or 1.
double family_eval(const SolutionFamily& fam, double x, int order);

// Bundle of f, f', f'', f''' evaluators, from either a solution family
// (closed-form derivatives) or a parsed expression (symbolic derivatives).
class DifferentiableFn {
 public:
  // monostate marks a caller-supplied evaluator bundle.
  using Origin = std::variant<std::monostate, SolutionFamily, ExprPtr>;

  static DifferentiableFn from_family(const SolutionFamily& fam);
  static DifferentiableFn from_expr(const ExprPtr& ast);
  static DifferentiableFn from_callables(std::function<double(double)> f0,
                                         std::function<double(double)> f1,
                                         std::function<double(double)> f2,
                                         std::function<double(double)> f3);

  double eval(double x, int order = 0) const;
  const Origin& origin() const { return origin_; }

 private:
  DifferentiableFn(std::array<std::function<double(double)>, 4> evals,
                   Origin origin);
  std::array<std::function<double(double)>, 4> evals_;
  Origin origin_;
};

// f(b) - f(a) - (b - a) f'(S_alpha(a, b)); zero (to roundoff) exactly when
// f behaves as a family member at this interval.
double fde_residual(const DifferentiableFn& f, const Alpha& alpha,
                    const Interval& iv);

// f'''(t) - ((alpha - 2)/t) f''(t).
double ode_residual(const DifferentiableFn& f, const Alpha& alpha, double t);

// Residuals normalized by 1 + |f(a)| + |f(b)| so flat functions do not
// divide by almost zero.
double fde_residual_scale(const DifferentiableFn& f, const Interval& iv);

// Aggregate membership check over a deterministic 32-point Halton(2,3) set
// of endpoint pairs inside `box`, plus the corner pair (box.a, box.b).
// `member` thresholds the largest normalized residual at 1e-7; the largest
// raw residual is reported alongside for diagnostics.
struct MembershipResult {
  double max_abs = 0.0;    // max |residual| over the pair set
  double max_rel = 0.0;    // max |residual| / (1 + |f(a)| + |f(b)|)
  int pairs = 0;
  bool member = false;
};
inline constexpr double kMembershipTolerance = 1e-7;
MembershipResult fde_membership(const DifferentiableFn& f, const Alpha& alpha,
                                const Interval& box);

}  // namespace stolarsky

#endif  // STOLARSKY_SOLUTIONS_HPP_
