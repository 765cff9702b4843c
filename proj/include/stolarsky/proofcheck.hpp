#ifndef STOLARSKY_PROOFCHECK_HPP_
#define STOLARSKY_PROOFCHECK_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "stolarsky/means.hpp"
#include "stolarsky/solutions.hpp"

namespace stolarsky {

//======================================================================
// Numerical checks of the implicit-function and asymptotic machinery that
// reduces the mean-value functional equation to the ordinary differential
// equation f'''(t) = ((alpha - 2)/t) f''(t).
//
// Everything here requires a generic exponent (alpha outside the singular
// windows around 0 and 1); the log-carrying families are covered by the
// residual checks in solutions instead.
//======================================================================

// Seed data for the local implicit function phi:
//   psi(x, y) = (y + h0)^alpha - y^alpha - alpha h0 x^(alpha-1),
//   y0 = h0 = ((2^alpha - 1)/alpha)^(1/(1-alpha)) * x0,
// which gives psi(x0, y0) = 0 by construction.
struct LemmaSetup {
  Alpha alpha;
  double x0 = 0.0;
  double h0 = 0.0;
  double y0 = 0.0;
};

LemmaSetup lemma_seed(const Alpha& alpha, double x0);

// psi(x, y) for the setup's alpha and h0.
double lemma_psi(const LemmaSetup& setup, double x, double y);

// The implicit y = phi(x) with psi(x, phi(x)) = 0, by bracketing bisection
// in (0, 64*y0].  phi(x0) = y0.  Throws NotBracketedError when no sign
// change is found in the window.
double solve_phi(const LemmaSetup& setup, double x);

// phi'(x) = (alpha-1) h0 x^(alpha-2) / ((phi+h0)^(alpha-1) - phi^(alpha-1)).
// Throws DegenerateDenominatorError when |denominator| < 1e-300.
double phi_derivative(const LemmaSetup& setup, double x, double phi_x);

// Psi(h, y) = (y + h)^alpha - y^alpha - alpha h x0^(alpha-1), the global
// variant with x0 = S_alpha(t, t+r) fixed.
double proof_psi(const Alpha& alpha, double x0, double h, double y);

// The implicit y = g(h) with Psi(h, g(h)) = 0 and g(r) = t, by bracketing
// bisection in (0, 64*t].
double solve_g(const Alpha& alpha, double x0, double r, double t, double h);

// g'(h) = (1/(alpha h)) *
//         ((g+h)^alpha - g^alpha - alpha h (g+h)^(alpha-1))
//         / ((g+h)^(alpha-1) - g^(alpha-1)).
double g_derivative(const Alpha& alpha, double h, double g_h);

// One evaluation of the R/S/T quantities at (r, t), where
//
//   phi(r,t) = ((r+t)^a - t^a)/(a r) - t^(a-1)
//   psi(r,t) = ((r+t)^a - t^a)/(a r) - (r+t)^(a-1)
//   W        = (r+t)^(a-1) - t^(a-1)
//   R = (f''(r+t) phi^2 - f''(t) psi^2) / r^3
//   S = (a/r^3) W phi + (a(a-1)/r^2) t^(a-2) psi
//   T = ((a-1)/r^3) ((r+t)^(a-2) phi - t^(a-2) psi) - W^2 / r^4
//   x0 = (((r+t)^a - t^a)/(a r))^(1/(a-1))  ( = S_alpha(t, t+r) )
//
// and every family member satisfies, for all r > 0,
//
//   (1/(a r)) (f'(r+t) - f'(t)) = R/S + (f'(t) - f'(x0)) T/S.
//
// The power differences above cancel catastrophically as r -> 0, so the
// pure-power quantities are evaluated in double-double arithmetic; only the
// f'' factors enter at working precision.
struct RstPoint {
  double r = 0.0, t = 0.0;
  double phi = 0.0, psi = 0.0;
  double R = 0.0, S = 0.0, T = 0.0;
  double x0 = 0.0;
};

RstPoint rst_terms(const Alpha& alpha, const DifferentiableFn& f, double r,
                   double t);

// Leading terms of R, S, T as r -> 0:
//   R0 = ((a-1)^2/4) t^(2a-4) f'''(t) - ((a-1)^2(a-2)/6) t^(2a-5) f''(t)
//   S0 = (a(a-1)^2(a-2)/12) t^(2a-5)
//   T0 = -((a-1)^2(a-2)/12) t^(2a-6)
struct RstLeading {
  double R0 = 0.0, S0 = 0.0, T0 = 0.0;
};

RstLeading rst_leading(const Alpha& alpha, const DifferentiableFn& f,
                       double t);

// Tabulated approach to the r -> 0 limit at r_k = 2^-k, k = 4..kmax.
struct ConvergenceRow {
  int k = 0;
  double r = 0.0;
  double R = 0.0, S = 0.0, T = 0.0;
  double dR = 0.0, dS = 0.0, dT = 0.0;  // minus the leading terms
  double lhs = 0.0, rhs = 0.0;          // the displayed identity, both sides
  double identity_residual = 0.0;       // |lhs - rhs|
  double diff1_residual = 0.0;  // f'(r+g)(1+g') - f'(g)g' - f'(x0) at h = r
  double ode_estimate = 0.0;    // -(a(a-2)/(3t)) (lhs - R/S) -> ODE residual
};

struct ConvergenceReport {
  double t = 0.0;
  int kmax = 0;
  RstLeading leading;
  std::vector<ConvergenceRow> rows;
  // Richardson order estimates of dR, dS, dT (nullopt: at the roundoff
  // floor from the first rows on, which counts as converged).
  std::optional<double> order_R, order_S, order_T;
  double max_identity_residual = 0.0;
  double max_diff1_residual = 0.0;
  double ode_limit = 0.0;       // order-1 extrapolation of ode_estimate
  double ode_direct = 0.0;      // f'''(t) - ((a-2)/t) f''(t)
  // First k at which some |dR|,|dS|,|dT| stopped decreasing while still
  // above the roundoff floor; unset when the whole ladder converged.
  std::optional<int> precision_floor_k;
  bool converged = false;
};

// Requires alpha outside {0, 1, 2}: at alpha = 2 both S0 and T0 vanish and
// the identity's R/S ratio degenerates to 0/0, so the limit argument does
// not apply there.  kmax in [6, 40]; default 16 (past k ~ 17 cancellation
// in the T ladder reaches working precision).
ConvergenceReport asymptotic_convergence(const Alpha& alpha,
                                         const DifferentiableFn& f, double t,
                                         int kmax = 16);

// Deterministic spot checks of the implicit-function layer around x0:
// solver residuals for phi and g, and closed-form derivatives against
// central differences of the solvers over a three-step ladder.
struct DerivLadderRow {
  double h = 0.0;      // difference step
  double fd = 0.0;     // central difference of the solver
  double deriv = 0.0;  // closed-form derivative
  double err = 0.0;    // fd - deriv
};

struct ImplicitCheck {
  double seed_residual = 0.0;      // |psi(x0, y0)| / scale
  double max_phi_residual = 0.0;   // max |psi(x, phi(x))| / scale over grid
  double max_g_residual = 0.0;     // max |Psi(h, g(h))| / scale over grid
  std::vector<DerivLadderRow> phi_ladder;
  std::vector<DerivLadderRow> g_ladder;
  double phi_order = 0.0;          // derivative-vs-difference order, phi
  double g_order = 0.0;            // derivative-vs-difference order, g
  double max_phi_deriv_relerr = 0.0;  // at the finest step
  double max_g_deriv_relerr = 0.0;
};

ImplicitCheck implicit_function_checks(const Alpha& alpha, double x0,
                                       std::uint64_t seed = 0);

}  // namespace stolarsky

#endif  // STOLARSKY_PROOFCHECK_HPP_
