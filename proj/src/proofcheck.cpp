#include "stolarsky/proofcheck.hpp"

#include <cmath>
#include <numbers>

#include "stolarsky/ddouble.hpp"
#include "stolarsky/richardson.hpp"
#include "stolarsky/rng.hpp"

namespace stolarsky {

namespace {

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite and positive");
  }
}

void require_generic(const Alpha& alpha, const char* what) {
  if (!alpha.generic()) {
    throw BranchError(std::string(what) +
                      " requires a generic exponent (alpha outside the "
                      "singular windows around 0 and 1)");
  }
}

// Bracketing bisection for a function of y that is monotone on (0, window],
// scanned on the geometric grid seed * 2^j.
template <typename Fn>
double bracket_bisect(const Fn& fn, double seed, const char* what) {
  double lo = seed * 0x1p-40;
  double flo = fn(lo);
  if (flo == 0.0) return lo;
  double hi = 0.0;
  for (int j = -39; j <= 6; ++j) {
    const double y = std::ldexp(seed, j);
    const double fy = fn(y);
    if (fy == 0.0) return y;
    if ((fy < 0.0) != (flo < 0.0)) {
      hi = y;
      break;
    }
    lo = y;
    flo = fy;
  }
  if (hi == 0.0) {
    throw NotBracketedError(std::string(what) +
                            ": no sign change in (0, 64*seed]");
  }
  for (int step = 0; step < 200 && hi - lo > 4.0 * 0x1p-53 * hi; ++step) {
    const double mid = 0.5 * (lo + hi);
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

LemmaSetup lemma_seed(const Alpha& alpha, double x0) {
  require_generic(alpha, "lemma_seed");
  check_positive(x0, "x0");
  const double av = alpha.value();
  // ((2^a - 1)/a)^(1/(1-a)), with 2^a - 1 = expm1(a log 2).
  const double q = std::expm1(av * std::numbers::ln2) / av;
  const double h0 = x0 * std::exp(std::log(q) / (1.0 - av));
  return LemmaSetup{alpha, x0, h0, h0};
}

double lemma_psi(const LemmaSetup& setup, double x, double y) {
  const double av = setup.alpha.value();
  return std::pow(y + setup.h0, av) - std::pow(y, av) -
         av * setup.h0 * std::pow(x, av - 1.0);
}

double solve_phi(const LemmaSetup& setup, double x) {
  check_positive(x, "x");
  return bracket_bisect([&](double y) { return lemma_psi(setup, x, y); },
                        setup.y0, "solve_phi");
}

double phi_derivative(const LemmaSetup& setup, double x, double phi_x) {
  const double av = setup.alpha.value();
  const double den =
      std::pow(phi_x + setup.h0, av - 1.0) - std::pow(phi_x, av - 1.0);
  if (std::fabs(den) < 1e-300) {
    throw DegenerateDenominatorError("phi_derivative: denominator underflow");
  }
  return (av - 1.0) * setup.h0 * std::pow(x, av - 2.0) / den;
}

double proof_psi(const Alpha& alpha, double x0, double h, double y) {
  const double av = alpha.value();
  return std::pow(y + h, av) - std::pow(y, av) -
         av * h * std::pow(x0, av - 1.0);
}

double solve_g(const Alpha& alpha, double x0, double /*r*/, double t,
               double h) {
  require_generic(alpha, "solve_g");
  check_positive(h, "h");
  return bracket_bisect(
      [&](double y) { return proof_psi(alpha, x0, h, y); }, t, "solve_g");
}

double g_derivative(const Alpha& alpha, double h, double g_h) {
  const double av = alpha.value();
  const double den =
      std::pow(g_h + h, av - 1.0) - std::pow(g_h, av - 1.0);
  if (std::fabs(den) < 1e-300) {
    throw DegenerateDenominatorError("g_derivative: denominator underflow");
  }
  const double num = std::pow(g_h + h, av) - std::pow(g_h, av) -
                     av * h * std::pow(g_h + h, av - 1.0);
  return num / (av * h * den);
}

RstPoint rst_terms(const Alpha& alpha, const DifferentiableFn& f, double r,
                   double t) {
  require_generic(alpha, "rst_terms");
  check_positive(r, "r");
  check_positive(t, "t");
  const double av = alpha.value();

  const DDouble td(t);
  const DDouble rt = DDouble::two_sum(t, r);  // t + r, exact
  const DDouble am1 = DDouble::two_sum(av, -1.0);
  const DDouble am2 = DDouble::two_sum(av, -2.0);

  const DDouble pa = pow(rt, DDouble(av));
  const DDouble pt = pow(td, DDouble(av));
  const DDouble pam1 = pow(rt, am1);
  const DDouble ptm1 = pow(td, am1);
  const DDouble pam2 = pow(rt, am2);
  const DDouble ptm2 = pow(td, am2);

  const DDouble d1 = (pa - pt) / DDouble::two_prod(av, r);
  const DDouble phi = d1 - ptm1;
  const DDouble psi = d1 - pam1;
  const DDouble w = pam1 - ptm1;

  const DDouble r2 = DDouble::two_prod(r, r);
  const DDouble r3 = r2 * DDouble(r);
  const DDouble r4 = r3 * DDouble(r);

  const DDouble f2b(f.eval(t + r, 2));
  const DDouble f2a(f.eval(t, 2));

  const DDouble rr = (f2b * phi * phi - f2a * psi * psi) / r3;
  const DDouble ss =
      (DDouble(av) / r3) * (w * phi) + ((DDouble(av) * am1) / r2) * (ptm2 * psi);
  const DDouble tt =
      (am1 / r3) * (pam2 * phi - ptm2 * psi) - (w * w) / r4;
  const DDouble x0 = pow(d1, DDouble(1.0) / am1);

  RstPoint p;
  p.r = r;
  p.t = t;
  p.phi = phi.to_double();
  p.psi = psi.to_double();
  p.R = rr.to_double();
  p.S = ss.to_double();
  p.T = tt.to_double();
  p.x0 = x0.to_double();
  return p;
}

RstLeading rst_leading(const Alpha& alpha, const DifferentiableFn& f,
                       double t) {
  require_generic(alpha, "rst_leading");
  check_positive(t, "t");
  const double a = alpha.value();
  const double am1sq = (a - 1.0) * (a - 1.0);
  RstLeading out;
  out.R0 = am1sq / 4.0 * std::pow(t, 2.0 * a - 4.0) * f.eval(t, 3) -
           am1sq * (a - 2.0) / 6.0 * std::pow(t, 2.0 * a - 5.0) * f.eval(t, 2);
  out.S0 = a * am1sq * (a - 2.0) / 12.0 * std::pow(t, 2.0 * a - 5.0);
  out.T0 = -am1sq * (a - 2.0) / 12.0 * std::pow(t, 2.0 * a - 6.0);
  return out;
}

ConvergenceReport asymptotic_convergence(const Alpha& alpha,
                                         const DifferentiableFn& f, double t,
                                         int kmax) {
  require_generic(alpha, "asymptotic_convergence");
  if (alpha.value() == 2.0) {
    throw BranchError(
        "asymptotic_convergence: at alpha = 2 the leading terms of S and T "
        "vanish and the identity degenerates to 0/0; use the residual checks "
        "instead");
  }
  check_positive(t, "t");
  if (kmax < 6 || kmax > 40) {
    throw DomainError("kmax must lie in [6, 40]");
  }
  const double av = alpha.value();

  ConvergenceReport rep;
  rep.t = t;
  rep.kmax = kmax;
  rep.leading = rst_leading(alpha, f, t);
  rep.ode_direct = f.eval(t, 3) - (av - 2.0) / t * f.eval(t, 2);

  const double fp_t = f.eval(t, 1);
  for (int k = 4; k <= kmax; ++k) {
    const double r = std::ldexp(1.0, -k);
    const RstPoint p = rst_terms(alpha, f, r, t);
    ConvergenceRow row;
    row.k = k;
    row.r = r;
    row.R = p.R;
    row.S = p.S;
    row.T = p.T;
    row.dR = p.R - rep.leading.R0;
    row.dS = p.S - rep.leading.S0;
    row.dT = p.T - rep.leading.T0;
    const double fp_rt = f.eval(t + r, 1);
    const double fp_x0 = f.eval(p.x0, 1);
    row.lhs = (fp_rt - fp_t) / (av * r);
    row.rhs = p.R / p.S + (fp_t - fp_x0) * p.T / p.S;
    row.identity_residual = std::fabs(row.lhs - row.rhs);
    const double gp = g_derivative(alpha, r, t);
    row.diff1_residual = std::fabs(fp_rt * (1.0 + gp) - fp_t * gp - fp_x0);
    row.ode_estimate = -(av * (av - 2.0) / (3.0 * t)) * (row.lhs - p.R / p.S);
    rep.rows.push_back(row);
  }

  std::vector<double> dr, ds, dt;
  for (const auto& row : rep.rows) {
    dr.push_back(row.dR);
    ds.push_back(row.dS);
    dt.push_back(row.dT);
    rep.max_identity_residual =
        std::fmax(rep.max_identity_residual, row.identity_residual);
    rep.max_diff1_residual =
        std::fmax(rep.max_diff1_residual, row.diff1_residual);
  }
  const double floor_r = 1e-9 * (1.0 + std::fabs(rep.leading.R0));
  const double floor_s = 1e-9 * (1.0 + std::fabs(rep.leading.S0));
  const double floor_t = 1e-9 * (1.0 + std::fabs(rep.leading.T0));
  rep.order_R = estimate_order(dr, floor_r);
  rep.order_S = estimate_order(ds, floor_s);
  rep.order_T = estimate_order(dt, floor_t);

  const auto first_stall = [](const std::vector<double>& d, double floor) {
    for (std::size_t i = 1; i < d.size(); ++i) {
      const double prev = std::fabs(d[i - 1]);
      const double cur = std::fabs(d[i]);
      if (cur >= prev && cur > floor) return static_cast<int>(i);
    }
    return -1;
  };
  int stall = -1;
  for (auto [seq, floor] : {std::pair{&dr, floor_r}, std::pair{&ds, floor_s},
                            std::pair{&dt, floor_t}}) {
    const int s = first_stall(*seq, floor);
    if (s >= 0 && (stall < 0 || s < stall)) stall = s;
  }
  if (stall >= 0) rep.precision_floor_k = rep.rows[stall].k;
  rep.converged = stall < 0;

  const std::size_t n = rep.rows.size();
  rep.ode_limit = extrapolate_order1(rep.rows[n - 2].ode_estimate,
                                     rep.rows[n - 1].ode_estimate);
  return rep;
}

ImplicitCheck implicit_function_checks(const Alpha& alpha, double x0,
                                       std::uint64_t seed) {
  const LemmaSetup setup = lemma_seed(alpha, x0);
  SplitMix64 rng(seed);
  ImplicitCheck out;

  const double av = alpha.value();
  const auto psi_scale = [&](double x, double y) {
    return std::fabs(std::pow(y + setup.h0, av)) +
           std::fabs(std::pow(y, av)) +
           std::fabs(av * setup.h0 * std::pow(x, av - 1.0)) + 1e-300;
  };
  out.seed_residual = std::fabs(lemma_psi(setup, setup.x0, setup.y0)) /
                      psi_scale(setup.x0, setup.y0);

  // phi: residuals and derivative-vs-difference orders on a seeded grid.
  std::vector<double> xs;
  for (int i = 0; i < 8; ++i) xs.push_back(x0 * rng.uniform(0.9, 1.1));
  for (double x : xs) {
    const double y = solve_phi(setup, x);
    out.max_phi_residual = std::fmax(
        out.max_phi_residual, std::fabs(lemma_psi(setup, x, y)) / psi_scale(x, y));
  }
  {
    const double x = x0 * (1.0 + rng.uniform(-0.05, 0.05));
    const double deriv = phi_derivative(setup, x, solve_phi(setup, x));
    std::vector<double> errs;
    for (double h : {4e-3 * x0, 2e-3 * x0, 1e-3 * x0}) {
      const double fd =
          (solve_phi(setup, x + h) - solve_phi(setup, x - h)) / (2.0 * h);
      errs.push_back(fd - deriv);
      out.phi_ladder.push_back({h, fd, deriv, fd - deriv});
    }
    out.phi_order = estimate_order(errs, 1e-13 * std::fabs(deriv)).value_or(2.0);
    out.max_phi_deriv_relerr =
        std::fabs(errs.back()) / std::fmax(std::fabs(deriv), 1e-300);
  }

  // g: same checks around h = r with x0g = S_alpha(t, t+r).
  const double t = x0;
  const double r = 0.5 * x0;
  const double x0g = stolarsky_mean(alpha, Interval(t, t + r));
  const auto big_psi_scale = [&](double h, double y) {
    return std::fabs(std::pow(y + h, av)) + std::fabs(std::pow(y, av)) +
           std::fabs(av * h * std::pow(x0g, av - 1.0)) + 1e-300;
  };
  for (int i = 0; i < 8; ++i) {
    const double h = r * rng.uniform(0.9, 1.1);
    const double y = solve_g(alpha, x0g, r, t, h);
    out.max_g_residual =
        std::fmax(out.max_g_residual,
                  std::fabs(proof_psi(alpha, x0g, h, y)) / big_psi_scale(h, y));
  }
  {
    const double deriv = g_derivative(alpha, r, t);
    std::vector<double> errs;
    for (double h : {4e-3 * r, 2e-3 * r, 1e-3 * r}) {
      const double fd = (solve_g(alpha, x0g, r, t, r + h) -
                         solve_g(alpha, x0g, r, t, r - h)) /
                        (2.0 * h);
      errs.push_back(fd - deriv);
      out.g_ladder.push_back({h, fd, deriv, fd - deriv});
    }
    out.g_order = estimate_order(errs, 1e-13 * std::fabs(deriv)).value_or(2.0);
    out.max_g_deriv_relerr =
        std::fabs(errs.back()) / std::fmax(std::fabs(deriv), 1e-300);
  }
  return out;
}

}  // namespace stolarsky
