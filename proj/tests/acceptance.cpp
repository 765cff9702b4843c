// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit when
// anything fails.  Expects the CLI binary path as argv[1] (used by the
// alpha-recovery criterion).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "stolarsky/abscissa.hpp"
#include "stolarsky/means.hpp"
#include "stolarsky/proofcheck.hpp"
#include "stolarsky/rng.hpp"
#include "stolarsky/solutions.hpp"
#include "support/oracle.hpp"

using namespace stolarsky;

namespace {

int failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string g_cli;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  FILE* pipe = popen((g_cli + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

//----------------------------------------------------------------------
// 1. Forward verification of the solution families.
//----------------------------------------------------------------------
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> alphas = {-3.0, -1.0, -0.5, 0.0, 0.5,
                                      1.0,  1.5,  2.0,  3.0};
  SplitMix64 rng(1001);
  double max_fde = 0.0, max_ode = 0.0;
  for (double av : alphas) {
    const Alpha alpha(av);
    for (int trial = 0; trial < 100; ++trial) {
      const SolutionFamily fam{alpha, rng.uniform(-10, 10),
                               rng.uniform(-10, 10), rng.uniform(-10, 10)};
      const auto f = DifferentiableFn::from_family(fam);
      double a = rng.uniform(0.1, 10.0);
      double b = rng.uniform(0.1, 10.0);
      while (a == b) b = rng.uniform(0.1, 10.0);
      const Interval iv(a, b);
      max_fde = std::fmax(max_fde, std::fabs(fde_residual(f, alpha, iv)) /
                                       fde_residual_scale(f, iv));
      const double t = rng.uniform(0.1, 10.0);
      max_ode = std::fmax(max_ode, std::fabs(ode_residual(f, alpha, t)) /
                                       (1.0 + std::fabs(f.eval(t, 3))));
    }
  }
  const double secs = elapsed_s(t0);
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "max fde %.3g, max ode %.3g, %.2fs", max_fde, max_ode, secs);
  report(1, "family forward verification",
         max_fde <= 1e-9 && max_ode <= 1e-9 && secs < 5.0, detail);
}

//----------------------------------------------------------------------
// 2. Geometric-mean family: the abscissa of c1/x + c2 x + c3 is sqrt(ab).
//----------------------------------------------------------------------
void criterion2() {
  SplitMix64 rng(1002);
  double worst = 0.0;
  bool unique = true;
  for (int i = 0; i < 50; ++i) {
    double c1 = rng.uniform(0.5, 10.0) * (rng.uniform01() < 0.5 ? -1.0 : 1.0);
    const SolutionFamily fam{Alpha(-1.0), c1, rng.uniform(-10, 10),
                             rng.uniform(-10, 10)};
    const auto f = DifferentiableFn::from_family(fam);
    double a = rng.uniform(0.1, 10.0);
    double b = rng.uniform(0.1, 10.0);
    while (std::fabs(a - b) < 0.05) b = rng.uniform(0.1, 10.0);
    const Interval iv(a, b);
    const auto roots = mean_value_abscissas(f, iv);
    if (roots.size() != 1) unique = false;
    const double target = std::sqrt(iv.a() * iv.b());
    for (double c : roots) {
      worst = std::fmax(worst, std::fabs(c - target) / iv.width());
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "max |c - sqrt(ab)|/(b-a) = %.3g", worst);
  report(2, "geometric-mean abscissas", unique && worst <= 1e-8, detail);
}

//----------------------------------------------------------------------
// 3. Exactness of the arithmetic and geometric members on a grid.
//----------------------------------------------------------------------
void criterion3() {
  double worst = 0.0;
  bool fixed_ok = true;
  std::vector<double> grid;
  for (int i = 0; i < 20; ++i) {
    grid.push_back(0.01 * std::pow(1e4, i / 19.0));
  }
  for (double a : grid) {
    for (double b : grid) {
      const Interval iv(a, b);
      const double s2 = stolarsky_mean(Alpha(2.0), iv);
      const double sm1 = stolarsky_mean(Alpha(-1.0), iv);
      worst = std::fmax(worst, std::fabs(s2 - 0.5 * (a + b)) / (0.5 * (a + b)));
      worst = std::fmax(worst, std::fabs(sm1 - std::sqrt(a * b)) / std::sqrt(a * b));
    }
    for (double av : {-3.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0}) {
      if (stolarsky_mean(Alpha(av), Interval(a, a)) != a) fixed_ok = false;
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "max relative error %.3g", worst);
  report(3, "arithmetic/geometric exactness", worst <= 1e-12 && fixed_ok,
         detail);
}

//----------------------------------------------------------------------
// 4. Continuity at the singular parameters, k = 12.
//----------------------------------------------------------------------
void criterion4() {
  double worst = 0.0;
  std::vector<double> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(0.01 * std::pow(1e4, i / 19.0));
  const double eps = 1e-12;
  for (double a : grid) {
    for (double b : grid) {
      const Interval iv(a, b);
      const double s0 = stolarsky_mean(Alpha(0.0), iv);
      const double s1 = stolarsky_mean(Alpha(1.0), iv);
      for (double sign : {1.0, -1.0}) {
        worst = std::fmax(worst, std::fabs(stolarsky_mean(Alpha(sign * eps), iv) - s0) / s0);
        worst = std::fmax(worst, std::fabs(stolarsky_mean(Alpha(1.0 + sign * eps), iv) - s1) / s0);
      }
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "max |S - limit|/S_0 = %.3g", worst);
  report(4, "continuity at alpha in {0, 1}", worst <= 1e-9, detail);
}

//----------------------------------------------------------------------
// 5. Agreement with the double-double reference evaluator.
//----------------------------------------------------------------------
void criterion5() {
  SplitMix64 rng(1005);
  double worst = 0.0;
  int count = 0;
  const auto check = [&](double alpha, double a, double b) {
    if (a == b) return;
    const double s = stolarsky_mean(Alpha(alpha), Interval(a, b));
    const double ref = oracle::stolarsky_reference(alpha, a, b);
    worst = std::fmax(worst, std::fabs(s - ref) / std::fabs(ref));
    ++count;
  };
  // Broad sweep.
  for (int i = 0; i < 6000; ++i) {
    check(rng.uniform(-8.0, 8.0), std::exp(rng.uniform(-6.9, 6.9)),
          std::exp(rng.uniform(-6.9, 6.9)));
  }
  // Near-equal endpoints, b/a - 1 from 1e-2 down to 1e-13.  The reference
  // loses digits when alpha also degenerates, so this block keeps alpha
  // clear of the singular points; the singular block below stresses alpha
  // on well-separated endpoints.
  for (int i = 0; i < 2000; ++i) {
    double alpha = rng.uniform(-8.0, 8.0);
    while (std::fabs(alpha) < 1e-3 || std::fabs(alpha - 1.0) < 1e-3) {
      alpha = rng.uniform(-8.0, 8.0);
    }
    const double a = rng.uniform(0.5, 50.0);
    const double delta = std::pow(10.0, rng.uniform(-13.0, -2.0));
    check(alpha, a, a * (1.0 + delta));
  }
  // Near-singular alpha.
  for (int i = 0; i < 2000; ++i) {
    const double mag = std::pow(10.0, rng.uniform(-13.0, -0.3));
    const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    const double base = rng.uniform01() < 0.5 ? 0.0 : 1.0;
    const double alpha = base + sign * mag;
    double a = rng.uniform(0.1, 10.0);
    double b = rng.uniform(0.1, 10.0);
    while (std::fabs(a - b) < 1e-3) b = rng.uniform(0.1, 10.0);
    check(alpha, a, b);
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "%d samples, max relative diff %.3g",
                count, worst);
  report(5, "reference-evaluator agreement", worst <= 1e-12, detail);
}

//----------------------------------------------------------------------
// 6. R/S/T convergence and the identity along the ladder.
//----------------------------------------------------------------------
void criterion6() {
  bool ok = true;
  std::string detail;
  for (double av : {-2.0, -1.0, 0.5, 3.0}) {
    const Alpha alpha(av);
    const auto f = DifferentiableFn::from_family(SolutionFamily{alpha, 1, 1, 1});
    const ConvergenceReport rep = asymptotic_convergence(alpha, f, 1.0, 14);
    double identity_rel = 0.0, diff1_rel = 0.0;
    for (const auto& row : rep.rows) {
      identity_rel = std::fmax(identity_rel, row.identity_residual /
                                                 (1.0 + std::fabs(row.lhs)));
      diff1_rel = std::fmax(diff1_rel, row.diff1_residual /
                                           (1.0 + std::fabs(f.eval(1.0, 1))));
    }
    const bool this_ok = rep.converged && identity_rel <= 1e-7 &&
                         diff1_rel <= 1e-7 && std::fabs(rep.ode_limit) <= 1e-6;
    if (!this_ok) {
      ok = false;
      detail += " alpha=" + std::to_string(av);
    }
  }
  report(6, "R/S/T convergence and identity", ok,
         ok ? "alpha in {-2,-1,0.5,3}, k = 4..14" : detail);
}

//----------------------------------------------------------------------
// 7. Implicit-function machinery.
//----------------------------------------------------------------------
void criterion7() {
  bool ok = true;
  double worst_order = 99.0, worst_resid = 0.0;
  for (double av : {-2.0, -1.0, 0.5, 3.0}) {
    const ImplicitCheck c = implicit_function_checks(Alpha(av), 1.0, 77);
    worst_resid = std::fmax(worst_resid,
                            std::fmax(c.seed_residual,
                                      std::fmax(c.max_phi_residual,
                                                c.max_g_residual)));
    worst_order = std::fmin(worst_order, std::fmin(c.phi_order, c.g_order));
    if (c.seed_residual > 1e-12 || c.max_phi_residual > 1e-12 ||
        c.max_g_residual > 1e-12 || c.phi_order < 1.8 || c.g_order < 1.8) {
      ok = false;
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "max residual %.3g, min order %.2f",
                worst_resid, worst_order);
  report(7, "implicit-function checks", ok, detail);
}

//----------------------------------------------------------------------
// 8. Non-membership of x^3 at alpha = 2.
//----------------------------------------------------------------------
void criterion8() {
  const auto f = DifferentiableFn::from_expr(parse("x^3"));
  const auto verdict = fde_membership(f, Alpha(2.0), Interval(1.0, 2.0));
  const auto rep = abscissa_report(f, Alpha(2.0), Interval(1.0, 2.0));
  char detail[120];
  std::snprintf(detail, sizeof(detail), "aggregate residual %.3g, matches %s",
                verdict.max_abs, rep.matches ? "true" : "false");
  report(8, "x^3 non-membership", verdict.max_abs > 0.1 && !verdict.member &&
         !rep.matches, detail);
}

//----------------------------------------------------------------------
// 9. Alpha recovery through the fit-alpha command.
//----------------------------------------------------------------------
void criterion9() {
  SplitMix64 rng(1009);
  bool ok = true;
  double worst = 0.0;
  double secs = 0.0;
  for (double av : {-3.0, -1.0, 0.0, 0.5, 1.0, 2.0, 4.0}) {
    const std::string path =
        "/tmp/stolarsky_accept_" + std::to_string(getpid()) + ".csv";
    std::ofstream out(path);
    out << "# a,b,c with c = S_alpha(a,b)\n";
    char row[96];
    for (int i = 0; i < 100; ++i) {
      double a = rng.uniform(0.1, 10.0);
      double b = rng.uniform(0.1, 10.0);
      while (std::fabs(a - b) < 0.01) b = rng.uniform(0.1, 10.0);
      const double c = stolarsky_mean(Alpha(av), Interval(a, b));
      std::snprintf(row, sizeof(row), "%.17g,%.17g,%.17g\n", a, b, c);
      out << row;
    }
    out.close();
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult r = run_cli("fit-alpha --input " + path);
    secs += elapsed_s(t0);
    std::remove(path.c_str());
    double median = 1e300;
    const auto pos = r.out.rfind("median ");
    if (r.status == 0 && pos != std::string::npos) {
      median = std::atof(r.out.c_str() + pos + 7);
    }
    const double err = std::fabs(median - av);
    worst = std::fmax(worst, err);
    if (err > 1e-6) ok = false;
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "max |median - alpha| = %.3g, %.2fs",
                worst, secs);
  report(9, "alpha recovery via fit-alpha", ok && secs < 1.0, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
