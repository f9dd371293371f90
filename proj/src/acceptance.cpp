#include "zolo/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "zolo/composition.hpp"
#include "zolo/connections.hpp"
#include "zolo/errors.hpp"
#include "zolo/oracle.hpp"

namespace zolo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kGrid = 1024;

const std::vector<double>& sweep_thetas() {
  static const std::vector<double> t{0.5, 1.0, 1.4, kPi / 2 - 0.1};
  return t;
}

const std::vector<double>& composition_thetas() {
  static const std::vector<double> t{1.0, kPi / 2 - 0.01};
  return t;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs body, turning a library exception into a failed criterion.
template <class Body>
CriterionResult run(int id, const char* name, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  const Timer t;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = t.seconds();
  return r;
}

UnimodularRational sign_approximant(int m, double theta, const AcceptanceOptions& opt) {
  const UnimodularRational s = build_s(m, theta);
  return opt.inject_fault ? perturb_first_factor(s, kFault) : s;
}

UnimodularRational sqrt_approximant(int n, double theta, const AcceptanceOptions& opt) {
  const UnimodularRational r = build_r(n, theta);
  return opt.inject_fault ? perturb_first_factor(r, kFault) : r;
}

std::vector<complex> circle(int count, double offset) {
  std::vector<complex> z;
  for (int k = 0; k < count; ++k) z.push_back(std::polar(1.0, offset + 2.0 * kPi * k / count));
  return z;
}

// Zeros of the signed phase error on the arcs, by sign changes on a fine scan
// refined with bisection.
std::vector<double> arc_error_zeros(const UnimodularRational& r, Target target, double theta) {
  std::vector<std::pair<double, double>> arcs;
  if (target == Target::Sqrt)
    arcs = {{-2.0 * theta, 2.0 * theta}};
  else
    arcs = {{-theta, theta}, {kPi - theta, kPi + theta}};
  auto err = [&](double t) {
    const complex z = std::polar(1.0, t);
    return std::arg(eval(r, z) / target_value(target, z));
  };
  std::vector<double> zeros;
  constexpr int kScan = 8192;
  for (auto [lo, hi] : arcs) {
    double prev_t = lo;
    double prev_e = err(lo);
    for (int k = 1; k <= kScan; ++k) {
      const double t = lo + (hi - lo) * k / kScan;
      const double e = err(t);
      if ((prev_e < 0.0) != (e < 0.0)) {
        double a = prev_t, b = t, ea = prev_e;
        for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
          const double c = 0.5 * (a + b);
          const double ec = err(c);
          if ((ec < 0.0) == (ea < 0.0)) {
            a = c;
            ea = ec;
          } else {
            b = c;
          }
        }
        zeros.push_back(0.5 * (a + b));
      }
      prev_t = t;
      prev_e = e;
    }
  }
  return zeros;
}

}  // namespace

UnimodularRational perturb_first_factor(const UnimodularRational& r, double rel) {
  std::vector<Factor> f = r.factors();
  for (Factor& x : f)
    if (!x.param.is_infinite() && x.param.value() != 0.0) {
      x.param = FactorParam::finite(x.param.value() * (1.0 + rel));
      break;
    }
  return UnimodularRational(r.family(), r.z_power(), r.quarter_turns(), std::move(f));
}

CriterionResult criterion_optimal_error(const AcceptanceOptions& opt) {
  return run(1, "optimal error equals arccos(lambda)", [&](CriterionResult& out) {
    const Timer t;
    double worst = 0.0;
    for (double theta : sweep_thetas()) {
      for (int m = 1; m <= 8; ++m) {
        const PhaseErrorReport rep = phase_error_sign(sign_approximant(m, theta, opt), theta, kGrid);
        worst = std::max(worst, std::abs(rep.max_error - optimal_phase_error(m, theta)));
      }
      for (int n = 0; n <= 4; ++n) {
        const PhaseErrorReport rep = phase_error_sqrt(sqrt_approximant(n, theta, opt), theta, kGrid);
        worst = std::max(worst, std::abs(rep.max_error - optimal_phase_error(2 * n + 1, theta)));
      }
    }
    const double secs = t.seconds();
    out.passed = worst <= kOptimalErrorTol && secs <= kCriterion1Seconds;
    out.detail = fmt("max |measured - arccos(lambda)| = %.3e, %.2f s", worst, secs);
  });
}

CriterionResult criterion_equioscillation(const AcceptanceOptions& opt) {
  return run(2, "equioscillation certificate", [&](CriterionResult& out) {
    int bad = 0, checked = 0;
    auto audit = [&](const PhaseErrorReport& a, const PhaseErrorReport& b) {
      for (std::size_t k = 0; k < a.arcs.size(); ++k) {
        ++checked;
        const bool ok = a.arcs[k].count == a.arcs[k].expected && a.arcs[k].endpoints_attained &&
                        k < b.arcs.size() && b.arcs[k].count == a.arcs[k].count;
        bad += ok ? 0 : 1;
      }
    };
    for (double theta : sweep_thetas()) {
      for (int m = 1; m <= 8; ++m) {
        const UnimodularRational s = sign_approximant(m, theta, opt);
        audit(phase_error_sign(s, theta, kGrid / 2), phase_error_sign(s, theta, kGrid));
      }
      for (int n = 0; n <= 4; ++n) {
        const UnimodularRational r = sqrt_approximant(n, theta, opt);
        audit(phase_error_sqrt(r, theta, kGrid / 2), phase_error_sqrt(r, theta, kGrid));
      }
    }
    out.passed = bad == 0;
    out.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) +
                 " arcs with the full alternation count, endpoints attained, stable under grid doubling";
  });
}

CriterionResult criterion_bounds() {
  return run(3, "a priori error bounds and Z_m chain", [](CriterionResult& out) {
    double worst_excess = -1.0, worst_chain = 0.0;
    bool ordered = true;
    for (double theta : sweep_thetas()) {
      const EllipticModulus e = EllipticModulus::from_angle(theta);
      for (int m = 1; m <= 8; ++m) {
        const ErrorBounds b = error_bounds(m, theta, Problem::Z6);
        const double measured = phase_error_sign(build_s(m, theta), theta, kGrid).max_error;
        worst_excess = std::max(worst_excess, measured - b.rho_bound);
        ordered = ordered && b.rho_bound <= b.secant_bound;
        const double chain = std::acos(lambda_from_Z(zolotarev_number(m, e)));
        worst_chain = std::max(worst_chain, std::abs(chain - optimal_phase_error(m, theta)));
      }
      for (int n = 0; n <= 4; ++n) {
        const ErrorBounds b = error_bounds(n, theta, Problem::Z5);
        const double measured = phase_error_sqrt(build_r(n, theta), theta, kGrid).max_error;
        worst_excess = std::max(worst_excess, measured - b.rho_bound);
        ordered = ordered && b.rho_bound <= b.secant_bound;
      }
    }
    out.passed = worst_excess <= kBoundSlackTol && ordered && worst_chain <= kZChainTol;
    out.detail = fmt("max(measured - 4 rho^-m/2) = %.3e, Z_m chain deviation %.3e", worst_excess, worst_chain) +
                 (ordered ? ", rho bound <= secant bound" : ", rho bound exceeds secant bound");
  });
}

CriterionResult criterion_structural() {
  return run(4, "s_{2n+1}^(+-1) r_n(z^2) = z", [](CriterionResult& out) {
    double worst = 0.0;
    const std::vector<complex> pts = circle(256, 0.5 * kPi / 256);
    for (double theta : sweep_thetas())
      for (int n = 0; n <= 3; ++n) {
        const UnimodularRational s = build_s(2 * n + 1, theta);
        const UnimodularRational r = build_r(n, theta);
        for (const complex& z : pts) {
          complex sv = eval(s, z);
          if (n % 2 == 1) sv = 1.0 / sv;
          worst = std::max(worst, std::abs(sv * eval(r, z * z) - z));
        }
      }
    out.passed = worst <= kStructuralTol;
    out.detail = fmt("max residual %.3e over 256 circle points", worst);
  });
}

CriterionResult criterion_lift() {
  return run(5, "F/G lift and product identities", [](CriterionResult& out) {
    double worst_lift = 0.0, worst_fg = 0.0;
    const std::vector<complex> pts = circle(100, 0.0);
    std::vector<double> xs = verification_abscissae(200);
    for (int k = 0; k <= 200; ++k) xs.push_back(-1.0 + k / 100.0);
    for (double theta : sweep_thetas())
      for (int m = 1; m <= 8; ++m) {
        const UnimodularRational s = build_s(m, theta);
        const ZolotarevFraction zf(m, Modulus::from_angle(theta));
        for (const complex& z : pts) worst_lift = std::max(worst_lift, std::abs(eval(s, z) - eval_s_via_FG(zf, z)));
        for (double x : xs) {
          const FGPair d = eval_F_direct(zf, x);
          const FGPair p = eval_F_product(zf, x);
          worst_fg = std::max({worst_fg, std::abs(d.F - p.F), std::abs(d.G - p.G)});
        }
      }
    out.passed = worst_lift <= kLiftTol && worst_fg <= kDirectProductTol;
    out.detail = fmt("lift residual %.3e, direct vs product %.3e", worst_lift, worst_fg);
  });
}

CriterionResult criterion_composition() {
  return run(6, "composition laws", [](CriterionResult& out) {
    const std::vector<complex> pts = verification_points(136);
    const std::vector<double> xs = verification_abscissae(200);
    double ws = 0.0, wr = 0.0, wf = 0.0;
    for (double theta : composition_thetas()) {
      for (auto [mt, m] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 5}}) {
        ws = std::max(ws, max_residual(SComposition(mt, m, theta), pts).max_residual);
        wf = std::max(wf, max_residual(FComposition(mt, m, std::cos(theta)), xs).max_residual);
      }
      for (auto [nt, n] : {std::pair{1, 1}, {1, 2}, {2, 1}})
        wr = std::max(wr, max_residual(RComposition(nt, n, theta), pts).max_residual);
    }
    out.passed = ws <= kCompositionTol && wr <= kCompositionTol && wf <= kFCompositionTol;
    out.detail = fmt("s law %.3e, r law %.3e", ws, wr) + fmt(", F law %.3e (200 circle points, x-grid)", wf);
  });
}

CriterionResult criterion_connections() {
  return run(7, "Blaschke and Pade connections", [](CriterionResult& out) {
    double pole = 0.0, limit = 0.0, comp = 0.0, rel = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const PadeApproximant p = pade_p(n);
      const std::vector<double> exact = pade_poles_exact(n);
      for (std::size_t j = 0; j < exact.size(); ++j) pole = std::max(pole, std::abs(p.poles[j] - exact[j]));
      limit = std::max(limit, pade_limit_check(n, {1e-3}).front());
    }
    const std::vector<complex> pts = verification_points(64);
    for (auto [mt, m] : {std::pair{2, 2}, {2, 3}, {3, 2}})
      for (const complex& z : pts) comp = std::max(comp, compose_h(mt, m, 0.25, z).residual());
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k < 32; ++k) {
        const double z = blaschke_point(0.25, std::cos(kPi * (2.0 * k + 1.0) / 32.0));
        rel = std::max(rel, blaschke_s_relation(m, 0.25, z).residual());
        rel = std::max(rel, blaschke_F_relation(m, 0.25, z).residual());
      }
    out.passed = pole <= kPadePoleTol && limit <= kPadeLimitTol && comp <= kBlaschkeTol && rel <= kBlaschkeTol;
    out.detail = fmt("Pade poles %.3e, pole set at Theta=1e-3 %.3e", pole, limit) +
                 fmt(", h composition %.3e, s/F relations %.3e", comp, rel);
  });
}

CriterionResult criterion_oracles() {
  return run(8, "oracle agreement", [](CriterionResult& out) {
    double wk = 0.0, wsn = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double ell = 0.999 * i / 40.0;
      wk = std::max(wk, std::abs(oracle::oracle_K(ell).value - complete_K(ell)));
    }
    for (double ell : {0.05, 0.3, 0.5, 0.7, 0.9, 0.99}) {
      const double K = complete_K(ell);
      for (int k = -8; k <= 8; ++k) {
        const double u = 2.0 * K * k / 8.0;
        const double phi = oracle::oracle_amplitude(u, ell).value;
        const JacobiTriple t = jacobi_sncndn(u, ell);
        const double s = std::sin(phi);
        wsn = std::max({wsn, std::abs(s - t.sn), std::abs(std::cos(phi) - t.cn),
                        std::abs(std::sqrt(1.0 - ell * ell * s * s) - t.dn)});
      }
    }
    int argmin_ok = 0;
    for (double theta : sweep_thetas()) {
      const oracle::Degree1Scan scan = oracle::oracle_minimax_degree1(theta, 10000);
      const double a1 = coeff_a(1, 1, theta);
      if (std::abs(std::log(scan.grid_argmin / a1)) <= std::log(scan.cell_ratio)) ++argmin_ok;
    }
    const int total = static_cast<int>(sweep_thetas().size());
    out.passed = wk <= kOracleTol && wsn <= kOracleTol && argmin_ok == total;
    out.detail = fmt("K %.3e, sn/cn/dn %.3e", wk, wsn) + ", degree-1 argmin within one cell " +
                 std::to_string(argmin_ok) + "/" + std::to_string(total);
  });
}

ContourCheck check_contour(const UnimodularRational& r, Target target, double theta, const Window& window,
                           int resolution) {
  ContourCheck out;
  const GridField g = contour_grid(r, target, window, resolution);
  const double h = std::max((window.re_hi - window.re_lo), (window.im_hi - window.im_lo)) / (resolution - 1);

  // Poles: one infinite cell per analytic pole inside the window.
  int expected_inf = 0, pole_hits = 0;
  for (const complex& p : zeros_and_poles(r).poles) {
    if (p.real() < window.re_lo - 0.5 * h || p.real() > window.re_hi + 0.5 * h || p.imag() < window.im_lo - 0.5 * h ||
        p.imag() > window.im_hi + 0.5 * h)
      continue;
    ++expected_inf;
    const auto [row, col] = g.nearest(p);
    if (std::isinf(g.at(row, col))) ++pole_hits;
  }
  int inf_cells = 0;
  for (double v : g.values) inf_cells += std::isinf(v) ? 1 : 0;

  // Zeros: the error vanishes only on the circle, so every near-zero local
  // minimum of the grid must sit within a couple of cells of |z| = 1, and
  // every analytic zero must have a near-zero cell next to it.
  const std::vector<double> zeros = arc_error_zeros(r, target, theta);
  const int degree = static_cast<int>(r.factors().size());
  const int expected_zeros = target == Target::Sqrt ? 2 * degree + 1 : 2 * degree;
  const double tau = 2.0 * h;
  int minima = 0, off_circle = 0;
  for (int row = 1; row + 1 < resolution; ++row)
    for (int col = 1; col + 1 < resolution; ++col) {
      const double v = g.at(row, col);
      if (!(v <= tau)) continue;
      bool is_min = true;
      for (int dr = -1; dr <= 1 && is_min; ++dr)
        for (int dc = -1; dc <= 1; ++dc)
          if ((dr || dc) && g.at(row + dr, col + dc) < v) {
            is_min = false;
            break;
          }
      if (!is_min) continue;
      // Cells on the target's cut (Re z = 0 for sign, the negative axis for
      // sqrt) compare against a conventional value, not a limit.
      const double re = g.re(col), im = g.im(row);
      if (target == Target::Sign ? std::abs(re) < 0.5 * h : (re < 0.0 && std::abs(im) < 0.5 * h)) continue;
      ++minima;
      if (std::abs(std::abs(complex(re, im)) - 1.0) > 2.0 * h) ++off_circle;
    }
  int zero_hits = 0;
  for (double t : zeros) {
    const auto [row, col] = g.nearest(std::polar(1.0, t));
    double best = INFINITY;
    for (int dr = -1; dr <= 1; ++dr)
      for (int dc = -1; dc <= 1; ++dc) {
        const int rr = row + dr, cc = col + dc;
        if (rr >= 0 && rr < resolution && cc >= 0 && cc < resolution) best = std::min(best, g.at(rr, cc));
      }
    if (best <= tau) ++zero_hits;
  }

  out.passed = pole_hits == expected_inf && inf_cells == expected_inf &&
               static_cast<int>(zeros.size()) == expected_zeros && zero_hits == expected_zeros && minima > 0 &&
               off_circle == 0;
  out.detail = std::to_string(zeros.size()) + "/" + std::to_string(expected_zeros) + " error zeros on the arcs, " +
               std::to_string(zero_hits) + " resolved, " + std::to_string(off_circle) + "/" +
               std::to_string(minima) + " near-zero minima off the circle, " + std::to_string(pole_hits) + "/" +
               std::to_string(expected_inf) + " pole cells (" + std::to_string(inf_cells) + " infinite)";
  return out;
}

ContourCheck check_reference_contours() {
  const double theta = kPi / 2 - 0.15;
  const ContourCheck a = check_contour(build_r(11, theta), Target::Sqrt, theta, Window{}, 401);
  const ContourCheck b = check_contour(build_s(17, theta), Target::Sign, theta, Window{}, 401);
  return {a.passed && b.passed, "r_11: " + a.detail + "; s_17: " + b.detail};
}

std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opt) {
  return {criterion_optimal_error(opt), criterion_equioscillation(opt), criterion_bounds(),
          criterion_structural(),       criterion_lift(),                criterion_composition(),
          criterion_connections(),      criterion_oracles()};
}

CriterionResult criterion_end_to_end(const std::vector<CriterionResult>& first_eight, double total_seconds) {
  return run(9, "end-to-end sweep and contour plots", [&](CriterionResult& out) {
    const Timer own;
    int passed = 0;
    for (const CriterionResult& c : first_eight) passed += c.passed ? 1 : 0;
    const ContourCheck contour = check_reference_contours();
    const double total = total_seconds + own.seconds();
    const bool sweep_ok = passed == static_cast<int>(first_eight.size()) && first_eight.size() == 8;
    out.passed = sweep_ok && total <= kSelftestSeconds && contour.passed;
    out.detail = std::to_string(passed) + "/8 criteria, " + fmt("%.2f s total; ", total) + contour.detail;
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  const Timer t;
  std::vector<CriterionResult> all = run_criteria(opt);
  all.push_back(criterion_end_to_end(all, t.seconds()));
  return all;
}

}  // namespace zolo
