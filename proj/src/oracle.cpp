#include "zolo/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

namespace zolo::oracle {

namespace {

constexpr double kQuadTol = 1e-12;

OracleResult integrate_first_kind(double phi, double ell) {
  long calls = 0;
  const double k2 = ell * ell;
  auto f = [&](double t) {
    ++calls;
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - k2 * s * s);
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, 0.0, phi, 15, 1e-14, &error);
  if (!(error <= kQuadTol))
    throw std::runtime_error("oracle quadrature missed its tolerance");
  return {value, error, calls};
}

double wrap(double x) { return std::remainder(x, 2 * std::numbers::pi); }

double degree1_error_at(double a, double t) {
  return wrap(2.0 * std::atan2(a * std::sin(t), 1.0 + a * std::cos(t)) - 1.5 * t);
}

template <class F>
double golden_max(F f, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

OracleResult oracle_K(double ell) {
  if (!(ell >= 0.0 && ell <= 1.0 - 1e-6))
    throw std::domain_error("oracle_K: modulus must lie in [0, 1 - 1e-6]");
  if (ell <= 0.9) return integrate_first_kind(std::numbers::pi / 2, ell);

  // Near ell = 1 the integrand peaks at pi/2. With tan(theta) = e^s the
  // integral becomes int e^s ((1 + e^2s)(1 + ell'^2 e^2s))^(-1/2) ds, smooth
  // over [-40, log(1/ell') + 40] with tails below 1e-17.
  const double kc2 = (1.0 - ell) * (1.0 + ell);
  long calls = 0;
  auto f = [&](double s) {
    ++calls;
    const double e2 = std::exp(2.0 * s);
    return std::exp(s) / std::sqrt((1.0 + e2) * (1.0 + kc2 * e2));
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, -40.0, 40.0 - 0.5 * std::log(kc2), 15, 1e-14, &error);
  if (!(error <= kQuadTol))
    throw std::runtime_error("oracle quadrature missed its tolerance");
  return {value, error, calls};
}

OracleResult oracle_F(double phi, double ell) {
  if (!(ell >= 0.0 && ell <= 1.0 - 1e-6))
    throw std::domain_error("oracle_F: modulus must lie in [0, 1 - 1e-6]");
  if (phi == 0.0) return {0.0, 0.0, 0};
  return integrate_first_kind(phi, ell);
}

OracleResult oracle_amplitude(double u, double ell) {
  if (!(ell >= 0.0 && ell <= 1.0 - 1e-6))
    throw std::domain_error("oracle_amplitude: modulus must lie in [0, 1 - 1e-6]");
  if (u == 0.0) return {0.0, 0.0, 0};

  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 1>;
  long calls = 0;
  const double k2 = ell * ell;
  auto rhs = [&](const State& x, State& dxdt, double) {
    ++calls;
    const double s = std::sin(x[0]);
    dxdt[0] = std::sqrt(1.0 - k2 * s * s);
  };
  const double span = std::abs(u);
  auto solve = [&](double tol) {
    State x{0.0};
    ode::integrate_adaptive(
        ode::make_controlled(tol, tol, ode::runge_kutta_fehlberg78<State>()), rhs, x, 0.0,
        span, 1e-3);
    return x[0];
  };
  const double coarse = solve(1e-14);
  const double fine = solve(1e-16);
  const double error = std::abs(fine - coarse);
  if (!(error <= 1e-12)) throw std::runtime_error("oracle_amplitude: step control failed");
  return {u < 0 ? -fine : fine, error, calls};
}

OracleResult oracle_sn(double u, double ell) {
  const OracleResult K = oracle_K(ell);
  if (std::abs(u) > 2.0 * K.value + 1e-12)
    throw std::domain_error("oracle_sn: |u| must not exceed 2K");
  OracleResult phi = oracle_amplitude(u, ell);
  phi.value = std::sin(phi.value);
  return phi;
}

double degree1_phase_error(double a, double theta) {
  // Odd in t, so [0, 2 theta] suffices.
  const double end = 2.0 * theta;
  constexpr int kSamples = 256;
  std::array<double, kSamples + 1> e{};
  for (int i = 0; i <= kSamples; ++i) e[i] = std::abs(degree1_error_at(a, end * i / kSamples));
  double best = std::max(e[0], e[kSamples]);
  for (int i = 1; i < kSamples; ++i) {
    if (e[i] >= e[i - 1] && e[i] >= e[i + 1]) {
      const double lo = end * (i - 1) / kSamples, hi = end * (i + 1) / kSamples;
      best = std::max(best, golden_max([&](double t) { return std::abs(degree1_error_at(a, t)); },
                                       lo, hi));
    }
  }
  return best;
}

Degree1Scan oracle_minimax_degree1(double theta, std::size_t search_grid) {
  if (search_grid < 10000) throw std::domain_error("oracle_minimax_degree1: grid below 1e4");
  if (!(theta > 0.0 && theta < std::numbers::pi / 2))
    throw std::domain_error("oracle_minimax_degree1: theta must lie in (0, pi/2)");

  const double log_lo = std::log(1e-3), log_hi = std::log(1e6);
  const double step = (log_hi - log_lo) / static_cast<double>(search_grid - 1);
  std::vector<double> err(search_grid);
  std::size_t best = 0;
  for (std::size_t i = 0; i < search_grid; ++i) {
    err[i] = degree1_phase_error(std::exp(log_lo + step * static_cast<double>(i)), theta);
    if (err[i] < err[best]) best = i;
  }

  int sign_changes = 0;
  int last = 0;
  for (std::size_t i = 1; i < search_grid; ++i) {
    const double d = err[i] - err[i - 1];
    const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s != 0 && last != 0 && s != last) ++sign_changes;
    if (s != 0) last = s;
  }

  Degree1Scan scan;
  scan.grid_size = search_grid;
  scan.grid_argmin = std::exp(log_lo + step * static_cast<double>(best));
  scan.cell_ratio = std::exp(step);
  scan.unimodal = sign_changes == 1;

  // Golden-section on the cell pair around the discrete minimum.
  double lo = log_lo + step * (static_cast<double>(best) - 1.0);
  double hi = log_lo + step * (static_cast<double>(best) + 1.0);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double t) { return degree1_phase_error(std::exp(t), theta); };
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-13) {
    if (f1 > f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  scan.refined_argmin = std::exp(0.5 * (lo + hi));
  scan.min_error = f(0.5 * (lo + hi));
  return scan;
}

}  // namespace zolo::oracle
