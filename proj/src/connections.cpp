#include "zolo/connections.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include "zolo/analysis.hpp"
#include "zolo/errors.hpp"

namespace zolo {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ell(double ell) {
  if (!(ell > 0.0 && ell < 1.0)) throw DomainError("blaschke: ell must lie in (0, 1)");
}

void require_degree(int m) {
  if (m < 1) throw DomainError("blaschke: degree must be at least 1");
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  // r stays an exact binomial at each step, so the division is exact.
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

template <class T>
T horner(const std::vector<double>& c, T z) {
  T acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double polish_root(const std::vector<double>& c, double x) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  for (int it = 0; it < 8; ++it) {
    const double step = horner(c, x) / horner(d, x);
    x -= step;
    if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

double lhs_factor(double ell_tilde) { return (1.0 - ell_tilde) / (1.0 + ell_tilde); }

}  // namespace

BlaschkeProduct blaschke_h(int m, double ell) {
  require_degree(m);
  require_ell(ell);
  BlaschkeProduct h;
  h.m = m;
  h.ell = ell;
  const double K = complete_K(ell);
  const double root = std::sqrt(ell);
  std::vector<Factor> factors;
  for (int j = 1; j <= m; ++j) {
    const JacobiTriple t = jacobi_sncndn((2.0 * j - 1.0) / m * K, ell);
    const double c = root * t.cn / t.dn;
    h.params.push_back(c);
    factors.push_back({FactorParam::finite(c), false});
  }
  h.rational = UnimodularRational(Family::H, 0, 0, std::move(factors));
  return h;
}

double blaschke_kappa(double ell) {
  require_ell(ell);
  const double root = std::sqrt(ell);
  const double q = (1.0 - root) / (1.0 + root);
  return q * q;
}

double blaschke_ell_tilde(int m, double ell) {
  require_degree(m);
  return zolotarev_number(m, EllipticModulus::from_modulus(blaschke_kappa(ell)));
}

double blaschke_ell_tilde_by_lambda(int m, double ell) {
  require_degree(m);
  const double lambda = solve_lambda(blaschke_kappa(ell), m).lambda;
  const double root = std::sqrt(lambda);
  const double q = (1.0 - root) / (1.0 + root);
  return q * q;
}

ComplexPair compose_h(int m_tilde, int m, double ell, complex z) {
  const BlaschkeProduct inner = blaschke_h(m, ell);
  const BlaschkeProduct outer = blaschke_h(m_tilde, blaschke_ell_tilde(m, ell));
  const BlaschkeProduct direct = blaschke_h(m_tilde * m, ell);
  return {outer(inner(z)), direct(z)};
}

double blaschke_abscissa(double ell, complex z) {
  const double root_kappa = std::sqrt(blaschke_kappa(ell));
  if (z.imag() != 0.0) throw BranchError("blaschke: z must be real for a unit-circle w");
  if (z.real() == -1.0) throw BranchError("blaschke: z = -1 maps to infinity");
  double y = root_kappa * (z.real() - 1.0) / (z.real() + 1.0);
  // Round trips through blaschke_point land a few ulps past +-1.
  if (std::abs(y) > 1.0 && std::abs(y) <= 1.0 + 1e-14) y = std::copysign(1.0, y);
  if (!(std::abs(y) <= 1.0)) throw BranchError("blaschke: Mobius image " + message_number(y) + " leaves [-1, 1]");
  return y;
}

double blaschke_point(double ell, double y) {
  const double root_kappa = std::sqrt(blaschke_kappa(ell));
  if (!(std::abs(y) <= 1.0)) throw BranchError("blaschke_point: y must lie in [-1, 1]");
  if (y == root_kappa) throw BranchError("blaschke_point: y = sqrt(kappa) maps to infinity");
  return (root_kappa + y) / (root_kappa - y);
}

RealPair blaschke_F_relation(int m, double ell, complex z) {
  const double x = blaschke_abscissa(ell, z);
  const double kappa = blaschke_kappa(ell);
  const complex h = blaschke_h(m, ell)(z);
  const ZolotarevFraction zf(m, Modulus::of(kappa));
  const double left = lhs_factor(blaschke_ell_tilde(m, ell)) * ((h - 1.0) / (h + 1.0)).real();
  const double right = 2.0 / (1.0 + zf.lambda()) * eval_F_direct(zf, x).F;
  return {left, right};
}

RealPair blaschke_s_relation(int m, double ell, complex z) {
  const double x = blaschke_abscissa(ell, z);
  const double kappa = blaschke_kappa(ell);
  const complex h = blaschke_h(m, ell)(z);
  const complex w(x, std::sqrt(std::max(0.0, 1.0 - x * x)));
  const complex s = eval(build_s(m, std::acos(kappa)), w);
  const double lambda = solve_lambda(kappa, m).lambda;
  const double left = lhs_factor(blaschke_ell_tilde(m, ell)) * ((h - 1.0) / (h + 1.0)).real();
  return {left, (s + 1.0 / s).real() / (1.0 + lambda)};
}

complex PadeApproximant::operator()(complex z) const { return horner(numerator, z) / horner(denominator, z); }

PadeApproximant pade_p(int n) {
  if (n < 0 || n > kMaxPadeDegree)
    throw DomainError("pade_p: n must lie in [0, " + std::to_string(kMaxPadeDegree) + "]");
  PadeApproximant p;
  p.n = n;
  const int N = 2 * n + 1;
  const double scale = static_cast<double>(N);
  for (int j = 0; j <= n; ++j) {
    p.numerator.push_back(static_cast<double>(binomial(N, 2 * j)) / scale);
    p.denominator.push_back(static_cast<double>(binomial(N, 2 * j + 1)) / scale);
  }
  if (n == 0) return p;
  Eigen::VectorXd coeffs(n + 1);
  for (int j = 0; j <= n; ++j) coeffs(j) = p.denominator[static_cast<std::size_t>(j)];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
  for (const auto& r : solver.roots()) p.poles.push_back(polish_root(p.denominator, r.real()));
  std::sort(p.poles.begin(), p.poles.end());
  return p;
}

std::vector<double> pade_poles_exact(int n) {
  std::vector<double> out;
  for (int j = 1; j <= n; ++j) {
    const double t = std::tan(j * kPi / (2.0 * n + 1.0));
    out.push_back(-t * t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> pade_limit_check(int n, const std::vector<double>& theta_seq) {
  for (std::size_t k = 0; k < theta_seq.size(); ++k) {
    if (!(theta_seq[k] > 0.0)) throw DomainError("pade_limit_check: thetas must be positive");
    if (k > 0 && !(theta_seq[k] < theta_seq[k - 1]))
      throw DomainError("pade_limit_check: thetas must decrease strictly");
  }
  const std::vector<double> poles = pade_p(n).poles;
  std::vector<double> out;
  for (double theta : theta_seq) {
    std::vector<double> neg_a;
    for (int j = 1; j <= n; ++j) neg_a.push_back(-coeff_a(j, n, theta));
    std::sort(neg_a.begin(), neg_a.end());
    double dev = 0.0;
    for (std::size_t j = 0; j < neg_a.size(); ++j) dev = std::max(dev, std::abs(neg_a[j] - poles[j]));
    out.push_back(dev);
  }
  return out;
}

double pade_value_deviation(int n, double theta) {
  const UnimodularRational r = build_r(n, theta);
  const PadeApproximant p = pade_p(n);
  double dev = 0.0;
  for (int k = 0; k < 16; ++k) {
    const complex z = std::polar(1.0, kPi * (2.0 * k + 1.0) / 16.0 - kPi);
    dev = std::max(dev, std::abs(eval(r, z) - p(z)));
  }
  return dev;
}

}  // namespace zolo
