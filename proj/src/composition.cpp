#include "zolo/composition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "zolo/analysis.hpp"
#include "zolo/errors.hpp"

namespace zolo {

namespace {

constexpr double kPi = std::numbers::pi;

// NaN counts as an infinite residual so a broken evaluation cannot pass.
double worse(double current, double e) {
  return std::isnan(e) ? std::numeric_limits<double>::infinity() : std::max(current, e);
}

void require_positive(int d, const char* what) {
  if (d < 1) throw DomainError(std::string(what) + ": degrees must be at least 1");
}

int checked_degree(int m_tilde, int m) {
  require_positive(std::min(m_tilde, m), "compose_F");
  return m;
}

}  // namespace

double theta_tilde(int m, double theta) { return optimal_phase_error(m, theta); }

double theta_tilde_by_arg(int m, double theta) {
  return std::abs(std::arg(eval(build_s(m, theta), std::polar(1.0, theta))));
}

CompositionPlan plan_composition(int m_tilde, int m, double theta) {
  require_positive(std::min(m_tilde, m), "plan_composition");
  CompositionPlan p;
  p.inner_degree = m;
  p.outer_degree = m_tilde;
  p.theta = theta;
  p.theta_tilde = theta_tilde(m, theta);
  p.target_degree = m_tilde * m;
  return p;
}

SComposition::SComposition(int m_tilde, int m, double theta)
    : plan_(plan_composition(m_tilde, m, theta)),
      inner_(build_s(m, theta)),
      outer_(build_s(m_tilde, plan_.theta_tilde)),
      direct_(build_s(m_tilde * m, theta)) {}

complex SComposition::composed(complex z) const { return eval(outer_, eval(inner_, z)); }

ComplexPair SComposition::operator()(complex z) const { return {composed(z), eval(direct_, z)}; }

STildeComposition::STildeComposition(int n_tilde, int n, double theta)
    : plan_(plan_composition(2 * n_tilde + 1, 2 * n + 1, theta)),
      inner_(build_s_tilde(n, theta)),
      outer_(build_s_tilde(n_tilde, plan_.theta_tilde)),
      direct_() {
  if (n < 0 || n_tilde < 0) throw DomainError("compose_s_tilde: degrees must be nonnegative");
  // (2nt + 1)(2n + 1) = 2N + 1 with N = 2 nt n + nt + n.
  direct_ = build_s_tilde(2 * n_tilde * n + n_tilde + n, theta);
}

ComplexPair STildeComposition::operator()(complex z) const {
  return {eval(outer_, eval(inner_, z)), eval(direct_, z)};
}

RComposition::RComposition(int n_tilde, int n, double theta)
    : theta_tilde_(0.0) {
  if (n < 0 || n_tilde < 0) throw DomainError("compose_r: degrees must be nonnegative");
  theta_tilde_ = zolo::theta_tilde(2 * n + 1, theta);
  inner_ = build_r(n, theta);
  outer_ = build_r(n_tilde, theta_tilde_);
  direct_ = build_r(2 * n_tilde * n + n_tilde + n, theta);
}

ComplexPair RComposition::operator()(complex z) const {
  const complex rn = eval(inner_, z);
  return {rn * eval(outer_, z / (rn * rn)), eval(direct_, z)};
}

FComposition::FComposition(int m_tilde, int m, double ell)
    : inner_(checked_degree(m_tilde, m), Modulus::of(ell)),
      outer_(m_tilde, inner_.reduction().reduced()),
      direct_(m_tilde * m, Modulus::of(ell)) {}

RealPair FComposition::operator()(double x) const {
  if (!(std::abs(x) <= 1.0)) throw DomainError("compose_F: x must lie in [-1, 1]");
  // |F_m| <= 1 on [-1, 1]; rounding can step past the endpoint.
  const double inner = std::clamp(eval_F_product(inner_, x).F, -1.0, 1.0);
  return {eval_F_product(outer_, inner).F, eval_F_product(direct_, x).F};
}

ComplexPair compose_s(int m_tilde, int m, double theta, complex z) { return SComposition(m_tilde, m, theta)(z); }

ComplexPair compose_s_tilde(int n_tilde, int n, double theta, complex z) {
  return STildeComposition(n_tilde, n, theta)(z);
}

ComplexPair compose_r(int n_tilde, int n, double theta, complex z) { return RComposition(n_tilde, n, theta)(z); }

RealPair compose_F(int m_tilde, int m, double ell, double x) { return FComposition(m_tilde, m, ell)(x); }

std::vector<complex> verification_points(std::size_t chebyshev_count) {
  std::vector<complex> out;
  out.reserve(chebyshev_count + kRandomVerificationPoints);
  const double n = static_cast<double>(chebyshev_count);
  for (std::size_t k = 1; k <= chebyshev_count; ++k)
    out.push_back(std::polar(1.0, kPi * std::cos((2.0 * k - 1.0) * kPi / (2.0 * n))));
  // Angles from the raw 64-bit stream, so every platform draws the same points.
  std::mt19937_64 gen(kVerificationSeed);
  for (std::size_t k = 0; k < kRandomVerificationPoints; ++k) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    out.push_back(std::polar(1.0, kPi * (2.0 * u - 1.0)));
  }
  return out;
}

std::vector<double> verification_abscissae(std::size_t count) {
  std::vector<double> out{-1.0};
  const double n = static_cast<double>(count);
  for (std::size_t k = count; k >= 1; --k) out.push_back(std::cos((2.0 * k - 1.0) * kPi / (2.0 * n)));
  out.push_back(1.0);
  return out;
}

ResidualReport max_residual(const std::function<ComplexPair(complex)>& law, const std::vector<complex>& points) {
  ResidualReport r;
  for (const complex& z : points) r.max_residual = worse(r.max_residual, law(z).residual());
  r.points = points.size();
  return r;
}

ResidualReport max_residual(const std::function<RealPair(double)>& law, const std::vector<double>& points) {
  ResidualReport r;
  for (double x : points) r.max_residual = worse(r.max_residual, law(x).residual());
  r.points = points.size();
  return r;
}

}  // namespace zolo
