#pragma once

// Composition laws: s_mt(s_m(z; theta); theta~) = s_{mt m}(z; theta), its
// s-tilde and r_n counterparts, and the real law for F_m.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "zolo/approximants.hpp"

namespace zolo {

/// Seed of the fixed pseudo-random verification points.
inline constexpr std::uint64_t kVerificationSeed = 0x5EED;
inline constexpr std::size_t kRandomVerificationPoints = 64;

struct CompositionPlan {
  int inner_degree = 0;
  int outer_degree = 0;
  double theta = 0.0;
  double theta_tilde = 0.0;
  int target_degree = 0;
};

/// arccos(lambda_m) for ell = cos(theta), by the atan2(lambda', lambda) chain.
double theta_tilde(int m, double theta);
/// |arg s_m(e^{i theta}; theta)| from the factored form. Consistency check only.
double theta_tilde_by_arg(int m, double theta);

CompositionPlan plan_composition(int m_tilde, int m, double theta);

struct ComplexPair {
  complex left;
  complex right;
  double residual() const { return std::abs(left - right); }
};

struct RealPair {
  double left = 0.0;
  double right = 0.0;
  double residual() const { return std::abs(left - right); }
};

/// Both sides of a composition law, with the approximants built once.
class SComposition {
 public:
  SComposition(int m_tilde, int m, double theta);
  const CompositionPlan& plan() const { return plan_; }
  complex composed(complex z) const;
  ComplexPair operator()(complex z) const;

 private:
  CompositionPlan plan_;
  UnimodularRational inner_, outer_, direct_;
};

/// s~_{2nt+1}(s~_{2n+1}(z; theta); theta~) against s~_{(2nt+1)(2n+1)}(z; theta).
class STildeComposition {
 public:
  STildeComposition(int n_tilde, int n, double theta);
  const CompositionPlan& plan() const { return plan_; }
  ComplexPair operator()(complex z) const;

 private:
  CompositionPlan plan_;
  UnimodularRational inner_, outer_, direct_;
};

/// r_n(z; theta) r_nt(z / r_n(z; theta)^2; theta~) against r_{2 nt n + nt + n}(z; theta).
class RComposition {
 public:
  RComposition(int n_tilde, int n, double theta);
  double theta_tilde() const { return theta_tilde_; }
  int target_degree() const { return static_cast<int>(direct_.factors().size()); }
  ComplexPair operator()(complex z) const;

 private:
  double theta_tilde_;
  UnimodularRational inner_, outer_, direct_;
};

/// F_mt(F_m(x; ell); lambda_m) against F_{mt m}(x; ell), all via the product form.
class FComposition {
 public:
  FComposition(int m_tilde, int m, double ell);
  double ell_tilde() const { return inner_.lambda(); }
  RealPair operator()(double x) const;

 private:
  ZolotarevFraction inner_, outer_, direct_;
};

ComplexPair compose_s(int m_tilde, int m, double theta, complex z);
ComplexPair compose_s_tilde(int n_tilde, int n, double theta, complex z);
ComplexPair compose_r(int n_tilde, int n, double theta, complex z);
RealPair compose_F(int m_tilde, int m, double ell, double x);

/// Chebyshev-spaced angles theta_k = pi cos((2k - 1) pi / (2N)) followed by the
/// 64 seeded pseudo-random points. Total count is chebyshev_count + 64.
std::vector<complex> verification_points(std::size_t chebyshev_count);
/// Chebyshev points of [-1, 1] plus both endpoints.
std::vector<double> verification_abscissae(std::size_t count);

struct ResidualReport {
  double max_residual = 0.0;
  std::size_t points = 0;
};

ResidualReport max_residual(const std::function<ComplexPair(complex)>& law, const std::vector<complex>& points);
ResidualReport max_residual(const std::function<RealPair(double)>& law, const std::vector<double>& points);

}  // namespace zolo
