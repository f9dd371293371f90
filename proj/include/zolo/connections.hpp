#pragma once

// Links to neighbouring objects: the Blaschke products h_m of Ng and Tsang and
// their relation to F_m and s_m, and the Pade approximant p_n of sqrt(z) that
// r_n tends to as Theta -> 0.

#include <vector>

#include "zolo/approximants.hpp"
#include "zolo/composition.hpp"

namespace zolo {

/// h_m(z; ell) = prod (z - c_j)/(1 - c_j z).
struct BlaschkeProduct {
  int m = 0;
  double ell = 0.0;
  std::vector<double> params;
  UnimodularRational rational;

  complex operator()(complex z) const { return eval(rational, z); }
};

/// c_j = sqrt(ell) cn(u_j, ell) / dn(u_j, ell), u_j = (2j - 1) K(ell) / m.
BlaschkeProduct blaschke_h(int m, double ell);

/// ((1 - sqrt(ell)) / (1 + sqrt(ell)))^2.
double blaschke_kappa(double ell);

/// The modulus ell~ with h_mt(h_m(z; ell); ell~) = h_{mt m}(z; ell): the
/// Zolotarev number of [-sqrt(ell), sqrt(ell)] against |x| >= 1/sqrt(ell),
/// which is Z_m for the symmetric pair with modulus kappa.
double blaschke_ell_tilde(int m, double ell);
/// Same value through lambda = F_m(kappa; kappa): ((1 - sqrt(lambda)) / (1 + sqrt(lambda)))^2.
double blaschke_ell_tilde_by_lambda(int m, double ell);

ComplexPair compose_h(int m_tilde, int m, double ell, complex z);

/// sqrt(kappa) (z - 1)/(z + 1). Throws BranchError outside [-1, 1] or at z = -1.
double blaschke_abscissa(double ell, complex z);
/// The real z with blaschke_abscissa(ell, z) = y. Throws BranchError at y = sqrt(kappa).
double blaschke_point(double ell, double y);

/// ((1 - ell~)/(1 + ell~)) (h - 1)/(h + 1) against (2/(1 + F_m(kappa; kappa))) F_m(x; kappa).
RealPair blaschke_F_relation(int m, double ell, complex z);
/// Same left side against (s_m(w; Phi) + 1/s_m(w; Phi)) / (1 + F_m(kappa; kappa)),
/// cos Phi = kappa, (w + 1/w)/2 = x, taking the root w with Im w >= 0.
RealPair blaschke_s_relation(int m, double ell, complex z);

/// p_n(z) = sum C(N, 2j) z^j / sum C(N, 2j + 1) z^j, N = 2n + 1, scaled so the
/// denominator constant is 1. Coefficients ascend in powers of z.
struct PadeApproximant {
  int n = 0;
  std::vector<double> numerator;
  std::vector<double> denominator;
  std::vector<double> poles;  ///< ascending

  complex operator()(complex z) const;
};

/// Largest n whose binomials fit in 64 bits.
inline constexpr int kMaxPadeDegree = 30;

PadeApproximant pade_p(int n);

/// -tan^2(j pi / (2n + 1)), j = 1..n, ascending.
std::vector<double> pade_poles_exact(int n);

/// For each Theta, max_j |sorted(-a_j(Theta)) - sorted(poles of p_n)|.
/// theta_seq must be positive and strictly decreasing.
std::vector<double> pade_limit_check(int n, const std::vector<double>& theta_seq);

/// max |r_n(z; Theta) - p_n(z)| over 16 fixed circle points.
double pade_value_deviation(int n, double theta);

}  // namespace zolo
