#pragma once

// Real-argument elliptic special functions.
//
// Everything here is parametrised by the pair (k, k') rather than by k alone:
// near k = 1 the complement cannot be recovered from k without cancellation,
// and the approximant constructions need both ends of that range.

#include <vector>

namespace zolo {

/// A modulus together with its complement k' = sqrt(1 - k^2).
struct Modulus {
  double k = 0.0;
  double kc = 1.0;

  /// From k in [0, 1).
  static Modulus of(double k);
  /// From k' in (0, 1].
  static Modulus from_complement(double kc);
  /// k = cos(theta), k' = sin(theta) for theta in [0, pi/2].
  static Modulus from_angle(double theta);

  Modulus complementary() const { return {kc, k}; }
};

/// A modulus with its quarter periods, Grötzsch value and growth rate.
struct EllipticModulus {
  double ell = 0.0;
  double ell_comp = 1.0;
  double K = 0.0;       ///< K(ell)
  double K_comp = 0.0;  ///< K(ell')
  double mu = 0.0;      ///< (pi/2) K(ell') / K(ell)
  double rho = 1.0;     ///< exp(pi K(ell) / K(ell'))

  static EllipticModulus from_modulus(double ell);
  static EllipticModulus from_complement(double ell_comp);
  static EllipticModulus from_angle(double theta);
  static EllipticModulus from_pair(Modulus m);

  Modulus modulus() const { return {ell, ell_comp}; }
  /// log(rho), available without overflow.
  double log_rho() const;
};

/// The (m, ell) -> lambda data of the degree equation
/// K(ell)/K(ell') = K(lambda) / (m K(lambda')).
struct DegreeReduction {
  int m = 0;
  double lambda = 0.0;
  double lambda_comp = 1.0;
  double M = 1.0;   ///< K(ell) / K(lambda); 1 when m == 0
  double nu = 0.0;  ///< 1 / mu(ell)
  /// v_j = (j/m) K(ell') for j = 1..2m-1; empty when m <= 1.
  std::vector<double> nodes;

  Modulus reduced() const { return {lambda, lambda_comp}; }
};

struct JacobiTriple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

/// K(ell) by the arithmetic-geometric mean. Throws DomainError unless 0 <= ell < 1.
double complete_K(double ell);
double complete_K(Modulus m);

/// sn, cn, dn by descending Landen transformation.
JacobiTriple jacobi_sncndn(double u, double ell);
JacobiTriple jacobi_sncndn(double u, Modulus m);

/// Carlson's symmetric integral R_F(x, y, z), at most one argument zero.
double carlson_rf(double x, double y, double z);

/// The u in [-K, K] with sn(u) = x, for |x| <= 1.
double inverse_sn(double x, double ell);
double inverse_sn(double x, Modulus m);

/// u = sn * R_F(cn^2, dn^2, 1): the inverse with all three squares supplied,
/// so callers holding an accurate cn^2 near the quarter period keep full
/// precision.
double inverse_jacobi(double sn, double cn_sq, double dn_sq);

/// Grötzsch ring function (pi/2) K(ell') / K(ell), for 0 < ell < 1.
double groetzsch_mu(double ell);
double groetzsch_mu(Modulus m);

/// ell with groetzsch_mu(ell) == v, v > 0.
double mu_inverse(double v);
/// As mu_inverse but returns both ell and ell', each to full relative precision.
Modulus mu_inverse_pair(double v);

/// Solves the degree equation. lambda == 0 when m == 0, lambda == ell when m == 1.
DegreeReduction solve_lambda(double ell, int m);
DegreeReduction solve_lambda(Modulus ell, int m);

}  // namespace zolo
