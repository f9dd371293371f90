#pragma once

// Unimodular rational approximants to sqrt(z) and sign(z) on arcs of the unit
// circle, and Zolotarev's real sign approximant F_m they are lifted from.
//
// Approximants are kept in factored form throughout. r_n is a product of
// (1 + a z)/(z + a) with a > 0, s_m is i^(1-m) times a product of
// (z - i b)/(1 + i b z) with real b (b = infinity denoting -1/z), and the
// Blaschke products of the connections module use (z - c)/(1 - c z).

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "zolo/elliptic.hpp"

namespace zolo {

using complex = std::complex<double>;

/// Smallest admissible Theta and distance from pi/2. Both cos(Theta) and
/// sin(Theta) must stay above this so neither quarter period blows up.
inline constexpr double kMinModulus = 1e-8;

/// Validates Theta and returns (cos Theta, sin Theta). Throws DomainError.
Modulus admissible_angle(double theta);

enum class ArcKind { S, T };

/// S: the arc |arg z| <= 2 Theta. T: the two arcs |arg(+-z)| <= Theta.
struct ArcDomain {
  ArcKind kind = ArcKind::S;
  double theta = 0.0;

  bool contains(complex z, double tol = 1e-13) const;
  /// Angular intervals [lo, hi] covered by the domain.
  std::vector<std::pair<double, double>> arcs() const;
};

/// A real number or unsigned infinity.
class FactorParam {
 public:
  constexpr FactorParam() = default;
  static constexpr FactorParam finite(double v) { return FactorParam(v, false); }
  static constexpr FactorParam infinity() { return FactorParam(0.0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Precondition: !is_infinite().
  constexpr double value() const { return value_; }

  friend constexpr bool operator==(const FactorParam&, const FactorParam&) = default;

 private:
  constexpr FactorParam(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_ = 0.0;
  bool infinite_ = false;
};

enum class Family {
  R,  ///< (1 + a z) / (z + a)
  S,  ///< (z - i b) / (1 + i b z)
  H,  ///< (z - c) / (1 - c z)
};

struct Factor {
  FactorParam param;
  bool inverted = false;  ///< factor appears as its reciprocal

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct ZerosPoles {
  std::vector<complex> zeros;
  std::vector<complex> poles;
};

/// i^quarter_turns * z^z_power * prod factors, evaluated in stored order.
class UnimodularRational {
 public:
  UnimodularRational() = default;
  UnimodularRational(Family family, int z_power, int quarter_turns, std::vector<Factor> factors);

  Family family() const { return family_; }
  int z_power() const { return z_power_; }
  int quarter_turns() const { return quarter_turns_; }
  const std::vector<Factor>& factors() const { return factors_; }

  complex operator()(complex z) const;

  friend bool operator==(const UnimodularRational&, const UnimodularRational&) = default;

 private:
  Family family_ = Family::R;
  int z_power_ = 0;
  int quarter_turns_ = 0;
  std::vector<Factor> factors_;
};

/// Throws PoleError naming the factor when a denominator vanishes.
complex eval(const UnimodularRational& r, complex z);

/// 1/R, factor by factor. Involutive.
UnimodularRational reciprocal(const UnimodularRational& r);

/// Finite zeros and poles after cancelling coincident pairs.
ZerosPoles zeros_and_poles(const UnimodularRational& r);

/// (numerator degree, denominator degree) in lowest terms.
std::pair<int, int> exact_type(const UnimodularRational& r);

/// a_j of the optimal sqrt approximant of degree n.
double coeff_a(int j, int n, double theta);
/// b_j of the optimal sign approximant of degree m, including (-1)^(mj).
FactorParam coeff_b(int j, int m, double theta);

/// Optimal unimodular approximant to sqrt(z) on S_Theta.
UnimodularRational build_r(int n, double theta);
/// Optimal unimodular approximant to sign(z) on T_Theta (the other optimum is
/// its reciprocal).
UnimodularRational build_s(int m, double theta);
/// s_{2n+1}^((-1)^n) = z / r_n(z^2).
UnimodularRational build_s_tilde(int n, double theta);

struct FGPair {
  double F = 0.0;
  double G = 1.0;
};

/// F_m(x; ell) = lambda sn(sn^-1(x/ell, ell)/M, lambda) and G_m = dn(same, lambda),
/// with the nodal data for the rational product form precomputed.
class ZolotarevFraction {
 public:
  ZolotarevFraction(int m, Modulus ell);

  int m() const { return m_; }
  const EllipticModulus& modulus() const { return modulus_; }
  const DegreeReduction& reduction() const { return reduction_; }
  double lambda() const { return reduction_.lambda; }

  /// cn^2/sn^2 at the odd nodes v_1, v_3, ... (modulus ell').
  const std::vector<double>& odd_cs2() const { return odd_cs2_; }
  /// dn^2 at the odd nodes.
  const std::vector<double>& odd_dn2() const { return odd_dn2_; }
  /// cn^2/sn^2 at the even nodes v_2, v_4, ... up to the truncation point.
  const std::vector<double>& even_cs2() const { return even_cs2_; }

 private:
  int m_;
  EllipticModulus modulus_;
  DegreeReduction reduction_;
  std::vector<double> odd_cs2_;
  std::vector<double> odd_dn2_;
  std::vector<double> even_cs2_;
};

ZolotarevFraction make_zolotarev(int m, double ell);

/// Elliptic evaluation. |x| <= ell goes through the real inverse; on
/// ell < |x| <= 1 the inverse sits on K + i t and the value comes from the
/// imaginary-period identities, still in real arithmetic.
FGPair eval_F_direct(const ZolotarevFraction& zf, double x);
/// Same, with 1 - x^2 supplied by the caller (keeps precision near |x| = 1).
FGPair eval_F_direct(const ZolotarevFraction& zf, double x, double one_minus_x2);

/// Rational product form in s = x/ell. F is defined for every real x; G needs
/// |x| <= 1 when m is odd (it carries a sqrt(1 - x^2) factor).
FGPair eval_F_product(const ZolotarevFraction& zf, double x);

/// Zolotarev's minimax approximant (2/(1+lambda)) F_m(x; ell) to sign(x) on
/// [-1, -ell] U [ell, 1].
class Z4Approximant {
 public:
  explicit Z4Approximant(ZolotarevFraction zf) : zf_(std::move(zf)) {}

  double operator()(double x) const;
  double lambda() const { return zf_.lambda(); }
  double scale() const { return 2.0 / (1.0 + zf_.lambda()); }
  /// (1 - lambda) / (1 + lambda)
  double max_deviation() const;
  const ZolotarevFraction& fraction() const { return zf_; }

 private:
  ZolotarevFraction zf_;
};

Z4Approximant z4_solution(int m, double ell);

/// s_m(z) = F(x) + i sign(Im z)^m G(x), x = (z + 1/z)/2, for |z| = 1.
/// sign(0) is taken as +1.
complex eval_s_via_FG(const ZolotarevFraction& zf, complex z);
complex eval_s_via_FG(int m, double theta, complex z);

}  // namespace zolo
