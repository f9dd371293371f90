#include "zolo/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zolo/errors.hpp"

namespace zolo {

namespace {

constexpr complex kI{0.0, 1.0};
constexpr double kPoleFloor = 1e-300;

complex i_power(int q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct Ratio {
  complex num;
  complex den;
};

Ratio factor_ratio(Family family, const Factor& f, complex z) {
  Ratio r;
  if (f.param.is_infinite()) {
    switch (family) {
      case Family::R: r = {z, 1.0}; break;
      case Family::S: r = {-1.0, z}; break;
      case Family::H: r = {1.0, z}; break;
    }
  } else {
    const double p = f.param.value();
    switch (family) {
      case Family::R: r = {1.0 + p * z, z + p}; break;
      case Family::S: r = {z - kI * p, 1.0 + kI * p * z}; break;
      case Family::H: r = {z - p, 1.0 - p * z}; break;
    }
  }
  if (f.inverted) std::swap(r.num, r.den);
  return r;
}

// The ratio (ell sn + dn)/cn at fraction * K(ell') with modulus ell'.
double node_base(double fraction, Modulus th) {
  const Modulus comp = th.complementary();
  const double u = fraction * complete_K(comp);
  const JacobiTriple t = jacobi_sncndn(u, comp);
  return (th.k * t.sn + t.dn) / t.cn;
}

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Modulus admissible_angle(double theta) {
  if (!(theta >= kMinModulus && theta <= std::numbers::pi / 2 - kMinModulus))
    throw DomainError("theta = " + message_number(theta) +
                      " outside the admissible range [1e-8, pi/2 - 1e-8]");
  return Modulus::from_angle(theta);
}

bool ArcDomain::contains(complex z, double tol) const {
  if (std::abs(std::abs(z) - 1.0) > tol) return false;
  const double t = std::abs(std::arg(z));
  if (kind == ArcKind::S) return t <= 2.0 * theta + tol;
  return t <= theta + tol || std::numbers::pi - t <= theta + tol;
}

std::vector<std::pair<double, double>> ArcDomain::arcs() const {
  if (kind == ArcKind::S) return {{-2.0 * theta, 2.0 * theta}};
  return {{-theta, theta}, {std::numbers::pi - theta, std::numbers::pi + theta}};
}

UnimodularRational::UnimodularRational(Family family, int z_power, int quarter_turns,
                                       std::vector<Factor> factors)
    : family_(family),
      z_power_(z_power),
      quarter_turns_(((quarter_turns % 4) + 4) % 4),
      factors_(std::move(factors)) {}

complex UnimodularRational::operator()(complex z) const { return eval(*this, z); }

complex eval(const UnimodularRational& r, complex z) {
  complex value = i_power(r.quarter_turns());
  if (r.z_power() < 0 && std::abs(z) < kPoleFloor)
    throw PoleError("pole at z = 0 from the z-power", PoleError::npos);
  for (int k = 0; k < std::abs(r.z_power()); ++k) value = r.z_power() > 0 ? value * z : value / z;

  const auto& factors = r.factors();
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const Ratio q = factor_ratio(r.family(), factors[j], z);
    if (std::abs(q.den) < kPoleFloor)
      throw PoleError("pole of factor " + std::to_string(j), j);
    value *= q.num / q.den;
  }
  return value;
}

UnimodularRational reciprocal(const UnimodularRational& r) {
  std::vector<Factor> factors = r.factors();
  for (Factor& f : factors) f.inverted = !f.inverted;
  return UnimodularRational(r.family(), -r.z_power(), -r.quarter_turns(), std::move(factors));
}

ZerosPoles zeros_and_poles(const UnimodularRational& r) {
  ZerosPoles raw;
  for (int k = 0; k < std::abs(r.z_power()); ++k)
    (r.z_power() > 0 ? raw.zeros : raw.poles).push_back(0.0);

  for (const Factor& f : r.factors()) {
    std::vector<complex> zeros, poles;
    if (f.param.is_infinite()) {
      (r.family() == Family::R ? zeros : poles).push_back(0.0);
    } else {
      const double p = f.param.value();
      switch (r.family()) {
        case Family::R:
          if (p == 0.0) {
            poles.push_back(0.0);
          } else {
            zeros.push_back(-1.0 / p);
            poles.push_back(-p);
          }
          break;
        case Family::S:
          zeros.push_back(kI * p);
          if (p != 0.0) poles.push_back(kI / p);
          break;
        case Family::H:
          zeros.push_back(p);
          if (p != 0.0) poles.push_back(1.0 / p);
          break;
      }
    }
    if (f.inverted) std::swap(zeros, poles);
    raw.zeros.insert(raw.zeros.end(), zeros.begin(), zeros.end());
    raw.poles.insert(raw.poles.end(), poles.begin(), poles.end());
  }

  ZerosPoles out;
  std::vector<bool> used(raw.poles.size(), false);
  for (const complex& z : raw.zeros) {
    bool cancelled = false;
    for (std::size_t k = 0; k < raw.poles.size(); ++k) {
      if (used[k]) continue;
      if (std::abs(z - raw.poles[k]) <= 1e-12 * std::max(1.0, std::abs(z))) {
        used[k] = true;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) out.zeros.push_back(z);
  }
  for (std::size_t k = 0; k < raw.poles.size(); ++k)
    if (!used[k]) out.poles.push_back(raw.poles[k]);
  return out;
}

std::pair<int, int> exact_type(const UnimodularRational& r) {
  const ZerosPoles zp = zeros_and_poles(r);
  return {static_cast<int>(zp.zeros.size()), static_cast<int>(zp.poles.size())};
}

double coeff_a(int j, int n, double theta) {
  if (n < 1 || j < 1 || j > n) throw DomainError("coeff_a: need 1 <= j <= n");
  const Modulus th = admissible_angle(theta);
  const double base = node_base(static_cast<double>(2 * j - 1) / (2 * n + 1), th);
  const double sq = base * base;
  return parity_sign(j + n) > 0 ? sq : 1.0 / sq;
}

FactorParam coeff_b(int j, int m, double theta) {
  if (m < 1 || j < 1 || j > m) throw DomainError("coeff_b: need 1 <= j <= m");
  const Modulus th = admissible_angle(theta);
  const bool reciprocal_power = parity_sign(j) < 0;
  // cn vanishes at the quarter period: the base is infinite there.
  if (2 * j - 1 == m) return reciprocal_power ? FactorParam::finite(0.0) : FactorParam::infinity();
  const double base = node_base(static_cast<double>(2 * j - 1) / m, th);
  const double value = parity_sign(m * j) * (reciprocal_power ? 1.0 / base : base);
  return FactorParam::finite(value);
}

UnimodularRational build_r(int n, double theta) {
  if (n < 0) throw DomainError("build_r: degree must be nonnegative");
  admissible_angle(theta);
  std::vector<Factor> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) factors.push_back({FactorParam::finite(coeff_a(j, n, theta))});
  return UnimodularRational(Family::R, 0, 0, std::move(factors));
}

UnimodularRational build_s(int m, double theta) {
  if (m < 0) throw DomainError("build_s: degree must be nonnegative");
  admissible_angle(theta);
  std::vector<Factor> factors;
  factors.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) factors.push_back({coeff_b(j, m, theta)});
  return UnimodularRational(Family::S, 0, 1 - m, std::move(factors));
}

UnimodularRational build_s_tilde(int n, double theta) {
  if (n < 0) throw DomainError("build_s_tilde: degree must be nonnegative");
  UnimodularRational s = build_s(2 * n + 1, theta);
  return n % 2 == 0 ? s : reciprocal(s);
}

ZolotarevFraction::ZolotarevFraction(int m, Modulus ell)
    : m_(m), modulus_(EllipticModulus::from_pair(ell)), reduction_(solve_lambda(ell, m)) {
  if (m < 0) throw DomainError("ZolotarevFraction: degree must be nonnegative");
  if (m < 2) return;
  const Modulus comp = ell.complementary();
  for (int j = 1; j < m; ++j) {
    const JacobiTriple t = jacobi_sncndn(reduction_.nodes[static_cast<std::size_t>(j - 1)], comp);
    const double cs2 = (t.cn * t.cn) / (t.sn * t.sn);
    if (j % 2 == 1) {
      odd_cs2_.push_back(cs2);
      odd_dn2_.push_back(t.dn * t.dn);
    } else {
      even_cs2_.push_back(cs2);
    }
  }
  // The even-node product stops before v_m = K(ell') for even m.
  even_cs2_.resize(static_cast<std::size_t>((m - 1) / 2));
  odd_cs2_.resize(static_cast<std::size_t>(m / 2));
  odd_dn2_.resize(static_cast<std::size_t>(m / 2));
}

ZolotarevFraction make_zolotarev(int m, double ell) { return ZolotarevFraction(m, Modulus::of(ell)); }

FGPair eval_F_direct(const ZolotarevFraction& zf, double x, double one_minus_x2) {
  if (!(std::abs(x) <= 1.0)) throw DomainError("eval_F_direct: |x| must not exceed 1");
  if (zf.m() == 0) return {0.0, 1.0};

  const EllipticModulus& em = zf.modulus();
  const DegreeReduction& red = zf.reduction();
  const double ell = em.ell, ell_c = em.ell_comp;
  const double sign = std::signbit(x) ? -1.0 : 1.0;
  const double ax = std::abs(x);

  if (ax <= ell) {
    const double s = ax / ell;
    const double cn_sq = (ell - ax) * (ell + ax) / (ell * ell);
    const double u = inverse_jacobi(s, cn_sq, one_minus_x2);
    const JacobiTriple t = jacobi_sncndn(u / red.M, red.reduced());
    return {sign * red.lambda * t.sn, t.dn};
  }

  // sn(K + i t, ell) = 1/dn(t, ell'), so x/ell = 1/dn(t, ell') with t in [0, K(ell')].
  const double x2l2 = ax * ax * ell_c * ell_c;
  const double sn_sq = (ax - ell) * (ax + ell) / x2l2;
  const double cn_sq = ell * ell * one_minus_x2 / x2l2;
  const double dn_sq = (ell * ell) / (ax * ax);
  const double t = inverse_jacobi(std::sqrt(std::min(sn_sq, 1.0)), cn_sq, dn_sq);
  const JacobiTriple w = jacobi_sncndn(t / red.M, red.reduced().complementary());
  // sn(K + i v, lambda) = 1/dn(v, lambda'), dn(K + i v, lambda) = lambda' cn(v, lambda')/dn(v, lambda').
  return {sign * red.lambda / w.dn, red.lambda_comp * w.cn / w.dn};
}

FGPair eval_F_direct(const ZolotarevFraction& zf, double x) {
  return eval_F_direct(zf, x, (1.0 - x) * (1.0 + x));
}

FGPair eval_F_product(const ZolotarevFraction& zf, double x) {
  if (!std::isfinite(x)) throw DomainError("eval_F_product: x must be finite");
  if (zf.m() == 0) return {0.0, 1.0};

  const int m = zf.m();
  const DegreeReduction& red = zf.reduction();
  const double s = x / zf.modulus().ell;
  const double s2 = s * s;

  // Numerator and denominator pair up factor by factor; separately they
  // overflow at high degree and small ell.
  double ratio = 1.0;
  double g = 1.0;
  const std::vector<double>& even = zf.even_cs2();
  const std::vector<double>& odd = zf.odd_cs2();
  for (std::size_t k = 0; k < std::max(even.size(), odd.size()); ++k) {
    const double n = k < even.size() ? 1.0 + s2 * even[k] : 1.0;
    if (k < odd.size()) {
      const double d = 1.0 + s2 * odd[k];
      ratio *= n / d;
      g *= (1.0 - s2 * zf.odd_dn2()[k]) / d;
    } else {
      ratio *= n;
    }
  }
  if (m % 2 == 1) {
    const double q = (1.0 - x) * (1.0 + x);
    if (q < 0.0) throw DomainError("eval_F_product: G needs |x| <= 1 for odd degree");
    g *= std::sqrt(q);
  }
  return {red.lambda * s / red.M * ratio, g};
}

double Z4Approximant::operator()(double x) const { return scale() * eval_F_product(zf_, x).F; }

double Z4Approximant::max_deviation() const {
  const double lambda = zf_.lambda();
  return (1.0 - lambda) / (1.0 + lambda);
}

Z4Approximant z4_solution(int m, double ell) {
  if (m < 1) throw DomainError("z4_solution: degree must be at least 1");
  if (!(ell > kMinModulus && ell < 1.0 - kMinModulus))
    throw DomainError("ell = " + message_number(ell) + " outside (1e-8, 1 - 1e-8)");
  return Z4Approximant(make_zolotarev(m, ell));
}

complex eval_s_via_FG(const ZolotarevFraction& zf, complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12)
    throw DomainError("eval_s_via_FG: z must lie on the unit circle");
  const double x = std::clamp(0.5 * (z + 1.0 / z).real(), -1.0, 1.0);
  const double y = z.imag();
  const FGPair fg = eval_F_direct(zf, x, std::min(y * y, 1.0));
  const double sign = (y < 0.0 && zf.m() % 2 == 1) ? -1.0 : 1.0;
  return {fg.F, sign * fg.G};
}

complex eval_s_via_FG(int m, double theta, complex z) {
  if (m < 0) throw DomainError("eval_s_via_FG: degree must be nonnegative");
  return eval_s_via_FG(ZolotarevFraction(m, admissible_angle(theta)), z);
}

}  // namespace zolo
