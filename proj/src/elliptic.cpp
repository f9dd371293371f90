#include "zolo/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zolo/errors.hpp"

namespace zolo {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = std::numbers::pi / 2;
constexpr int kMaxLandenDepth = 24;

void require_modulus(Modulus m, const char* where) {
  // k may round to 1 when the pair is carried through kc; kc > 0 is what counts.
  if (!(m.k >= 0.0 && m.k <= 1.0 && m.kc > 0.0 && m.kc <= 1.0))
    throw DomainError(std::string(where) + ": modulus must lie in [0, 1)");
}

// Arithmetic-geometric mean of 1 and b, b in (0, 1].
double agm1(double b) {
  double a = 1.0;
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= 4 * kEps * a) break;
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return a;
}

}  // namespace

Modulus Modulus::of(double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw DomainError("modulus ell must lie in [0, 1), got " + message_number(k));
  return {k, std::sqrt((1.0 - k) * (1.0 + k))};
}

Modulus Modulus::from_complement(double kc) {
  if (!(kc > 0.0 && kc <= 1.0))
    throw DomainError("complementary modulus must lie in (0, 1], got " + message_number(kc));
  return {std::sqrt((1.0 - kc) * (1.0 + kc)), kc};
}

Modulus Modulus::from_angle(double theta) {
  if (!(theta >= 0.0 && theta <= kHalfPi))
    throw DomainError("modular angle must lie in [0, pi/2], got " + message_number(theta));
  return {std::cos(theta), std::sin(theta)};
}

EllipticModulus EllipticModulus::from_pair(Modulus m) {
  if (!(m.k > 0.0 && m.k <= 1.0 && m.kc > 0.0 && m.kc <= 1.0))
    throw DomainError("elliptic modulus must lie strictly inside (0, 1)");
  EllipticModulus e;
  e.ell = m.k;
  e.ell_comp = m.kc;
  e.K = kHalfPi / agm1(m.kc);
  e.K_comp = kHalfPi / agm1(m.k);
  e.mu = kHalfPi * e.K_comp / e.K;
  e.rho = std::exp(std::numbers::pi * e.K / e.K_comp);
  return e;
}

EllipticModulus EllipticModulus::from_modulus(double ell) { return from_pair(Modulus::of(ell)); }

EllipticModulus EllipticModulus::from_complement(double ell_comp) {
  return from_pair(Modulus::from_complement(ell_comp));
}

EllipticModulus EllipticModulus::from_angle(double theta) {
  return from_pair(Modulus::from_angle(theta));
}

double EllipticModulus::log_rho() const { return std::numbers::pi * K / K_comp; }

double complete_K(Modulus m) {
  require_modulus(m, "complete_K");
  return kHalfPi / agm1(m.kc);
}

double complete_K(double ell) {
  if (!(ell >= 0.0 && ell < 1.0))
    throw DomainError("complete_K: modulus must lie in [0, 1), got " + message_number(ell));
  return complete_K(Modulus::of(ell));
}

// Bulirsch's descending Landen scheme: run the AGM of (1, k') down to a
// circular function, then climb back up through the stored sequence.
JacobiTriple jacobi_sncndn(double u, Modulus m) {
  require_modulus(m, "jacobi_sncndn");
  if (!std::isfinite(u)) throw DomainError("jacobi_sncndn: argument must be finite");

  std::array<double, kMaxLandenDepth + 1> as{};
  std::array<double, kMaxLandenDepth + 1> bs{};
  double a = 1.0;
  double b = m.kc;
  double c = 1.0;
  int depth = 0;
  for (;;) {
    as[depth] = a;
    bs[depth] = b;
    c = 0.5 * (a + b);
    if (std::abs(a - b) <= 4 * kEps * a) break;
    if (++depth > kMaxLandenDepth)
      throw ConvergenceError("jacobi_sncndn: Landen recursion exceeded its depth cap");
    b = std::sqrt(a * b);
    a = c;
  }

  const double w = u * c;
  JacobiTriple t{std::sin(w), std::cos(w), 1.0};
  if (t.sn == 0.0) return t;

  double ratio = t.cn / t.sn;
  c *= ratio;
  for (int i = depth; i >= 0; --i) {
    ratio *= c;
    c *= t.dn;
    t.dn = (bs[i] + ratio) / (as[i] + ratio);
    ratio = c / as[i];
  }
  const double s = 1.0 / std::sqrt(c * c + 1.0);
  t.sn = t.sn >= 0.0 ? s : -s;
  t.cn = c * t.sn;
  return t;
}

JacobiTriple jacobi_sncndn(double u, double ell) { return jacobi_sncndn(u, Modulus::of(ell)); }

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0)
    throw DomainError("carlson_rf: arguments must be nonnegative");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1)
    throw DomainError("carlson_rf: at most one argument may vanish");

  constexpr double kTol = 8e-4;  // truncation error ~ kTol^6
  double mean = 0.0;
  double dx = 0.0, dy = 0.0, dz = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    mean = (x + y + z) / 3.0;
    dx = (mean - x) / mean;
    dy = (mean - y) / mean;
    dz = (mean - z) / mean;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) <= kTol) break;
  }
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mean);
}

double inverse_jacobi(double sn, double cn_sq, double dn_sq) {
  return sn * carlson_rf(cn_sq, dn_sq, 1.0);
}

double inverse_sn(double x, Modulus m) {
  require_modulus(m, "inverse_sn");
  if (!(std::abs(x) <= 1.0)) throw DomainError("inverse_sn: |x| must not exceed 1");
  const double cn_sq = (1.0 - x) * (1.0 + x);
  const double dn_sq = m.kc * m.kc + m.k * m.k * cn_sq;
  return inverse_jacobi(x, cn_sq, dn_sq);
}

double inverse_sn(double x, double ell) { return inverse_sn(x, Modulus::of(ell)); }

double groetzsch_mu(Modulus m) {
  if (!(m.k > 0.0 && m.k <= 1.0 && m.kc > 0.0 && m.kc <= 1.0))
    throw DomainError("groetzsch_mu: modulus must lie strictly inside (0, 1)");
  return kHalfPi * agm1(m.kc) / agm1(m.k);
}

double groetzsch_mu(double ell) {
  if (!(ell > 0.0 && ell < 1.0))
    throw DomainError("groetzsch_mu: modulus must lie strictly inside (0, 1)");
  return groetzsch_mu(Modulus::of(ell));
}

namespace {

// Solves mu(k) = target for target >= pi/2, i.e. k <= 1/sqrt(2). Works in
// t = log k so that very small moduli keep relative accuracy. Newton steps
// use mu'(k) = -pi^2 / (4 k k'^2 K(k)^2) and fall back to bisection whenever
// a step leaves the bracket.
double solve_mu_small_modulus(double target) {
  if (target > 700.0)
    throw DomainError("mu_inverse: argument too large, modulus would underflow");

  auto mu_at = [](double t) {
    const Modulus m = Modulus::of(std::exp(t));
    return groetzsch_mu(m);
  };
  auto slope_at = [](double t) {
    const Modulus m = Modulus::of(std::exp(t));
    const double K = kHalfPi / agm1(m.kc);
    return -std::numbers::pi * std::numbers::pi / (4.0 * m.kc * m.kc * K * K);
  };

  // mu(k) <= log(4/k), so the root sits at or below k = 4 exp(-target).
  double hi = std::min(std::log(4.0) - target, std::log(std::numbers::sqrt2 / 2));
  double lo = hi - 1.0;
  while (mu_at(lo) < target) {
    hi = lo;
    lo -= 1.0;
  }

  const double tol = std::max(1e-13, 16 * kEps * target);
  double t = hi;
  double f = mu_at(t) - target;
  for (int i = 0; i < 200; ++i) {
    if (std::abs(f) <= tol * 0.25 || hi - lo <= 1e-15) break;
    if (f > 0.0)
      lo = t;
    else
      hi = t;
    double next = t - f / slope_at(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
    f = mu_at(t) - target;
  }
  if (std::abs(f) > tol)
    throw ConvergenceError("mu_inverse: residual " + message_number(f) +
                           " above tolerance for argument " + message_number(target));
  return std::exp(t);
}

}  // namespace

Modulus mu_inverse_pair(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("mu_inverse: argument must be positive");
  // mu(k) mu(k') = (pi/2)^2 lets every solve happen on the small-modulus side.
  if (v >= kHalfPi) {
    const double k = solve_mu_small_modulus(v);
    return {k, std::sqrt((1.0 - k) * (1.0 + k))};
  }
  const double kc = solve_mu_small_modulus(kHalfPi * kHalfPi / v);
  return {std::sqrt((1.0 - kc) * (1.0 + kc)), kc};
}

double mu_inverse(double v) { return mu_inverse_pair(v).k; }

DegreeReduction solve_lambda(Modulus ell, int m) {
  if (!(ell.k > 0.0 && ell.k <= 1.0 && ell.kc > 0.0 && ell.kc <= 1.0))
    throw DomainError("solve_lambda: modulus must lie strictly inside (0, 1)");
  if (m < 0) throw DomainError("solve_lambda: degree must be nonnegative");

  DegreeReduction r;
  r.m = m;
  const double mu = groetzsch_mu(ell);
  r.nu = 1.0 / mu;
  if (m == 0) return r;  // lambda = 0, lambda' = 1, M = 1

  Modulus lambda = ell;
  if (m > 1) lambda = mu_inverse_pair(mu / m);
  r.lambda = lambda.k;
  r.lambda_comp = lambda.kc;
  r.M = m == 1 ? 1.0 : agm1(lambda.kc) / agm1(ell.kc);

  if (m > 1) {
    const double K_comp = kHalfPi / agm1(ell.k);
    r.nodes.reserve(2 * static_cast<std::size_t>(m) - 1);
    for (int j = 1; j <= 2 * m - 1; ++j) r.nodes.push_back(j * K_comp / m);
  }
  return r;
}

DegreeReduction solve_lambda(double ell, int m) {
  if (!(ell > 0.0 && ell < 1.0))
    throw DomainError("solve_lambda: modulus must lie strictly inside (0, 1)");
  return solve_lambda(Modulus::of(ell), m);
}

}  // namespace zolo
