#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "zolo/connections.hpp"
#include "zolo/errors.hpp"

using namespace zolo;

namespace {
constexpr double kPi = std::numbers::pi;

// Real z whose Mobius images sweep a 32-point circle w = e^{i phi}.
std::vector<double> circle_abscissae(double ell) {
  std::vector<double> z;
  for (int k = 0; k < 32; ++k) {
    const double y = std::cos(kPi * (2.0 * k + 1.0) / 32.0);
    z.push_back(blaschke_point(ell, y));
  }
  return z;
}
}  // namespace

TEST_CASE("Blaschke parameters") {
  const BlaschkeProduct h1 = blaschke_h(1, 0.4);
  REQUIRE(h1.params.size() == 1);
  CHECK(std::abs(h1.params[0]) < 1e-15);
  for (int m = 1; m <= 6; ++m) {
    const BlaschkeProduct h = blaschke_h(m, 0.3);
    for (double c : h.params) CHECK(std::abs(c) < 1.0);
    // c_j = -c_{m+1-j}: the nodes are symmetric about K.
    for (int j = 0; j < m; ++j) CHECK(std::abs(h.params[j] + h.params[m - 1 - j]) < 1e-15);
    for (int k = 0; k < 64; ++k) CHECK(std::abs(std::abs(h(std::polar(1.0, 2 * kPi * k / 64))) - 1.0) < 1e-14);
  }
  // m = 2: cn(K/2)/dn(K/2) = 1/sqrt(1 + ell').
  const double ell = 0.36;
  const double expected = std::sqrt(ell) / std::sqrt(1.0 + std::sqrt(1.0 - ell * ell));
  CHECK(std::abs(blaschke_h(2, ell).params[0] - expected) < 1e-15);
  CHECK_THROWS_AS(blaschke_h(0, 0.5), DomainError);
  CHECK_THROWS_AS(blaschke_h(2, 1.0), DomainError);
}

TEST_CASE("ell tilde by two routes") {
  for (double ell : {0.05, 0.25, 0.5, 0.9})
    for (int m = 1; m <= 5; ++m) {
      const double a = blaschke_ell_tilde(m, ell);
      const double b = blaschke_ell_tilde_by_lambda(m, ell);
      CHECK(std::abs(a - b) <= 1e-12);
      CHECK(a > 0.0);
      CHECK(a < 1.0);
    }
  // Degree one leaves the modulus alone: Z_1 of the pair is ell itself.
  CHECK(std::abs(blaschke_ell_tilde(1, 0.3) - 0.3) < 1e-14);
}

TEST_CASE("h composition") {
  for (double ell : {0.25, 0.5, 0.9})
    for (auto [mt, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {1, 4}, {4, 1}}) {
      double worst = 0.0;
      for (const complex& z : verification_points(64)) worst = std::max(worst, compose_h(mt, m, ell, z).residual());
      CHECK(worst <= 1e-9);
      CHECK(compose_h(mt, m, ell, complex(0.2, -0.5)).residual() <= 1e-9);
    }
}

TEST_CASE("h relations to F_m and s_m") {
  const double kappa = blaschke_kappa(0.25);
  CHECK(std::abs(kappa - 1.0 / 9.0) < 1e-16);
  CHECK(std::acos(kappa) > 0.0);
  CHECK(std::acos(kappa) < kPi / 2);

  for (int m = 1; m <= 6; ++m) {
    // z = 1: x = 0, w = i and both sides vanish.
    const RealPair at_one = blaschke_s_relation(m, 0.25, 1.0);
    CHECK(std::abs(at_one.left) < 1e-15);
    CHECK(std::abs(at_one.right) < 1e-14);
  }
  for (double ell : {0.25, 0.6})
    for (int m = 1; m <= 5; ++m)
      for (double z : circle_abscissae(ell)) {
        const RealPair f = blaschke_F_relation(m, ell, z);
        const RealPair s = blaschke_s_relation(m, ell, z);
        CHECK(f.residual() <= 1e-9);
        CHECK(s.residual() <= 1e-9);
        CHECK(std::abs(f.right - s.right) <= 1e-9);
      }
}

TEST_CASE("Mobius branch") {
  CHECK_THROWS_AS(blaschke_s_relation(2, 0.25, complex(0.0, 1.0)), BranchError);
  CHECK_THROWS_AS(blaschke_F_relation(2, 0.25, -1.0), BranchError);
  // sqrt(kappa) = 1/3: z = -1.5 gives y = 5/3, z = -3 gives y = 2/3.
  CHECK_THROWS_AS(blaschke_s_relation(2, 0.25, -1.5), BranchError);
  CHECK_NOTHROW(blaschke_s_relation(2, 0.25, -3.0));
  CHECK_THROWS_AS(blaschke_point(0.25, 1.0 / 3.0), BranchError);
  for (double y : {-1.0, -0.4, 0.0, 0.7, 1.0}) CHECK(std::abs(blaschke_abscissa(0.25, blaschke_point(0.25, y)) - y) < 1e-14);
}

TEST_CASE("Pade approximant") {
  const PadeApproximant p0 = pade_p(0);
  CHECK(p0.numerator == std::vector<double>{1.0});
  CHECK(p0.denominator == std::vector<double>{1.0});
  CHECK(p0.poles.empty());

  const PadeApproximant p1 = pade_p(1);
  CHECK(p1.numerator == std::vector<double>{1.0 / 3.0, 1.0});
  CHECK(p1.denominator == std::vector<double>{1.0, 1.0 / 3.0});
  REQUIRE(p1.poles.size() == 1);
  CHECK(std::abs(p1.poles[0] + 3.0) < 1e-12);

  for (int n = 0; n <= 12; ++n) {
    const PadeApproximant p = pade_p(n);
    CHECK(p.denominator.front() == 1.0);
    CHECK(std::abs(p(1.0) - 1.0) < 1e-14);
    const std::vector<double> exact = pade_poles_exact(n);
    REQUIRE(p.poles.size() == exact.size());
    for (std::size_t j = 0; j < exact.size(); ++j) CHECK(std::abs(p.poles[j] - exact[j]) <= 1e-12 * std::max(1.0, std::abs(exact[j])));
    for (int k = 0; k < 16; ++k) CHECK(std::abs(std::abs(p(std::polar(1.0, 0.37 * k - 2.9))) - 1.0) < 1e-13);
    // Pade at 1: the error is O((z - 1)^(2n + 1)).
    const double d = 1e-3;
    CHECK(std::abs(p(1.0 + d).real() - std::sqrt(1.0 + d)) <= std::pow(d, 2 * n + 1) + 1e-15);
  }
  for (int n = 1; n <= 4; ++n) {
    const std::vector<double> exact = pade_poles_exact(n);
    const PadeApproximant p = pade_p(n);
    for (std::size_t j = 0; j < exact.size(); ++j) CHECK(std::abs(p.poles[j] - exact[j]) <= 1e-12);
  }
  CHECK_NOTHROW(pade_p(kMaxPadeDegree));
  CHECK_THROWS_AS(pade_p(kMaxPadeDegree + 1), DomainError);
  CHECK_THROWS_AS(pade_p(-1), DomainError);
}

TEST_CASE("r_n tends to p_n") {
  const std::vector<double> seq{0.3, 0.1, 0.03, 0.01, 0.003};
  for (int n = 1; n <= 4; ++n) {
    const std::vector<double> dev = pade_limit_check(n, seq);
    for (std::size_t k = 1; k < dev.size(); ++k) CHECK(dev[k] < dev[k - 1]);
    CHECK(pade_limit_check(n, {1e-3})[0] <= 1e-4);
    CHECK(pade_value_deviation(n, 1e-3) <= 1e-4);
  }
  CHECK(std::abs(coeff_a(1, 1, 1e-3) - 3.0) <= 1e-4);
  CHECK(pade_limit_check(0, seq) == std::vector<double>(seq.size(), 0.0));
  CHECK_THROWS_AS(pade_limit_check(2, {0.1, 0.2}), DomainError);
  CHECK_THROWS_AS(pade_limit_check(2, {0.1, 0.0}), DomainError);
}
