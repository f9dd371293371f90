#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "zolo/approximants.hpp"
#include "zolo/errors.hpp"

using namespace zolo;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<complex> random_circle(int count, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::vector<complex> out;
  for (int i = 0; i < count; ++i) out.push_back(std::polar(1.0, angle(gen)));
  return out;
}

std::vector<complex> uniform_circle(int count) {
  std::vector<complex> out;
  for (int i = 0; i < count; ++i) out.push_back(std::polar(1.0, 2 * kPi * (i + 0.5) / count));
  return out;
}

double phase(const DegreeReduction& r) { return std::atan2(r.lambda_comp, r.lambda); }
}  // namespace

TEST_CASE("ArcDomain membership") {
  const ArcDomain t{ArcKind::T, 0.4};
  CHECK(t.contains(std::polar(1.0, 0.4)));
  CHECK_FALSE(t.contains(std::polar(1.0, 0.4 + 1e-9)));
  CHECK(t.contains(std::polar(1.0, kPi - 0.3)));
  CHECK(t.contains(-1.0));
  CHECK_FALSE(t.contains(complex(0.0, 1.0)));
  CHECK_FALSE(t.contains(1.5));
  const ArcDomain s{ArcKind::S, 0.4};
  CHECK(s.contains(std::polar(1.0, -0.8)));
  CHECK_FALSE(s.contains(std::polar(1.0, 0.8 + 1e-9)));
  CHECK(t.arcs().size() == 2);
  CHECK(s.arcs().size() == 1);
}

TEST_CASE("admissible angle range") {
  CHECK_THROWS_AS(build_r(1, 0.0), DomainError);
  CHECK_THROWS_AS(build_s(2, kPi / 2), DomainError);
  CHECK_THROWS_AS(build_s(2, 5e-9), DomainError);
  CHECK_NOTHROW(build_s(2, 1e-8));
  CHECK_NOTHROW(build_s(2, kPi / 2 - 1e-8));
}

TEST_CASE("coeff_a") {
  for (double theta : {0.3, 1.0, 1.5}) {
    const double ell = std::cos(theta), ellc = std::sin(theta);
    const double u = complete_K(ellc) / 3.0;
    const JacobiTriple t = jacobi_sncndn(u, ellc);
    const double expected = std::pow((ell * t.sn + t.dn) / t.cn, 2);
    CHECK(std::abs(coeff_a(1, 1, theta) / expected - 1.0) < 1e-14);
  }
  for (int n = 1; n <= 6; ++n)
    for (int j = 1; j <= n; ++j) CHECK(coeff_a(j, n, 0.9) > 0.0);
  CHECK_THROWS_AS(coeff_a(0, 2, 1.0), DomainError);
  CHECK_THROWS_AS(coeff_a(3, 2, 1.0), DomainError);
}

TEST_CASE("coeff_a approaches tangent squares as theta -> 0") {
  for (int n = 1; n <= 4; ++n) {
    const double omega = kPi / (4 * n + 2);
    for (int j = 1; j <= n; ++j) {
      const int k = (j + n) % 2 == 0 ? n + j : n - j + 1;
      const double limit = std::pow(std::tan(k * omega), 2);
      CHECK(std::abs(coeff_a(j, n, 1e-4) / limit - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("build_r") {
  const UnimodularRational r0 = build_r(0, 0.8);
  CHECK(r0.factors().empty());
  CHECK(eval(r0, complex(0.3, 0.2)) == complex(1.0, 0.0));

  const UnimodularRational r1 = build_r(1, kPi / 3);
  REQUIRE(r1.factors().size() == 1);
  CHECK(r1.family() == Family::R);
  CHECK(r1.z_power() == 0);
  CHECK(r1.quarter_turns() == 0);
  // r_1(z^2) = z s_3(z) by the structural identity, with s_3 taken from the circle lift.
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const complex z = std::polar(1.0, 2 * kPi * (i + 0.25) / 100);
    worst = std::max(worst, std::abs(eval(r1, z * z) - z * eval_s_via_FG(3, kPi / 3, z)));
  }
  CHECK(worst < 1e-11);

  for (int n = 0; n <= 6; ++n) {
    const UnimodularRational r = build_r(n, 1.1);
    CHECK(std::abs(eval(r, 1.0) - 1.0) < 1e-15);
    for (const complex& z : random_circle(64, 7)) CHECK(std::abs(std::abs(eval(r, z)) - 1.0) < 1e-12);
  }
}

TEST_CASE("coeff_b") {
  CHECK(coeff_b(1, 1, 0.7) == FactorParam::finite(0.0));
  for (int n : {1, 3, 5}) CHECK(coeff_b(n + 1, 2 * n + 1, 0.9).is_infinite());
  for (int n : {2, 4}) {
    for (int j = 1; j <= n; ++j) {
      const FactorParam b = coeff_b(j, 2 * n + 1, 0.9);
      REQUIRE_FALSE(b.is_infinite());
      const double expected = (j % 2 == 0 ? 1.0 : -1.0) * std::sqrt(coeff_a(j, n, 0.9));
      CHECK(std::abs(b.value() / expected - 1.0) < 1e-13);
    }
    CHECK(coeff_b(n + 1, 2 * n + 1, 0.9) == FactorParam::finite(0.0));
  }
  CHECK_THROWS_AS(coeff_b(0, 3, 1.0), DomainError);
}

TEST_CASE("build_s basics") {
  const UnimodularRational s1 = build_s(1, 0.7);
  for (const complex& z : random_circle(16, 3)) CHECK(std::abs(eval(s1, z) - z) < 1e-15);
  CHECK(exact_type(s1) == std::pair<int, int>{1, 0});

  const UnimodularRational s0 = build_s(0, 0.7);
  CHECK(s0.factors().empty());
  CHECK(eval(s0, 0.5) == complex(0.0, 1.0));
  CHECK(std::abs(std::arg(eval(s0, 1.0))) == doctest::Approx(kPi / 2));

  for (int m = 0; m <= 8; ++m) {
    const UnimodularRational s = build_s(m, 1.05);
    CHECK(s.quarter_turns() == ((1 - m) % 4 + 4) % 4);
    CHECK(std::abs(eval(s, complex(0.0, 1.0)) - complex(0.0, 1.0)) < 1e-13);
  }
}

TEST_CASE("structural identity between s_{2n+1} and r_n") {
  for (double theta : {0.4, 1.2, kPi / 2 - 0.1}) {
    for (int n = 0; n <= 3; ++n) {
      const UnimodularRational st = build_s_tilde(n, theta);
      const UnimodularRational r = build_r(n, theta);
      double worst = 0.0;
      for (const complex& z : uniform_circle(256)) worst = std::max(worst, std::abs(eval(st, z) * eval(r, z * z) - z));
      CHECK(worst <= 1e-11);
    }
  }
  // Spot check at 100 random points, m = 3, theta = 1.2.
  const UnimodularRational s3 = build_s(3, 1.2);
  const UnimodularRational r1 = build_r(1, 1.2);
  for (const complex& z : random_circle(100, 11))
    CHECK(std::abs(1.0 / eval(s3, z) - z / eval(r1, z * z)) < 1e-11);
}

TEST_CASE("reciprocal") {
  const UnimodularRational i_const = build_s(0, 1.0);
  CHECK(eval(reciprocal(i_const), 2.0) == complex(0.0, -1.0));

  const UnimodularRational s1 = build_s(1, 1.0);
  const UnimodularRational inv = reciprocal(s1);
  CHECK(std::abs(eval(inv, complex(0.6, 0.8)) - 1.0 / complex(0.6, 0.8)) < 1e-15);
  CHECK(exact_type(inv) == std::pair<int, int>{0, 1});

  for (int m = 0; m <= 8; ++m) {
    const UnimodularRational s = build_s(m, 0.6);
    CHECK(reciprocal(reciprocal(s)) == s);
    for (const complex& z : uniform_circle(64)) CHECK(std::abs(eval(reciprocal(s), z) * eval(s, z) - 1.0) < 1e-12);
  }
  const UnimodularRational r = build_r(3, 0.6);
  CHECK(reciprocal(reciprocal(r)) == r);
}

TEST_CASE("eval at a pole") {
  const UnimodularRational r1 = build_r(1, 1.0);
  const double a = r1.factors()[0].param.value();
  try {
    eval(r1, -a);
    FAIL("expected a pole error");
  } catch (const PoleError& e) {
    CHECK(e.factor_index() == 0);
  }
  CHECK_THROWS_AS(eval(build_s(3, 1.0), 0.0), PoleError);  // the -1/z factor
  CHECK_THROWS_AS(eval(reciprocal(build_s(1, 1.0)), 0.0), PoleError);
}

TEST_CASE("exact types") {
  CHECK(exact_type(build_s(5, 1.0)) == std::pair<int, int>{5, 4});
  CHECK(exact_type(build_s(3, 1.0)) == std::pair<int, int>{2, 3});
  CHECK(exact_type(build_s(4, 1.0)) == std::pair<int, int>{4, 4});
  CHECK(exact_type(build_s(7, 1.0)) == std::pair<int, int>{6, 7});
  CHECK(exact_type(build_s(9, 1.0)) == std::pair<int, int>{9, 8});
  for (int n = 0; n <= 5; ++n) CHECK(exact_type(build_r(n, 1.0)) == std::pair<int, int>{n, n});
  const ZerosPoles zp = zeros_and_poles(build_r(2, 1.0));
  CHECK(zp.poles.size() == 2);
  CHECK(std::abs(zp.poles[0] + coeff_a(1, 2, 1.0)) < 1e-15);
}

TEST_CASE("unimodularity on 256 circle points") {
  double worst = 0.0;
  for (double theta : {0.05, 0.5, 1.0, 1.4, kPi / 2 - 0.01}) {
    for (int d = 0; d <= 8; ++d) {
      for (const UnimodularRational& r : {build_r(d, theta), build_s(d, theta), reciprocal(build_s(d, theta))}) {
        for (const complex& z : uniform_circle(256)) worst = std::max(worst, std::abs(std::abs(eval(r, z)) - 1.0));
      }
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("ZolotarevFraction special values") {
  for (double ell : {0.1, 0.5, 0.9}) {
    for (int m = 1; m <= 7; ++m) {
      const ZolotarevFraction zf = make_zolotarev(m, ell);
      const FGPair zero = eval_F_direct(zf, 0.0);
      CHECK(zero.F == 0.0);
      CHECK(zero.G == doctest::Approx(1.0).epsilon(1e-15));
      const FGPair at_ell = eval_F_direct(zf, ell);
      CHECK(std::abs(at_ell.F - zf.lambda()) < 1e-13);
      CHECK(std::abs(at_ell.G - zf.reduction().lambda_comp) < 1e-7);
      // Odd degree ends on (1, 0); even degree on (lambda, (-1)^(m/2) lambda').
      const FGPair at_one = eval_F_direct(zf, 1.0);
      const double g_end = m % 2 == 1 ? 0.0 : (m % 4 == 0 ? 1.0 : -1.0) * zf.reduction().lambda_comp;
      CHECK(std::abs(at_one.F - (m % 2 == 1 ? 1.0 : zf.lambda())) < 1e-12);
      CHECK(std::abs(at_one.G - g_end) < 1e-12);
    }
  }
  const ZolotarevFraction one = make_zolotarev(1, 0.4);
  for (double x : {-0.9, -0.2, 0.3, 0.8}) {
    CHECK(std::abs(eval_F_product(one, x).F - x) < 1e-15);
    CHECK(std::abs(eval_F_direct(one, x).F - x) < 1e-13);
  }
}

TEST_CASE("direct and product evaluation agree") {
  CHECK(std::abs(eval_F_direct(make_zolotarev(2, 0.5), 0.55).F - eval_F_product(make_zolotarev(2, 0.5), 0.55).F) < 1e-10);
  CHECK(std::abs(eval_F_direct(make_zolotarev(3, 0.5), 0.7).F - eval_F_product(make_zolotarev(3, 0.5), 0.7).F) < 1e-10);

  double worst = 0.0;
  for (double ell : {0.05, 0.3, 0.5, 0.8, 0.99}) {
    for (int m = 1; m <= 10; ++m) {
      const ZolotarevFraction zf = make_zolotarev(m, ell);
      for (int k = -500; k <= 500; ++k) {
        const double x = k / 500.0;
        const FGPair d = eval_F_direct(zf, x);
        const FGPair p = eval_F_product(zf, x);
        worst = std::max({worst, std::abs(d.F - p.F), std::abs(d.G - p.G)});
        CHECK(std::abs(zf.lambda() * zf.lambda() * (d.F / zf.lambda()) * (d.F / zf.lambda()) + d.G * d.G - 1.0) < 1e-12);
      }
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("F parity") {
  for (int m = 1; m <= 8; ++m) {
    const ZolotarevFraction zf = make_zolotarev(m, 0.35);
    for (double x = 0.0; x <= 1.0; x += 0.01) {
      const FGPair p = eval_F_product(zf, x), q = eval_F_product(zf, -x);
      CHECK(std::abs(p.F + q.F) <= 1e-12);
      CHECK(std::abs(p.G - q.G) <= 1e-12);
    }
  }
}

TEST_CASE("z4_solution") {
  const Z4Approximant one = z4_solution(1, 0.3);
  CHECK(std::abs(one(0.3) - 2 * 0.3 / 1.3) < 1e-15);
  CHECK(std::abs(one.max_deviation() - 0.7 / 1.3) < 1e-15);
  CHECK(std::abs(std::abs(one(0.3) - 1.0) - one.max_deviation()) < 1e-15);
  CHECK(std::abs(std::abs(one(1.0) - 1.0) - one.max_deviation()) < 1e-15);

  // Odd degree alternates between lambda and 1 at m + 1 points of [ell, 1].
  for (int m : {1, 3, 5}) {
    const double ell = 0.2;
    const Z4Approximant z4 = z4_solution(m, ell);
    const ZolotarevFraction& zf = z4.fraction();
    const Modulus comp = Modulus::of(ell).complementary();
    for (int j = 0; j <= m; ++j) {
      const double t = j * complete_K(comp) / m;
      const double x = ell / jacobi_sncndn(t, comp).dn;
      const double target = j % 2 == 0 ? zf.lambda() : 1.0;
      CHECK(std::abs(eval_F_product(zf, x).F - target) < 1e-11);
    }
    double lo = 2.0, hi = -2.0;
    for (int k = 0; k <= 2000; ++k) {
      const double x = ell + (1.0 - ell) * k / 2000.0;
      const double e = z4(x) - 1.0;
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    CHECK(std::abs(hi - z4.max_deviation()) < 1e-12);
    CHECK(std::abs(-lo - z4.max_deviation()) < 1e-12);
  }
  CHECK_THROWS_AS(z4_solution(0, 0.5), DomainError);
  CHECK_THROWS_AS(z4_solution(2, 1.0), DomainError);
}

TEST_CASE("circle lift agrees with the factored form") {
  for (double theta : {0.5, 1.0, 1.4, kPi / 2 - 0.1}) {
    for (int m = 1; m <= 8; ++m) {
      const UnimodularRational s = build_s(m, theta);
      const ZolotarevFraction zf(m, Modulus::from_angle(theta));
      double worst = 0.0;
      for (const complex& z : random_circle(100, 100 + m)) worst = std::max(worst, std::abs(eval(s, z) - eval_s_via_FG(zf, z)));
      for (const complex& z : {complex(0, 1), complex(0, -1), complex(-1, 0)})
        worst = std::max(worst, std::abs(eval(s, z) - eval_s_via_FG(zf, z)));
      CHECK(worst <= 1e-11);
    }
  }
  CHECK_THROWS_AS(eval_s_via_FG(3, 1.0, complex(1.1, 0.0)), DomainError);
  CHECK(std::abs(eval_s_via_FG(3, 1.0, 1.0) - 1.0) < 1e-14);
}

TEST_CASE("lift at the arc endpoint has phase arccos lambda") {
  for (int m = 1; m <= 8; ++m) {
    const double theta = 1.0;
    const complex v = eval_s_via_FG(m, theta, std::polar(1.0, theta));
    CHECK(std::abs(std::abs(v) - 1.0) < 1e-13);
    CHECK(std::abs(std::abs(std::arg(v)) - phase(solve_lambda(Modulus::from_angle(theta), m))) < 1e-12);
  }
}

TEST_CASE("conjugate and antipodal symmetry") {
  for (int m = 1; m <= 8; ++m) {
    const UnimodularRational s = build_s(m, 0.9);
    for (double t = 0.05; t < kPi; t += 0.1) {
      const complex p = eval(s, std::polar(1.0, t));
      const complex q = eval(s, std::polar(1.0, -t));
      CHECK(std::abs(-p - 1.0 / eval(s, std::polar(1.0, kPi - t))) < 1e-11);
      // Even m: both parts even in theta. Odd m: real part even, imaginary part odd.
      CHECK(std::abs(p.real() - q.real()) < 1e-12);
      CHECK(std::abs(p.imag() - (m % 2 == 0 ? 1.0 : -1.0) * q.imag()) < 1e-12);
    }
  }
}

TEST_CASE("product evaluation of F stays finite at high degree and small ell") {
  const ZolotarevFraction zf = make_zolotarev(256, 1e-3);
  for (double x : {1e-3, 0.01, 0.3, 0.9, 1.0}) {
    const FGPair p = eval_F_product(zf, x);
    REQUIRE(std::isfinite(p.F));
    CHECK(std::abs(p.F - eval_F_direct(zf, x).F) <= 1e-12);
  }
}
