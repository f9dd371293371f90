#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "zolo/analysis.hpp"
#include "zolo/composition.hpp"
#include "zolo/errors.hpp"

using namespace zolo;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNearEdge = kPi / 2 - 0.01;
}  // namespace

TEST_CASE("theta_tilde") {
  CHECK(std::abs(theta_tilde(1, 0.8) - 0.8) < 1e-15);
  CHECK(std::abs(theta_tilde(0, 0.8) - kPi / 2) < 1e-15);
  for (double theta : {0.3, 1.0, 1.4, kNearEdge}) {
    for (int m = 1; m <= 8; ++m) {
      const double t = theta_tilde(m, theta);
      CHECK(std::abs(t - theta_tilde_by_arg(m, theta)) <= 1e-11);
      if (m > 1) CHECK(t < theta);
      const CompositionPlan p = plan_composition(2, m, theta);
      CHECK(p.theta_tilde == t);
      CHECK(p.target_degree == 2 * m);
    }
  }
  const DegreeReduction r3 = solve_lambda(Modulus::from_angle(kNearEdge), 3);
  CHECK(std::abs(theta_tilde(3, kNearEdge) - std::acos(r3.lambda)) < 1e-11);
}

TEST_CASE("theta_tilde chains through the degree") {
  for (double theta : {0.6, 1.2, kNearEdge})
    for (int m : {1, 2, 3})
      for (int mt : {1, 2, 3, 4}) {
        const double inner = theta_tilde(m, theta);
        CHECK(std::abs(theta_tilde(mt, inner) - theta_tilde(mt * m, theta)) <= 1e-10);
      }
}

TEST_CASE("compose_s") {
  const std::vector<complex> pts = verification_points(136);
  CHECK(pts.size() == 200);
  // Identity laws.
  for (int k = 1; k <= 5; ++k) {
    CHECK(max_residual(SComposition(1, k, 1.0), pts).max_residual <= 1e-13);
    CHECK(max_residual(SComposition(k, 1, 1.0), pts).max_residual <= 1e-13);
  }
  CHECK(max_residual(SComposition(2, 3, 1.0), pts).max_residual <= 1e-9);
  CHECK(max_residual(SComposition(3, 3, kNearEdge), pts).max_residual <= 1e-9);
  for (double theta : {1.0, kNearEdge})
    for (auto [mt, m] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 5}})
      CHECK(max_residual(SComposition(mt, m, theta), pts).max_residual <= 1e-9);

  const ComplexPair one = compose_s(2, 2, 0.9, std::polar(1.0, 0.3));
  CHECK(one.residual() <= 1e-9);
  CHECK_THROWS_AS(compose_s(0, 2, 0.9, 1.0), DomainError);
}

TEST_CASE("compose_s is associative") {
  const std::vector<complex> pts = verification_points(64);
  for (double theta : {1.0, kNearEdge}) {
    for (auto [a, b, c] : {std::tuple{2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
      const double t1 = theta_tilde(a, theta);
      const UnimodularRational sa = build_s(a, theta);
      const UnimodularRational sbc = build_s(b * c, t1);
      const UnimodularRational sab = build_s(a * b, theta);
      const UnimodularRational sc = build_s(c, theta_tilde(a * b, theta));
      double worst = 0.0;
      for (const complex& z : pts) {
        const complex left = eval(sbc, eval(sa, z));
        const complex right = eval(sc, eval(sab, z));
        worst = std::max(worst, std::abs(left - right));
      }
      CHECK(worst <= 5e-9);
    }
  }
}

TEST_CASE("composed map equioscillates m_tilde m + 1 times per arc") {
  for (auto [mt, m] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    const SComposition c(mt, m, 1.0);
    const PhaseErrorReport rep = phase_error([&c](complex z) { return c.composed(z); }, Problem::Z6, mt * m, 1.0, 2048);
    for (const ArcAlternation& a : rep.arcs) CHECK(a.count == mt * m + 1);
    CHECK(std::abs(rep.max_error - optimal_phase_error(mt * m, 1.0)) <= 1e-9);
  }
}

TEST_CASE("compose_s_tilde") {
  const std::vector<complex> pts = verification_points(136);
  for (const complex& z : pts) {
    const ComplexPair p = compose_s_tilde(0, 0, 1.2, z);
    CHECK(std::abs(p.left - z) < 1e-15);
    CHECK(std::abs(p.right - z) < 1e-15);
  }
  CHECK(max_residual(STildeComposition(1, 1, 1.2), pts).max_residual <= 1e-9);
  CHECK(max_residual(STildeComposition(2, 1, 0.7), pts).max_residual <= 1e-9);
  for (int n = 0; n <= 3; ++n)
    CHECK(STildeComposition(1, n, 1.2).plan().theta_tilde == theta_tilde(2 * n + 1, 1.2));
}

TEST_CASE("compose_r") {
  const std::vector<complex> pts = verification_points(136);
  // n = 0: r_0 = 1 and theta~ = theta, so both sides are r_nt(z; theta).
  const RComposition zero(3, 0, 1.1);
  CHECK(zero.theta_tilde() == doctest::Approx(1.1).epsilon(1e-15));
  CHECK(max_residual(zero, pts).max_residual <= 1e-13);

  for (auto [nt, n] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    const RComposition c(nt, n, 1.0);
    CHECK(c.target_degree() == 2 * nt * n + nt + n);
    CHECK(max_residual(c, pts).max_residual <= 1e-9);
  }
  CHECK(RComposition(1, 1, 1.0).target_degree() == 4);
  // Off the circle the law is an identity of rational functions.
  CHECK(compose_r(1, 1, 1.0, complex(0.3, 0.4)).residual() <= 1e-9);
}

TEST_CASE("compose_F") {
  const std::vector<double> xs = verification_abscissae(200);
  for (double x : xs) {
    const RealPair p = compose_F(3, 1, 0.4, x);
    CHECK(std::abs(p.left - p.right) < 1e-14);
  }
  CHECK(compose_F(2, 2, 0.5, 0.8).residual() <= 1e-10);
  for (double ell : {0.1, 0.5, 0.9})
    for (auto [mt, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      const FComposition c(mt, m, ell);
      CHECK(max_residual(c, xs).max_residual <= 1e-10);
      const RealPair at_ell = c(ell);
      const double lambda = solve_lambda(ell, mt * m).lambda;
      CHECK(std::abs(at_ell.left - lambda) <= 1e-10);
      CHECK(std::abs(at_ell.right - lambda) <= 1e-10);
    }
  CHECK_THROWS_AS(compose_F(2, 2, 0.5, 1.5), DomainError);
}

TEST_CASE("verification points are deterministic") {
  const auto a = verification_points(10);
  const auto b = verification_points(10);
  REQUIRE(a.size() == 74);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
  for (const complex& z : a) CHECK(std::abs(std::abs(z) - 1.0) < 1e-15);
  std::set<double> unique;
  for (const complex& z : a) unique.insert(std::arg(z));
  CHECK(unique.size() == a.size());
}
