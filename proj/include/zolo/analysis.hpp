#pragma once

// Phase-error measurement on S_Theta / T_Theta, equioscillation counting,
// Zolotarev numbers, the a priori error bounds and contour-grid data.

#include <cstddef>
#include <functional>
#include <vector>

#include "zolo/approximants.hpp"
#include "zolo/elliptic.hpp"

namespace zolo {

enum class Problem { Z4, Z5, Z6 };

/// A local extremum of the signed phase error.
struct Extremum {
  double theta = 0.0;
  double error = 0.0;
  bool endpoint = false;
};

/// Alternation bookkeeping for one arc.
struct ArcAlternation {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;     ///< sign runs among near-maximal extrema
  int expected = 0;  ///< what the optimal approximant attains
  bool endpoints_attained = false;
};

struct PhaseErrorReport {
  double max_error = 0.0;
  double predicted = 0.0;
  std::vector<Extremum> extrema;  ///< ascending theta, all arcs
  std::vector<ArcAlternation> arcs;
  std::size_t grid_size = 0;  ///< samples per arc actually used

  bool alternation_ok() const;
};

/// Extrema within this relative distance of the maximum take part in the count.
inline constexpr double kAlternationTolerance = 1e-6;

/// Max over the arc |arg z| <= 2 theta of |arg(r(z)/sqrt(z))|. The
/// prediction is arccos(lambda) for degree m = 2n + 1, n = factor count.
PhaseErrorReport phase_error_sqrt(const UnimodularRational& r, double theta, std::size_t grid_n);
/// Max over T_theta of |arg(s(z)/sign(z))|; prediction arccos(lambda_m).
PhaseErrorReport phase_error_sign(const UnimodularRational& s, double theta, std::size_t grid_n);

/// The same measurement for an arbitrary callable, e.g. a composition. The
/// expected count per arc is 2n + 2 (sqrt) or m + 1 (sign) for `degree`.
PhaseErrorReport phase_error(const std::function<complex(complex)>& f, Problem problem, int degree,
                             double theta, std::size_t grid_n);

/// One pass at grid_n with no resolution retry: the counts are reported as
/// found. For tabulating error sizes past the point where alternation can
/// still be resolved in double precision.
PhaseErrorReport phase_error_raw(const std::function<complex(complex)>& f, Problem problem, int degree,
                                 double theta, std::size_t grid_n);

/// Max over [ell, 1] of |1 - (2/(1 + lambda)) F_m(x)| (the error is odd), with
/// x in place of theta in the extrema; prediction (1 - lambda)/(1 + lambda),
/// m + 1 alternations.
PhaseErrorReport sign_error_real(const Z4Approximant& z4, std::size_t grid_n);

/// arccos(lambda) for the degree-m reduction of ell = cos(theta), computed as
/// atan2(lambda', lambda) so it stays accurate when lambda is close to 1.
double optimal_phase_error(int m, double theta);

/// Z_m([-1, -ell], [ell, 1]) from its product formula. Z_0 = 1.
double zolotarev_number(int m, double theta);
double zolotarev_number(int m, const EllipticModulus& e);
/// log Z_m; finite where Z_m itself underflows.
double log_zolotarev_number(int m, const EllipticModulus& e);

/// ((1 - sqrt Z)/(1 + sqrt Z))^2 for 0 <= Z <= 1.
double lambda_from_Z(double Z);
/// arccos(lambda_from_Z(exp(log_Z))), without the cancellation near lambda = 1.
double phase_from_log_Z(double log_Z);

struct ErrorBounds {
  double rho_bound = 0.0;     ///< 4 rho^(-m/2) or 4 rho^(-(n + 1/2))
  double secant_bound = 0.0;  ///< the weaker, explicit sec(theta) form
};

/// The a priori bounds for Z5 (degree n) or Z6 (degree m).
ErrorBounds error_bounds(int degree, double theta, Problem problem);

enum class Target { Sqrt, Sign };

struct Window {
  double re_lo = -2.0;
  double re_hi = 2.0;
  double im_lo = -2.0;
  double im_hi = 2.0;
};

/// |R(z) - target(z)| on a resolution x resolution grid, rows by ascending
/// imaginary part. Cells nearest each pole of R hold +infinity.
struct GridField {
  Window window;
  int resolution = 0;
  std::vector<double> values;

  double re(int col) const;
  double im(int row) const;
  double at(int row, int col) const { return values[static_cast<std::size_t>(row) * resolution + col]; }
  /// Nearest grid cell (row, col) to z.
  std::pair<int, int> nearest(complex z) const;
};

/// Principal sqrt(z), or z / sqrt(z^2).
complex target_value(Target target, complex z);

/// Requires 16 <= resolution <= 4096.
GridField contour_grid(const UnimodularRational& r, Target target, const Window& window, int resolution);

}  // namespace zolo
