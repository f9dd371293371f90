#pragma once

// Independent reference computations for verification.
//
// Nothing in this header or its implementation includes another zolo header;
// the CMake target links no zolo code. Quadrature replaces the AGM, direct
// integration of the amplitude ODE replaces Landen's scheme, and a brute-force
// scan replaces the closed-form degree-1 optimum.

#include <cstddef>

namespace zolo::oracle {

struct OracleResult {
  double value = 0.0;
  double estimated_error = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod quadrature of the complete integral of the first
/// kind, tolerance 1e-12. Requires 0 <= ell <= 1 - 1e-6.
OracleResult oracle_K(double ell);

/// Incomplete integral of the first kind, int_0^phi (1 - ell^2 sin^2)^(-1/2).
OracleResult oracle_F(double phi, double ell);

/// Amplitude phi(u) from d(phi)/dt = sqrt(1 - ell^2 sin^2 phi), phi(0) = 0.
OracleResult oracle_amplitude(double u, double ell);

/// sin(phi(u)). Requires |u| <= 2 K(ell) (K estimated by oracle_K).
OracleResult oracle_sn(double u, double ell);

struct Degree1Scan {
  double grid_argmin = 0.0;    ///< best a on the log grid
  double cell_ratio = 1.0;     ///< ratio between neighbouring grid values
  double refined_argmin = 0.0; ///< golden-section refinement inside the best cell
  double min_error = 0.0;      ///< max phase error at refined_argmin
  bool unimodal = true;        ///< discrete differences change sign exactly once
  std::size_t grid_size = 0;
};

/// Scans r(z) = (1 + a z) / (z + a) over a > 0 on a log grid, measuring the
/// max phase error against sqrt(z) on the arc |arg z| <= 2 theta.
Degree1Scan oracle_minimax_degree1(double theta, std::size_t search_grid);

/// Phase error max_{|t| <= 2 theta} |arg(r(e^{it})) - t/2| for the family above.
double degree1_phase_error(double a, double theta);

}  // namespace zolo::oracle
