#pragma once

// The acceptance sweep: one pass/fail result per criterion, shared by the
// acceptance test binary and `zolo selftest`.

#include <string>
#include <vector>

#include "zolo/analysis.hpp"

namespace zolo {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  /// Scale a_1 / b_1 by (1 + 1e-6) in the approximants of criteria 1 and 2.
  bool inject_fault = false;
};

// Pinned tolerances.
inline constexpr double kOptimalErrorTol = 1e-9;
inline constexpr double kZChainTol = 1e-10;
inline constexpr double kBoundSlackTol = 1e-14;
inline constexpr double kStructuralTol = 1e-11;
inline constexpr double kLiftTol = 1e-11;
inline constexpr double kDirectProductTol = 1e-10;
inline constexpr double kCompositionTol = 1e-9;
inline constexpr double kFCompositionTol = 1e-10;
inline constexpr double kPadePoleTol = 1e-12;
inline constexpr double kPadeLimitTol = 1e-4;
inline constexpr double kBlaschkeTol = 1e-9;
inline constexpr double kOracleTol = 1e-11;
inline constexpr double kCriterion1Seconds = 5.0;
inline constexpr double kSelftestSeconds = 60.0;
inline constexpr double kFault = 1e-6;

/// Perturbs the first finite factor parameter by a relative amount.
UnimodularRational perturb_first_factor(const UnimodularRational& r, double rel);

CriterionResult criterion_optimal_error(const AcceptanceOptions& opt);   // 1
CriterionResult criterion_equioscillation(const AcceptanceOptions& opt); // 2
CriterionResult criterion_bounds();                                      // 3
CriterionResult criterion_structural();                                  // 4
CriterionResult criterion_lift();                                        // 5
CriterionResult criterion_composition();                                 // 6
CriterionResult criterion_connections();                                 // 7
CriterionResult criterion_oracles();                                     // 8

/// Contour data: zeros of the error on |z| = 1, pole cells at the
/// analytic poles.
struct ContourCheck {
  bool passed = false;
  std::string detail;
};
ContourCheck check_contour(const UnimodularRational& r, Target target, double theta, const Window& window,
                           int resolution);
/// Reference configuration: r_11 and s_17 at Theta = pi/2 - 0.15.
ContourCheck check_reference_contours();

/// Criteria 1-8 in order.
std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opt);
/// Criterion 9 from a finished 1-8 sweep: all passed within the time budget,
/// and the reference contours check out.
CriterionResult criterion_end_to_end(const std::vector<CriterionResult>& first_eight, double total_seconds);

/// All nine.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

}  // namespace zolo
