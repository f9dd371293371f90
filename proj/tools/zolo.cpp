// zolo: build, measure and verify the unimodular approximants from the shell.
//
// Exit codes: 0 ok, 1 I/O or self-test failure, 2 usage, 3 numeric domain,
// 4 equioscillation deficiency, 5 composition residual breach.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_writer.hpp"
#include "zolo/acceptance.hpp"
#include "zolo/analysis.hpp"
#include "zolo/composition.hpp"
#include "zolo/errors.hpp"

#ifndef ZOLO_VERSION
#define ZOLO_VERSION "0.0.0"
#endif

namespace {

using zolo::complex;
using zolo::cli::Json;

constexpr double kPi = std::numbers::pi;
constexpr double kEdge = 1e-8;
constexpr int kMaxBuildDegree = 4096;
constexpr int kMaxBoundsDegree = 64;
constexpr std::size_t kMinGrid = 64;
constexpr double kSComposeTol = 1e-9;
constexpr double kFComposeTol = 1e-10;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kDomain = 3, kDeficient = 4, kResidual = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string problem = "z6";
  int degree = 1;
  int m_tilde = 1;
  std::optional<double> theta;
  std::optional<double> ell;
  std::size_t grid = 1024;
  std::string format = "json";
  std::string out;
  int max_degree = 16;
  std::size_t samples = 136;
  std::vector<double> window{-2.0, 2.0, -2.0, 2.0};
  int resolution = 401;
  bool inject_fault = false;
};

zolo::Problem parse_problem(const std::string& p) {
  if (p == "z4") return zolo::Problem::Z4;
  if (p == "z5") return zolo::Problem::Z5;
  return zolo::Problem::Z6;
}

// Theta and ell = cos(Theta) describe the same configuration; exactly one is
// given. The pair keeps ell' accurate when ell is supplied directly.
struct Angle {
  double theta;
  zolo::Modulus modulus;
};

Angle resolve_angle(const Options& o) {
  if (o.theta.has_value() == o.ell.has_value()) throw UsageError("exactly one of --theta and --ell is required");
  if (o.theta) {
    const double t = *o.theta;
    if (!(t > kEdge && t < kPi / 2 - kEdge))
      throw UsageError("--theta " + zolo::message_number(t) + " outside (1e-8, pi/2 - 1e-8)");
    return {t, zolo::Modulus::from_angle(t)};
  }
  const double l = *o.ell;
  if (!(l > 0.0 && l < 1.0)) throw UsageError("--ell " + zolo::message_number(l) + " outside (0, 1)");
  const double t = std::acos(l);
  if (!(t > kEdge && t < kPi / 2 - kEdge))
    throw UsageError("--ell " + zolo::message_number(l) + " gives theta outside (1e-8, pi/2 - 1e-8)");
  return {t, zolo::Modulus::of(l)};
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("--format " + o.format + " is not supported by this command");
}

Json opt_number(const std::optional<double>& v) { return v ? Json(*v) : Json(); }

Json complex_json(complex z) { return Json::array().push(z.real()).push(z.imag()); }

Json complex_list(const std::vector<complex>& zs) {
  Json a = Json::array();
  for (const complex& z : zs) a.push(complex_json(z));
  return a;
}

Json envelope(const std::string& command, Json inputs, Json results) {
  return Json::object()
      .set("command", command)
      .set("inputs", std::move(inputs))
      .set("results", std::move(results))
      .set("tool_version", ZOLO_VERSION);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to " + path + " failed");
}

// Shortest round-trip form for CSV cells.
std::string csv_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v == 0.0 ? 0.0 : v);
  return std::string(buf, res.ptr);
}

Json angle_inputs(const Options& o) {
  return Json::object().set("problem", o.problem).set("degree", o.degree).set("theta", opt_number(o.theta)).set(
      "ell", opt_number(o.ell));
}

zolo::Z4Approximant z4_approximant(int m, const Angle& a) {
  if (m < 1) throw zolo::DomainError("degree must be at least 1 for z4");
  return zolo::Z4Approximant(zolo::ZolotarevFraction(m, a.modulus));
}

zolo::UnimodularRational complex_approximant(zolo::Problem p, int degree, double theta) {
  return p == zolo::Problem::Z5 ? zolo::build_r(degree, theta) : zolo::build_s(degree, theta);
}

const char* family_name(zolo::Family f) {
  switch (f) {
    case zolo::Family::R: return "R";
    case zolo::Family::S: return "S";
    case zolo::Family::H: return "H";
  }
  return "?";
}

// ---------------------------------------------------------------- build

int cmd_build(const Options& o) {
  require_format(o, {"json"});
  const Angle a = resolve_angle(o);
  const zolo::Problem p = parse_problem(o.problem);
  if (o.degree < 0 || o.degree > kMaxBuildDegree)
    throw UsageError("--degree must lie in [0, " + std::to_string(kMaxBuildDegree) + "]");

  Json r = Json::object().set("problem", o.problem).set("degree", o.degree).set("theta", a.theta).set("ell", a.modulus.k);
  if (p == zolo::Problem::Z4) {
    const zolo::Z4Approximant z4 = z4_approximant(o.degree, a);
    const zolo::ZolotarevFraction& zf = z4.fraction();
    const double ell = zf.modulus().ell;
    // F_m(x) = c x prod (1 + (x/ell)^2 e_j) / prod (1 + (x/ell)^2 o_j): roots on the imaginary axis.
    std::vector<complex> zeros{0.0}, poles;
    for (double e : zf.even_cs2())
      for (double sg : {1.0, -1.0}) zeros.push_back(complex(0.0, sg * ell / std::sqrt(e)));
    for (double c : zf.odd_cs2())
      for (double sg : {1.0, -1.0}) poles.push_back(complex(0.0, sg * ell / std::sqrt(c)));
    r.set("lambda", z4.lambda())
        .set("lambda_comp", zf.reduction().lambda_comp)
        .set("predicted_max_error", z4.max_deviation())
        .set("scale", z4.scale())
        .set("z_power", Json())
        .set("quarter_turns", Json())
        .set("factors", Json::array())
        .set("zeros", complex_list(zeros))
        .set("poles", complex_list(poles))
        .set("exact_type", Json::array().push(static_cast<int>(zeros.size())).push(static_cast<int>(poles.size())));
  } else {
    const int m = p == zolo::Problem::Z5 ? 2 * o.degree + 1 : o.degree;
    const zolo::DegreeReduction red = zolo::solve_lambda(a.modulus, m);
    const zolo::UnimodularRational u = complex_approximant(p, o.degree, a.theta);
    Json factors = Json::array();
    for (const zolo::Factor& f : u.factors())
      factors.push(Json::object()
                       .set("param", f.param.is_infinite() ? Json("inf") : Json(f.param.value()))
                       .set("inverted", f.inverted));
    const zolo::ZerosPoles zp = zolo::zeros_and_poles(u);
    const auto [num, den] = zolo::exact_type(u);
    r.set("lambda", red.lambda)
        .set("lambda_comp", red.lambda_comp)
        .set("predicted_max_error", std::atan2(red.lambda_comp, red.lambda))
        .set("family", family_name(u.family()))
        .set("z_power", u.z_power())
        .set("quarter_turns", u.quarter_turns())
        .set("factors", std::move(factors))
        .set("zeros", complex_list(zp.zeros))
        .set("poles", complex_list(zp.poles))
        .set("exact_type", Json::array().push(num).push(den));
  }
  emit(envelope("build", angle_inputs(o).set("format", o.format), std::move(r)).dump(), o.out);
  return kOk;
}

// ---------------------------------------------------------------- error

zolo::PhaseErrorReport measure(zolo::Problem p, int degree, const Angle& a, std::size_t grid) {
  switch (p) {
    case zolo::Problem::Z4: return zolo::sign_error_real(z4_approximant(degree, a), grid);
    case zolo::Problem::Z5: return zolo::phase_error_sqrt(zolo::build_r(degree, a.theta), a.theta, grid);
    case zolo::Problem::Z6: break;
  }
  return zolo::phase_error_sign(zolo::build_s(degree, a.theta), a.theta, grid);
}

int cmd_error(const Options& o) {
  require_format(o, {"json"});
  const Angle a = resolve_angle(o);
  const zolo::Problem p = parse_problem(o.problem);
  if (o.grid < kMinGrid) throw UsageError("--grid must be at least 64");
  if (o.degree < 0 || o.degree > kMaxBuildDegree)
    throw UsageError("--degree must lie in [0, " + std::to_string(kMaxBuildDegree) + "]");
  if (o.grid < 8 * (static_cast<std::size_t>(o.degree) + 1))
    throw UsageError("--grid must be at least 8 (degree + 1) = " + std::to_string(8 * (o.degree + 1)));

  const zolo::PhaseErrorReport rep = measure(p, o.degree, a, o.grid);
  const char* coord = p == zolo::Problem::Z4 ? "x" : "theta";
  Json arcs = Json::array();
  for (const zolo::ArcAlternation& arc : rep.arcs)
    arcs.push(Json::object()
                  .set("lo", arc.lo)
                  .set("hi", arc.hi)
                  .set("count", arc.count)
                  .set("expected", arc.expected)
                  .set("endpoints_attained", arc.endpoints_attained));
  Json extrema = Json::array();
  for (const zolo::Extremum& e : rep.extrema)
    extrema.push(Json::object().set(coord, e.theta).set("error", e.error).set("endpoint", e.endpoint));
  const bool ok = rep.alternation_ok();
  Json r = Json::object()
               .set("measured", rep.max_error)
               .set("predicted", rep.predicted)
               .set("difference", rep.max_error - rep.predicted)
               .set("grid_size", rep.grid_size)
               .set("alternation_ok", ok)
               .set("arcs", std::move(arcs))
               .set("extrema", std::move(extrema));
  emit(envelope("error", angle_inputs(o).set("grid", o.grid).set("format", o.format), std::move(r)).dump(), o.out);
  if (!ok) {
    std::cerr << "zolo: alternation count below theory after grid doubling\n";
    return kDeficient;
  }
  return kOk;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(const Options& o) {
  require_format(o, {"json", "csv"});
  const Angle a = resolve_angle(o);
  const zolo::Problem p = parse_problem(o.problem);
  if (p == zolo::Problem::Z4) throw UsageError("bounds: --problem must be z5 or z6");
  if (o.max_degree < 0 || o.max_degree > kMaxBoundsDegree)
    throw UsageError("--max-degree must lie in [0, " + std::to_string(kMaxBoundsDegree) + "]");
  if (o.grid < 8 * (static_cast<std::size_t>(o.max_degree) + 1) || o.grid < kMinGrid)
    throw UsageError("--grid must be at least max(64, 8 (max-degree + 1))");

  struct Row {
    int degree;
    double measured, predicted, rho, secant;
  };
  std::vector<Row> rows;
  for (int d = 0; d <= o.max_degree; ++d) {
    // Only the size of the error matters here; past double resolution the
    // alternation count is noise, so the unchecked pass is used.
    const zolo::UnimodularRational u = complex_approximant(p, d, a.theta);
    const double measured =
        zolo::phase_error_raw([&u](complex z) { return zolo::eval(u, z); }, p, d, a.theta, o.grid).max_error;
    const int m = p == zolo::Problem::Z5 ? 2 * d + 1 : d;
    const zolo::ErrorBounds b = zolo::error_bounds(d, a.theta, p);
    rows.push_back({d, measured, zolo::optimal_phase_error(m, a.theta), b.rho_bound, b.secant_bound});
  }

  // Least-squares slope of log(measured) against degree, over rows above the
  // rounding floor; theory says -log(rho)/2 (z6) or -log(rho) (z5) per degree.
  const double log_rho = zolo::EllipticModulus::from_pair(a.modulus).log_rho();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (const Row& r : rows)
    if (r.degree >= 1 && r.measured >= 1e-12) {
      const double y = std::log(r.measured);
      sx += r.degree;
      sy += y;
      sxx += static_cast<double>(r.degree) * r.degree;
      sxy += r.degree * y;
      ++used;
    }
  const double fitted = used >= 2 ? (used * sxy - sx * sy) / (used * sxx - sx * sx) : std::nan("");
  const double theory = p == zolo::Problem::Z6 ? -0.5 * log_rho : -log_rho;

  Json inputs = Json::object()
                    .set("problem", o.problem)
                    .set("max_degree", o.max_degree)
                    .set("theta", opt_number(o.theta))
                    .set("ell", opt_number(o.ell))
                    .set("grid", o.grid)
                    .set("format", o.format);
  if (o.format == "csv") {
    std::ostringstream s;
    s << "degree,measured,predicted,bound_rho,bound_secant\n";
    for (const Row& r : rows)
      s << r.degree << ',' << csv_number(r.measured) << ',' << csv_number(r.predicted) << ',' << csv_number(r.rho)
        << ',' << csv_number(r.secant) << '\n';
    emit(s.str(), o.out);
    return kOk;
  }
  Json table = Json::array();
  for (const Row& r : rows) {
    // Rounding in a degree-m product evaluation; measured errors cannot
    // resolve anything below this. The bound is sharp to O(rho^-m), so the
    // analytic value gets the same 1e-13 relative slack as Z_m.
    const int m = p == zolo::Problem::Z5 ? 2 * r.degree + 1 : r.degree;
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (m + 1);
    table.push(Json::object()
                   .set("degree", r.degree)
                   .set("measured", r.measured)
                   .set("predicted", r.predicted)
                   .set("bound_rho", r.rho)
                   .set("bound_secant", r.secant)
                   .set("noise_floor", floor)
                   .set("within_bound", r.measured <= r.rho + floor && r.predicted <= r.rho * (1.0 + 1e-13) &&
                                             r.rho <= r.secant));
  }
  Json res = Json::object()
                 .set("rows", std::move(table))
                 .set("fitted_log_slope", fitted)
                 .set("theory_log_slope", theory)
                 .set("fit_points", used);
  emit(envelope("bounds", std::move(inputs), std::move(res)).dump(), o.out);
  return kOk;
}

// ---------------------------------------------------------------- compose

int cmd_compose(const Options& o) {
  require_format(o, {"json"});
  const Angle a = resolve_angle(o);
  const zolo::Problem p = parse_problem(o.problem);
  if (o.degree < 0 || o.m_tilde < 0 || o.degree > 256 || o.m_tilde > 256 || o.degree * o.m_tilde > 1024)
    throw UsageError("--degree and --m-tilde must lie in [0, 256] with product at most 1024");
  if (o.samples < 1 || o.samples > 100000) throw UsageError("--samples must lie in [1, 100000]");

  Json r = Json::object();
  double residual = 0.0, tol = kSComposeTol;
  std::size_t points = 0;
  if (p == zolo::Problem::Z4) {
    const zolo::FComposition c(o.m_tilde, o.degree, a.modulus.k);
    const zolo::ResidualReport rep = zolo::max_residual(c, zolo::verification_abscissae(o.samples));
    residual = rep.max_residual;
    points = rep.points;
    tol = kFComposeTol;
    r.set("law", "F_mt(F_m(x; ell); lambda_m) = F_{mt m}(x; ell)")
        .set("target_degree", o.m_tilde * o.degree)
        .set("ell_tilde", c.ell_tilde());
  } else if (p == zolo::Problem::Z5) {
    const zolo::RComposition c(o.m_tilde, o.degree, a.theta);
    const zolo::ResidualReport rep = zolo::max_residual(c, zolo::verification_points(o.samples));
    residual = rep.max_residual;
    points = rep.points;
    r.set("law", "r_n(z) r_nt(z / r_n(z)^2; theta~) = r_{2 nt n + nt + n}(z)")
        .set("target_degree", c.target_degree())
        .set("theta_tilde", c.theta_tilde());
  } else {
    const zolo::SComposition c(o.m_tilde, o.degree, a.theta);
    const zolo::ResidualReport rep = zolo::max_residual(c, zolo::verification_points(o.samples));
    residual = rep.max_residual;
    points = rep.points;
    r.set("law", "s_mt(s_m(z); theta~) = s_{mt m}(z)")
        .set("target_degree", c.plan().target_degree)
        .set("theta_tilde", c.plan().theta_tilde);
  }
  const bool ok = residual <= tol;
  r.set("points", points).set("max_residual", residual).set("tolerance", tol).set("passed", ok);
  Json inputs = Json::object()
                    .set("problem", o.problem)
                    .set("degree", o.degree)
                    .set("m_tilde", o.m_tilde)
                    .set("theta", opt_number(o.theta))
                    .set("ell", opt_number(o.ell))
                    .set("samples", o.samples)
                    .set("format", o.format);
  emit(envelope("compose", std::move(inputs), std::move(r)).dump(), o.out);
  if (!ok) {
    std::cerr << "zolo: composition residual " << residual << " exceeds " << tol << "\n";
    return kResidual;
  }
  return kOk;
}

// ---------------------------------------------------------------- contour

int cmd_contour(const Options& o) {
  require_format(o, {"csv"});
  const Angle a = resolve_angle(o);
  const zolo::Problem p = parse_problem(o.problem);
  if (p == zolo::Problem::Z4) throw UsageError("contour: --problem must be z5 or z6");
  if (o.degree < 0 || o.degree > kMaxBuildDegree)
    throw UsageError("--degree must lie in [0, " + std::to_string(kMaxBuildDegree) + "]");
  if (o.window.size() != 4) throw UsageError("--window takes re_lo,re_hi,im_lo,im_hi");
  const zolo::Window w{o.window[0], o.window[1], o.window[2], o.window[3]};
  if (!(w.re_lo < w.re_hi && w.im_lo < w.im_hi)) throw UsageError("--window bounds must increase");
  if (o.resolution < 16 || o.resolution > 4096) throw UsageError("--resolution must lie in [16, 4096]");

  const zolo::Target target = p == zolo::Problem::Z5 ? zolo::Target::Sqrt : zolo::Target::Sign;
  const zolo::GridField g = zolo::contour_grid(complex_approximant(p, o.degree, a.theta), target, w, o.resolution);
  std::string s = "re,im,value\n";
  s.reserve(s.size() + static_cast<std::size_t>(o.resolution) * o.resolution * 32);
  for (int row = 0; row < o.resolution; ++row) {
    const std::string im = csv_number(g.im(row));
    for (int col = 0; col < o.resolution; ++col) {
      s += csv_number(g.re(col));
      s += ',';
      s += im;
      s += ',';
      s += csv_number(g.at(row, col));
      s += '\n';
    }
  }
  emit(s, o.out);
  return kOk;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const Options& o) {
  require_format(o, {"json", "text"});
  const std::vector<zolo::CriterionResult> results = zolo::run_acceptance({o.inject_fault});
  std::vector<int> failed;
  for (const zolo::CriterionResult& c : results)
    if (!c.passed) failed.push_back(c.id);

  if (o.format == "json") {
    Json list = Json::array();
    for (const zolo::CriterionResult& c : results)
      list.push(Json::object()
                    .set("id", c.id)
                    .set("name", c.name)
                    .set("passed", c.passed)
                    .set("detail", c.detail)
                    .set("seconds", c.seconds));
    Json inputs = Json::object().set("inject_fault", o.inject_fault).set("format", o.format);
    Json ids = Json::array();
    for (int id : failed) ids.push(id);
    Json res = Json::object().set("criteria", std::move(list)).set("passed", failed.empty()).set("failed", std::move(ids));
    emit(envelope("selftest", std::move(inputs), std::move(res)).dump(), o.out);
  } else {
    std::ostringstream s;
    char buf[32];
    for (const zolo::CriterionResult& c : results) {
      std::snprintf(buf, sizeof buf, " (%.2f s)", c.seconds);
      s << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name << " -- " << c.detail << buf
        << '\n';
    }
    emit(s.str(), o.out);
  }
  if (failed.empty()) return kOk;
  std::cerr << "zolo: failed criteria:";
  for (int id : failed) std::cerr << ' ' << id;
  std::cerr << '\n';
  return kFailure;
}

// ---------------------------------------------------------------- wiring

void add_angle(CLI::App* c, Options& o) {
  c->add_option("--theta", o.theta, "arc half-width Theta in (0, pi/2)");
  c->add_option("--ell", o.ell, "modulus ell = cos(Theta)");
}

void add_problem(CLI::App* c, Options& o, std::vector<std::string> allowed) {
  c->add_option("--problem", o.problem, "problem")->check(CLI::IsMember(std::move(allowed)))->capture_default_str();
}

void add_common(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "output format")->capture_default_str();
  c->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unimodular rational approximants to sqrt(z) and sign(z) on the unit circle"};
  app.set_version_flag("--version", ZOLO_VERSION);
  app.require_subcommand(1);
  Options o;

  CLI::App* build = app.add_subcommand("build", "describe an optimal approximant");
  add_problem(build, o, {"z4", "z5", "z6"});
  build->add_option("--degree", o.degree, "degree (n for z5, m otherwise)")->required();
  add_angle(build, o);
  add_common(build, o);

  CLI::App* error = app.add_subcommand("error", "measure the max error and equioscillation");
  add_problem(error, o, {"z4", "z5", "z6"});
  error->add_option("--degree", o.degree, "degree")->required();
  add_angle(error, o);
  error->add_option("--grid", o.grid, "samples per arc")->capture_default_str();
  add_common(error, o);

  CLI::App* bounds = app.add_subcommand("bounds", "measured errors against the a priori bounds");
  add_problem(bounds, o, {"z5", "z6"});
  bounds->add_option("--max-degree", o.max_degree, "largest degree")->capture_default_str();
  add_angle(bounds, o);
  bounds->add_option("--grid", o.grid, "samples per arc")->capture_default_str();
  add_common(bounds, o);

  CLI::App* compose = app.add_subcommand("compose", "verify a composition law");
  add_problem(compose, o, {"z4", "z5", "z6"});
  compose->add_option("--degree", o.degree, "inner degree")->required();
  compose->add_option("--m-tilde", o.m_tilde, "outer degree")->required();
  add_angle(compose, o);
  compose->add_option("--samples", o.samples, "Chebyshev sample count")->capture_default_str();
  add_common(compose, o);

  CLI::App* contour = app.add_subcommand("contour", "error magnitude on a grid, as CSV");
  add_problem(contour, o, {"z5", "z6"});
  contour->add_option("--degree", o.degree, "degree")->required();
  add_angle(contour, o);
  contour->add_option("--window", o.window, "re_lo,re_hi,im_lo,im_hi")->delimiter(',')->expected(4);
  contour->add_option("--resolution", o.resolution, "grid points per side")->capture_default_str();
  add_common(contour, o);

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance sweep");
  selftest->add_flag("--inject-fault", o.inject_fault, "perturb a_1 and b_1 by 1e-6");
  add_common(selftest, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  // Per-command format defaults.
  const bool format_given = [&] {
    for (CLI::App* c : app.get_subcommands())
      if (c->count("--format")) return true;
    return false;
  }();
  if (!format_given) {
    if (contour->parsed()) o.format = "csv";
    if (selftest->parsed()) o.format = "text";
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (error->parsed()) return cmd_error(o);
    if (bounds->parsed()) return cmd_bounds(o);
    if (compose->parsed()) return cmd_compose(o);
    if (contour->parsed()) return cmd_contour(o);
    if (selftest->parsed()) return cmd_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << "zolo: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "zolo: " << e.what() << '\n';
    return kFailure;
  } catch (const zolo::InsufficientResolution& e) {
    std::cerr << "zolo: " << e.what() << '\n';
    return kDeficient;
  } catch (const zolo::Error& e) {
    std::cerr << "zolo: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}
