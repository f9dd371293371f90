#include "zolo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "zolo/errors.hpp"

namespace zolo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using ErrorFn = std::function<double(double)>;

// Golden-section search for the maximum of f on [lo, hi].
double golden_argmax(const ErrorFn& f, double lo, double hi, double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? x1 : x2;
}

struct ArcScan {
  std::vector<Extremum> extrema;
};

ArcScan scan_arc(const ErrorFn& e, double lo, double hi, std::size_t n) {
  std::vector<double> t(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    v[i] = e(t[i]);
  }
  ArcScan out;
  out.extrema.push_back({lo, v.front(), true});
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool is_max = v[i] >= v[i - 1] && v[i] > v[i + 1];
    const bool is_min = v[i] <= v[i - 1] && v[i] < v[i + 1];
    if (!is_max && !is_min) continue;
    const double sigma = is_max ? 1.0 : -1.0;
    const double at = golden_argmax([&](double x) { return sigma * e(x); }, t[i - 1], t[i + 1], 1e-12);
    out.extrema.push_back({at, e(at), false});
  }
  out.extrema.push_back({hi, v.back(), true});
  return out;
}

struct ArcSpec {
  double lo, hi;
  ErrorFn error;
};

int sign_runs(const std::vector<Extremum>& ex, double threshold) {
  int runs = 0;
  int last = 0;
  for (const Extremum& x : ex) {
    if (std::abs(x.error) < threshold) continue;
    const int s = x.error > 0 ? 1 : -1;
    if (s != last) ++runs;
    last = s;
  }
  return runs;
}

PhaseErrorReport measure(const std::vector<ArcSpec>& arcs, int expected, double predicted, std::size_t grid_n) {
  PhaseErrorReport report;
  report.predicted = predicted;
  report.grid_size = grid_n;
  std::vector<ArcScan> scans;
  for (const ArcSpec& a : arcs) {
    scans.push_back(scan_arc(a.error, a.lo, a.hi, grid_n));
    for (const Extremum& x : scans.back().extrema) report.max_error = std::max(report.max_error, std::abs(x.error));
  }
  const double threshold = (1.0 - kAlternationTolerance) * report.max_error;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& ex = scans[k].extrema;
    ArcAlternation alt;
    alt.lo = arcs[k].lo;
    alt.hi = arcs[k].hi;
    alt.expected = expected;
    alt.count = sign_runs(ex, threshold);
    alt.endpoints_attained = std::abs(ex.front().error) >= threshold && std::abs(ex.back().error) >= threshold;
    report.arcs.push_back(alt);
    report.extrema.insert(report.extrema.end(), ex.begin(), ex.end());
  }
  return report;
}

int min_count(const PhaseErrorReport& r) {
  int c = std::numeric_limits<int>::max();
  for (const ArcAlternation& a : r.arcs) c = std::min(c, a.count);
  return c;
}

bool counts_equal(const PhaseErrorReport& a, const PhaseErrorReport& b) {
  for (std::size_t k = 0; k < a.arcs.size(); ++k)
    if (a.arcs[k].count != b.arcs[k].count) return false;
  return true;
}

// Retries once at double resolution when the count falls short of theory.
PhaseErrorReport measure_checked(const std::vector<ArcSpec>& arcs, int expected, double predicted,
                                 std::size_t grid_n) {
  PhaseErrorReport first = measure(arcs, expected, predicted, grid_n);
  if (min_count(first) >= expected) return first;
  PhaseErrorReport second = measure(arcs, expected, predicted, 2 * grid_n - 1);
  if (min_count(second) >= expected) return second;
  if (!counts_equal(first, second))
    throw InsufficientResolution("alternation count changed from " + std::to_string(min_count(first)) +
                                 " to " + std::to_string(min_count(second)) +
                                 " under grid doubling; raise the grid size");
  return second;
}

std::vector<ArcSpec> arcs_for(const std::function<complex(complex)>& f, Problem problem, double theta) {
  if (problem == Problem::Z5) {
    return {{-2.0 * theta, 2.0 * theta,
             [f](double t) { return std::arg(f(std::polar(1.0, t)) * std::polar(1.0, -0.5 * t)); }}};
  }
  return {{-theta, theta, [f](double t) { return std::arg(f(std::polar(1.0, t))); }},
          {kPi - theta, kPi + theta, [f](double t) { return std::arg(-f(std::polar(1.0, t))); }}};
}

void require_grid(std::size_t grid_n, int degree) {
  if (grid_n < 8 * (static_cast<std::size_t>(degree) + 1))
    throw DomainError("grid size " + std::to_string(grid_n) + " below 8 (degree + 1)");
}

}  // namespace

bool PhaseErrorReport::alternation_ok() const {
  for (const ArcAlternation& a : arcs)
    if (a.count < a.expected || !a.endpoints_attained) return false;
  return !arcs.empty();
}

double optimal_phase_error(int m, double theta) {
  const DegreeReduction r = solve_lambda(admissible_angle(theta), m);
  return std::atan2(r.lambda_comp, r.lambda);
}

PhaseErrorReport phase_error(const std::function<complex(complex)>& f, Problem problem, int degree,
                             double theta, std::size_t grid_n) {
  if (problem == Problem::Z4) throw DomainError("phase_error: Z4 is a real problem");
  if (degree < 0) throw DomainError("phase_error: degree must be nonnegative");
  require_grid(grid_n, degree);
  const int m = problem == Problem::Z5 ? 2 * degree + 1 : degree;
  const int expected = problem == Problem::Z5 ? 2 * degree + 2 : degree + 1;
  return measure_checked(arcs_for(f, problem, theta), expected, optimal_phase_error(m, theta), grid_n);
}

PhaseErrorReport phase_error_raw(const std::function<complex(complex)>& f, Problem problem, int degree,
                                 double theta, std::size_t grid_n) {
  if (problem == Problem::Z4) throw DomainError("phase_error: Z4 is a real problem");
  if (degree < 0) throw DomainError("phase_error: degree must be nonnegative");
  require_grid(grid_n, degree);
  const int m = problem == Problem::Z5 ? 2 * degree + 1 : degree;
  const int expected = problem == Problem::Z5 ? 2 * degree + 2 : degree + 1;
  return measure(arcs_for(f, problem, theta), expected, optimal_phase_error(m, theta), grid_n);
}

PhaseErrorReport sign_error_real(const Z4Approximant& z4, std::size_t grid_n) {
  const int m = z4.fraction().m();
  require_grid(grid_n, m);
  const double ell = z4.fraction().modulus().ell;
  // The error is odd in x, so [ell, 1] carries all the information.
  const std::vector<ArcSpec> arcs{{ell, 1.0, [&z4](double x) { return 1.0 - z4(x); }}};
  return measure_checked(arcs, m + 1, z4.max_deviation(), grid_n);
}

PhaseErrorReport phase_error_sqrt(const UnimodularRational& r, double theta, std::size_t grid_n) {
  return phase_error([&r](complex z) { return eval(r, z); }, Problem::Z5,
                     static_cast<int>(r.factors().size()), theta, grid_n);
}

PhaseErrorReport phase_error_sign(const UnimodularRational& s, double theta, std::size_t grid_n) {
  return phase_error([&s](complex z) { return eval(s, z); }, Problem::Z6,
                     static_cast<int>(s.factors().size()), theta, grid_n);
}

double log_zolotarev_number(int m, const EllipticModulus& e) {
  if (m < 0) throw DomainError("zolotarev_number: degree must be nonnegative");
  if (m == 0) return 0.0;  // constants: sup/inf ratio is 1
  const double L = e.log_rho();
  double log_z = std::log(4.0) - 2.0 * m * L;
  for (int j = 1; j <= 64; ++j) {
    const double a = std::exp(-8.0 * j * m * L);
    const double b = std::exp(-(8.0 * j - 4.0) * m * L);
    const double term = 4.0 * (std::log1p(a) - std::log1p(b));
    log_z += term;
    if (std::abs(std::expm1(term)) < 1e-17) break;
  }
  return log_z;
}

double zolotarev_number(int m, const EllipticModulus& e) { return std::exp(log_zolotarev_number(m, e)); }

double zolotarev_number(int m, double theta) {
  return zolotarev_number(m, EllipticModulus::from_pair(admissible_angle(theta)));
}

double lambda_from_Z(double Z) {
  if (!(Z >= 0.0 && Z <= 1.0)) throw DomainError("lambda_from_Z: Z must lie in [0, 1]");
  const double s = std::sqrt(Z);
  const double q = (1.0 - s) / (1.0 + s);
  return q * q;
}

double phase_from_log_Z(double log_Z) {
  if (!(log_Z <= 0.0)) throw DomainError("phase_from_log_Z: Z must not exceed 1");
  const double s = std::exp(0.5 * log_Z);
  const double lambda = lambda_from_Z(s * s);
  const double lambda_comp = std::sqrt(8.0 * s * (1.0 + s * s)) / ((1.0 + s) * (1.0 + s));
  return std::atan2(lambda_comp, lambda);
}

ErrorBounds error_bounds(int degree, double theta, Problem problem) {
  if (degree < 0) throw DomainError("error_bounds: degree must be nonnegative");
  const Modulus th = admissible_angle(theta);
  const double L = EllipticModulus::from_pair(th).log_rho();
  const double log_sec = std::log(4.0 / th.k);
  switch (problem) {
    case Problem::Z6:
      return {4.0 * std::exp(-0.5 * degree * L), 4.0 * std::exp(-kPi * kPi * degree / (4.0 * log_sec))};
    case Problem::Z5: {
      const double h = degree + 0.5;
      return {4.0 * std::exp(-h * L), 4.0 * std::exp(-kPi * kPi * h / (2.0 * log_sec))};
    }
    case Problem::Z4: break;
  }
  throw DomainError("error_bounds: defined for Z5 and Z6 only");
}

double GridField::re(int col) const {
  return window.re_lo + (window.re_hi - window.re_lo) * col / (resolution - 1);
}

double GridField::im(int row) const {
  return window.im_lo + (window.im_hi - window.im_lo) * row / (resolution - 1);
}

std::pair<int, int> GridField::nearest(complex z) const {
  auto idx = [&](double v, double lo, double hi) {
    const long k = std::lround((v - lo) / (hi - lo) * (resolution - 1));
    return static_cast<int>(std::clamp(k, 0L, static_cast<long>(resolution - 1)));
  };
  return {idx(z.imag(), window.im_lo, window.im_hi), idx(z.real(), window.re_lo, window.re_hi)};
}

complex target_value(Target target, complex z) {
  if (target == Target::Sqrt) return std::sqrt(z);
  if (z == complex(0.0, 0.0)) return 0.0;
  return z / std::sqrt(z * z);
}

GridField contour_grid(const UnimodularRational& r, Target target, const Window& window, int resolution) {
  if (resolution < 16 || resolution > 4096)
    throw DomainError("contour_grid: resolution must lie in [16, 4096]");
  if (!(window.re_hi > window.re_lo && window.im_hi > window.im_lo))
    throw DomainError("contour_grid: empty window");

  GridField g;
  g.window = window;
  g.resolution = resolution;
  g.values.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);

  auto fill_rows = [&](int first, int stride) {
    for (int row = first; row < resolution; row += stride) {
      for (int col = 0; col < resolution; ++col) {
        const complex z(g.re(col), g.im(row));
        double v;
        try {
          v = std::abs(eval(r, z) - target_value(target, z));
        } catch (const PoleError&) {
          v = kInf;
        }
        g.values[static_cast<std::size_t>(row) * resolution + col] = std::isfinite(v) ? v : kInf;
      }
    }
  };
  const int workers = static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 16u));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
  fill_rows(0, workers);
  for (std::thread& t : pool) t.join();

  const double half_re = 0.5 * (window.re_hi - window.re_lo) / (resolution - 1);
  const double half_im = 0.5 * (window.im_hi - window.im_lo) / (resolution - 1);
  for (const complex& p : zeros_and_poles(r).poles) {
    if (p.real() < window.re_lo - half_re || p.real() > window.re_hi + half_re) continue;
    if (p.imag() < window.im_lo - half_im || p.imag() > window.im_hi + half_im) continue;
    const auto [row, col] = g.nearest(p);
    g.values[static_cast<std::size_t>(row) * resolution + col] = kInf;
  }
  return g;
}

}  // namespace zolo
