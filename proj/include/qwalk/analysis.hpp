#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/statevector.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Node distributions for steps 0..M of a walk.
struct StepTrace {
  std::vector<int> dims;
  std::vector<Distribution> distributions;  // joint node index per step
  std::vector<double> average;              // average node per step
  /// Largest forbidden-state probability seen just before each shift
  /// (one entry per step, empty for unbounded walks).
  std::vector<double> forbidden;

  int steps() const { return static_cast<int>(distributions.size()) - 1; }
  int node_qubits() const;
};

/// Exact per-step simulation of `spec`, including step 0. Honors the
/// spec's initialization check.
StepTrace trace_walk(const WalkSpec& spec);

double average_node(const Distribution& d);

struct PeakStats {
  int peak_step = 0;
  double peak_avg_node = 0.0;
  double peak_right_half_prob = 0.0;  // mass on nodes >= 2^{N-1}
};

/// Argmax of the average-node series; ties go to the earliest step.
PeakStats peak_stats(const StepTrace& trace);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

std::vector<Point> series_points(const std::vector<double>& y);

/// Indices of the upper and lower envelope of a jagged series. A point at
/// least as high as both neighbours is upper; at most as high, lower. A point
/// equal to its neighbours is in both. A point on a monotone run goes to the
/// side of its neighbours' mean. Endpoints compare against their one
/// neighbour.
struct Envelopes {
  std::vector<int> upper;
  std::vector<int> lower;
};

Envelopes split_envelopes(const std::vector<double>& y);

std::vector<Point> select(const std::vector<double>& y, const std::vector<int>& idx);

enum class FitModel { kParabola, kSinusoid };

/// Parabola: params = {a, b, c} for a x^2 + b x + c.
/// Sinusoid: params = {A, omega, delta, B} for A sin(omega x + delta) + B.
struct FitResult {
  FitModel model = FitModel::kParabola;
  std::vector<double> params;
  double sigma = 0.0;

  double operator()(double x) const;
};

/// Root-mean-square residual of `fit` over `points`.
double rms_residual(const FitResult& fit, const std::vector<Point>& points);

/// Closed-form least squares. Needs 3 distinct x values.
FitResult fit_parabola(const std::vector<Point>& points);

struct SinusoidOptions {
  /// Centre of the frequency search. 0 means pi / (2 x*), x* = argmax y.
  double omega_seed = 0.0;
  /// Relative half-width of the frequency grid around the seed.
  double band = 0.1;
  int grid = 201;
};

/// Least squares over a frequency grid, refined by golden-section search.
/// Needs 4 distinct x values.
FitResult fit_sinusoid(const std::vector<Point>& points,
                       const SinusoidOptions& options = {});

/// Envelope fits of an average-node series.
struct EnvelopeFits {
  int peak_step = 0;
  int window_end = 0;
  FitResult upper_parabola, upper_sinusoid;
  FitResult lower_parabola, lower_sinusoid;
  FitResult joint_parabola;
};

/// Fits steps 0..quarter_cycles * peak_step (clipped to the series).
EnvelopeFits fit_envelopes(const std::vector<double>& average,
                           int quarter_cycles = 2);

// ---------------------------------------------------------------------------
// Text formats (numbers printed with 12 significant digits)

std::string format_number(double v);

/// `step,node,probability` in 1D, `step,row,col,probability` in 2D, where
/// row is the vertical coordinate. Zero-probability rows are kept.
void write_trace_csv(std::ostream& os, const StepTrace& trace);
/// `step,avg_node`.
void write_summary_csv(std::ostream& os, const StepTrace& trace);
/// Reads a two-column numeric CSV with a header row.
std::vector<Point> read_summary_csv(std::istream& is);

void write_peak_report(std::ostream& os, const PeakStats& stats);
void write_fit_report(std::ostream& os, const std::string& prefix,
                      const FitResult& fit);

}  // namespace qwalk
