#include "qwalk/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

namespace qwalk {

int StepTrace::node_qubits() const {
  int n = 0;
  for (int d : dims) n += d;
  return n;
}

StepTrace trace_walk(const WalkSpec& spec) {
  spec.validate();
  check_initialization(spec);
  const WalkLayout layout = walk_layout(spec);
  const std::vector<Qubit> nodes = layout.nodes();
  const Circuit pre = coin_stage(spec);
  const Circuit post = shift_stage(spec);
  const std::vector<BasisIndex> forbidden = forbidden_states(spec);

  StepTrace t;
  t.dims = spec.dims;
  WalkState s = initial_state(spec);
  auto record = [&] {
    t.distributions.push_back(marginal_distribution(s, nodes));
    t.average.push_back(average_node(t.distributions.back()));
  };
  record();
  for (int m = 0; m < spec.steps; ++m) {
    apply_circuit(s, pre);
    if (spec.bounded()) {
      double worst = 0.0;
      for (BasisIndex i : forbidden) worst = std::max(worst, std::norm(s[i]));
      t.forbidden.push_back(worst);
    }
    apply_circuit(s, post);
    record();
  }
  return t;
}

double average_node(const Distribution& d) {
  double sum = 0.0;
  for (std::size_t n = 0; n < d.size(); ++n) sum += static_cast<double>(n) * d[n];
  return sum;
}

PeakStats peak_stats(const StepTrace& trace) {
  if (trace.steps() < 1) throw ValidationError("peak statistics need at least one step");
  const auto& y = trace.average;
  const auto it = std::max_element(y.begin(), y.end());  // first maximum
  PeakStats p;
  p.peak_step = static_cast<int>(it - y.begin());
  p.peak_avg_node = *it;
  const Distribution& d = trace.distributions[p.peak_step];
  for (std::size_t n = d.size() / 2; n < d.size(); ++n) p.peak_right_half_prob += d[n];
  return p;
}

std::vector<Point> series_points(const std::vector<double>& y) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < y.size(); ++i) pts.push_back({static_cast<double>(i), y[i]});
  return pts;
}

Envelopes split_envelopes(const std::vector<double>& y) {
  Envelopes e;
  const int n = static_cast<int>(y.size());
  for (int i = 0; i < n; ++i) {
    std::vector<double> nb;
    if (i > 0) nb.push_back(y[i - 1]);
    if (i + 1 < n) nb.push_back(y[i + 1]);
    const bool ge = std::all_of(nb.begin(), nb.end(), [&](double v) { return y[i] >= v; });
    const bool le = std::all_of(nb.begin(), nb.end(), [&](double v) { return y[i] <= v; });
    bool up = ge, lo = le;
    if (!ge && !le) {
      double mean = 0.0;
      for (double v : nb) mean += v;
      mean /= static_cast<double>(nb.size());
      (y[i] >= mean ? up : lo) = true;
    }
    if (up) e.upper.push_back(i);
    if (lo) e.lower.push_back(i);
  }
  return e;
}

std::vector<Point> select(const std::vector<double>& y, const std::vector<int>& idx) {
  std::vector<Point> pts;
  for (int i : idx) pts.push_back({static_cast<double>(i), y.at(i)});
  return pts;
}

// ---------------------------------------------------------------------------

double FitResult::operator()(double x) const {
  const auto& p = params;
  if (model == FitModel::kParabola) return (p[0] * x + p[1]) * x + p[2];
  return p[0] * std::sin(p[1] * x + p[2]) + p[3];
}

double rms_residual(const FitResult& fit, const std::vector<Point>& points) {
  double s = 0.0;
  for (const Point& pt : points) {
    const double r = pt.y - fit(pt.x);
    s += r * r;
  }
  return std::sqrt(s / static_cast<double>(points.size()));
}

namespace {

std::size_t distinct_x(const std::vector<Point>& pts) {
  std::set<double> xs;
  for (const Point& p : pts) xs.insert(p.x);
  return xs.size();
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  return a.colPivHouseholderQr().solve(b);
}

struct LinearSin {
  double a, b, c;  // a sin(wx) + b cos(wx) + c
  double sse;
};

LinearSin solve_at(const std::vector<Point>& pts, double w) {
  const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd m(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, 0) = std::sin(w * pts[i].x);
    m(i, 1) = std::cos(w * pts[i].x);
    m(i, 2) = 1.0;
    y(i) = pts[i].y;
  }
  const Eigen::VectorXd c = least_squares(m, y);
  return {c(0), c(1), c(2), (m * c - y).squaredNorm()};
}

}  // namespace

FitResult fit_parabola(const std::vector<Point>& pts) {
  if (distinct_x(pts) < 3) {
    throw ValidationError("parabola fit needs at least 3 distinct x values");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd m(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, 0) = pts[i].x * pts[i].x;
    m(i, 1) = pts[i].x;
    m(i, 2) = 1.0;
    y(i) = pts[i].y;
  }
  const Eigen::VectorXd c = least_squares(m, y);
  FitResult f{FitModel::kParabola, {c(0), c(1), c(2)}, 0.0};
  f.sigma = rms_residual(f, pts);
  return f;
}

FitResult fit_sinusoid(const std::vector<Point>& pts, const SinusoidOptions& opt) {
  if (distinct_x(pts) < 4) {
    throw ValidationError("sinusoid fit needs at least 4 distinct x values");
  }
  double seed = opt.omega_seed;
  if (seed <= 0.0) {
    const auto top = std::max_element(pts.begin(), pts.end(),
                                      [](const Point& a, const Point& b) { return a.y < b.y; });
    if (top->x <= 0.0) throw ValidationError("cannot seed the frequency: maximum at x <= 0");
    seed = std::numbers::pi / (2.0 * top->x);
  }
  const int grid = std::max(opt.grid, 3);
  const double lo = seed * (1.0 - opt.band);
  const double hi = seed * (1.0 + opt.band);
  const double dw = (hi - lo) / (grid - 1);
  int best = 0;
  double best_sse = INFINITY;
  for (int i = 0; i < grid; ++i) {
    const double sse = solve_at(pts, lo + i * dw).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best = i;
    }
  }
  // Golden-section refinement inside the neighbouring grid cells.
  double a = lo + std::max(best - 1, 0) * dw;
  double b = lo + std::min(best + 1, grid - 1) * dw;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = solve_at(pts, x1).sse, f2 = solve_at(pts, x2).sse;
  for (int it = 0; it < 100 && b - a > 1e-15 * seed; ++it) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - g * (b - a); f1 = solve_at(pts, x1).sse;
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + g * (b - a); f2 = solve_at(pts, x2).sse;
    }
  }
  double w = (a + b) / 2.0;
  if (solve_at(pts, w).sse > best_sse) w = lo + best * dw;
  const LinearSin s = solve_at(pts, w);
  FitResult f{FitModel::kSinusoid, {std::hypot(s.a, s.b), w, std::atan2(s.b, s.a), s.c}, 0.0};
  f.sigma = rms_residual(f, pts);
  return f;
}

EnvelopeFits fit_envelopes(const std::vector<double>& average, int quarter_cycles) {
  if (average.size() < 5) throw ValidationError("envelope fits need at least 5 steps");
  EnvelopeFits r;
  r.peak_step = static_cast<int>(std::max_element(average.begin(), average.end()) -
                                 average.begin());
  if (r.peak_step == 0) throw ValidationError("series peaks at step 0; nothing to fit");
  r.window_end = std::min<int>(quarter_cycles * r.peak_step,
                               static_cast<int>(average.size()) - 1);
  const std::vector<double> y(average.begin(), average.begin() + r.window_end + 1);
  const Envelopes e = split_envelopes(y);
  SinusoidOptions opt;
  opt.omega_seed = std::numbers::pi / (2.0 * r.peak_step);
  const auto up = select(y, e.upper), lo = select(y, e.lower);
  r.upper_parabola = fit_parabola(up);
  r.upper_sinusoid = fit_sinusoid(up, opt);
  r.lower_parabola = fit_parabola(lo);
  r.lower_sinusoid = fit_sinusoid(lo, opt);
  r.joint_parabola = fit_parabola(series_points(y));
  return r;
}

// ---------------------------------------------------------------------------

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const StepTrace& t) {
  const bool two_d = t.dims.size() == 2;
  os << (two_d ? "step,row,col,probability\n" : "step,node,probability\n");
  const std::size_t cols = two_d ? std::size_t{1} << t.dims[1] : 0;
  for (std::size_t m = 0; m < t.distributions.size(); ++m) {
    const Distribution& d = t.distributions[m];
    for (std::size_t n = 0; n < d.size(); ++n) {
      os << m << ',';
      if (two_d) os << n / cols << ',' << n % cols;
      else os << n;
      os << ',' << format_number(d[n]) << '\n';
    }
  }
}

void write_summary_csv(std::ostream& os, const StepTrace& t) {
  os << "step,avg_node\n";
  for (std::size_t m = 0; m < t.average.size(); ++m) {
    os << m << ',' << format_number(t.average[m]) << '\n';
  }
}

std::vector<Point> read_summary_csv(std::istream& is) {
  std::vector<Point> pts;
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream row(line);
    Point p;
    char comma = 0;
    if (!(row >> p.x >> comma >> p.y) || comma != ',') {
      throw ValidationError("malformed CSV row " + std::to_string(lineno) + ": " + line);
    }
    pts.push_back(p);
  }
  return pts;
}

void write_peak_report(std::ostream& os, const PeakStats& p) {
  os << "peak_step=" << p.peak_step << '\n'
     << "peak_avg_node=" << format_number(p.peak_avg_node) << '\n'
     << "peak_right_half_prob=" << format_number(p.peak_right_half_prob) << '\n';
}

void write_fit_report(std::ostream& os, const std::string& prefix, const FitResult& f) {
  const std::string k = prefix.empty() ? "" : prefix + ".";
  if (f.model == FitModel::kParabola) {
    os << k << "model=parabola\n"
       << k << "a=" << format_number(f.params[0]) << '\n'
       << k << "b=" << format_number(f.params[1]) << '\n'
       << k << "c=" << format_number(f.params[2]) << '\n';
  } else {
    os << k << "model=sinusoid\n"
       << k << "amplitude=" << format_number(f.params[0]) << '\n'
       << k << "omega=" << format_number(f.params[1]) << '\n'
       << k << "delta=" << format_number(f.params[2]) << '\n'
       << k << "offset=" << format_number(f.params[3]) << '\n';
  }
  os << k << "sigma=" << format_number(f.sigma) << '\n';
}

}  // namespace qwalk
