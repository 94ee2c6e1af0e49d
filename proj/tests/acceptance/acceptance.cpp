// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "qwalk/analysis.hpp"
#include "qwalk/decompose.hpp"
#include "qwalk/qasm.hpp"
#include "qwalk/router.hpp"
#include "qwalk/unitary.hpp"
#include "qwalk/walk.hpp"
#include "support/oracle.hpp"
#include "support/qasm_reader.hpp"

using namespace qwalk;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<Qubit> range(int from, int to) {
  std::vector<Qubit> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

double max_trace_error(const StepTrace& t, const std::vector<std::vector<double>>& want) {
  if (t.distributions.size() != want.size()) return INFINITY;
  double err = 0.0;
  for (std::size_t s = 0; s < want.size(); ++s) {
    for (std::size_t n = 0; n < want[s].size(); ++n) {
      err = std::max(err, std::abs(t.distributions[s][n] - want[s][n]));
    }
  }
  return err;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

WalkSpec bounded_uniform(int n) {
  WalkSpec s;
  s.dims = {n};
  s.steps = 2 << n;
  s.initial = InitialState::uniform();
  s.init_check = InitCheck::kAllowLeak;
  s.boundaries = {BoundarySpec::line((BasisIndex{1} << n) - 1)};
  return s;
}

WalkState random_state(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  for (auto& z : a) z = {g(rng), g(rng)};
  WalkState s(n, std::move(a));
  s.normalize();
  return s;
}

Verdict adder() {
  const auto t0 = Clock::now();
  double err = 0.0;
  int cases = 0;
  for (int n = 2; n <= 6; ++n) {
    const Register reg = plain_register(n);
    const auto all = range(0, n);
    for (int j = 1; j <= n; ++j) {
      for (int sign : {+1, -1}) {
        Circuit c = qft(reg, all);
        const auto subset = range(n - j, n);
        c.append(qadd(reg, all, subset, sign, {}));
        c.append(qft_dag(reg, all));
        const auto want = oracle::modular_add(n, sign * (oracle::Index{1} << (n - j)));
        err = std::max(err, (unitary_of(c) - want).cwiseAbs().maxCoeff());
        ++cases;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {err <= 1e-9 && secs < 10.0, std::to_string(cases) + " cases, max error " +
                                           fmt("%.2e", err) + ", " + fmt("%.2f", secs) + " s"};
}

Verdict oracle_equivalence() {
  const auto t0 = Clock::now();
  WalkSpec w1;
  w1.dims = {4};
  w1.steps = 10;
  w1.initial = InitialState::basis(0, 0);
  const double e1 = max_trace_error(
      trace_walk(w1), oracle::trace(oracle::coin_1d(4), oracle::shift_1d(4),
                                    oracle::basis(32, 0), 10, 1));
  WalkSpec w2;
  w2.dims = {2, 2};
  w2.steps = 5;
  w2.initial = InitialState::basis(5, 0);
  const double e2 = max_trace_error(
      trace_walk(w2), oracle::trace(oracle::coin_2d(2, 2), oracle::shift_2d(2, 2),
                                    oracle::basis(64, 20), 5, 2));
  const double secs = seconds_since(t0);
  return {e1 <= 1e-9 && e2 <= 1e-9 && secs < 5.0,
          "1D error " + fmt("%.2e", e1) + ", 2D error " + fmt("%.2e", e2) + ", " +
              fmt("%.2f", secs) + " s"};
}

Verdict no_leak() {
  WalkSpec line;
  line.dims = {3};
  line.steps = 50;
  line.initial = InitialState::basis(2, 0);
  line.boundaries = {BoundarySpec::line(5)};
  const double l1 = max_of(trace_walk(line).forbidden);
  WalkSpec grid;
  grid.dims = {2, 2};
  grid.steps = 50;
  grid.initial = InitialState::basis(0, 0);
  grid.boundaries = {BoundarySpec::single(1, 1, kLeft)};
  const double l2 = max_of(trace_walk(grid).forbidden);
  return {l1 <= 1e-9 && l2 <= 1e-9,
          "1D |5>|0>,|6>|1> max prob " + fmt("%.2e", l1) + "; 2D |5>|10> max prob " +
              fmt("%.2e", l2)};
}

Verdict peak_concentration() {
  const auto t0 = Clock::now();
  const PeakStats p = peak_stats(trace_walk(bounded_uniform(6)));
  const double secs = seconds_since(t0);
  return {p.peak_right_half_prob >= 0.85 && secs < 30.0,
          "right-half probability " + fmt("%.4f", p.peak_right_half_prob) + " at step " +
              std::to_string(p.peak_step) + " (needs >= 0.85), " + fmt("%.2f", secs) + " s"};
}

Verdict period_doubling() {
  int steps[7] = {};
  for (int n = 4; n <= 6; ++n) steps[n] = peak_stats(trace_walk(bounded_uniform(n))).peak_step;
  std::ifstream in(std::string(QWALK_FIXTURES) + "/peak_steps.csv");
  std::string line;
  std::getline(in, line);
  bool fixture_ok = true;
  while (std::getline(in, line)) {
    int n = 0, s = 0;
    char comma = 0;
    std::istringstream(line) >> n >> comma >> s;
    if (n >= 4 && n <= 6) fixture_ok &= steps[n] == s;
  }
  const double r45 = double(steps[5]) / steps[4], r56 = double(steps[6]) / steps[5];
  const bool in_band = r45 >= 1.8 && r45 <= 2.2 && r56 >= 1.8 && r56 <= 2.2;
  return {in_band && fixture_ok,
          "peak steps " + std::to_string(steps[4]) + "/" + std::to_string(steps[5]) + "/" +
              std::to_string(steps[6]) + ", ratios " + fmt("%.3f", r45) + " and " +
              fmt("%.3f", r56) + (fixture_ok ? ", fixture match" : ", FIXTURE MISMATCH")};
}

Verdict fit_comparison() {
  const EnvelopeFits f = fit_envelopes(trace_walk(bounded_uniform(6)).average);
  const double gu = f.upper_sinusoid.sigma - f.upper_parabola.sigma;
  const double gl = f.lower_sinusoid.sigma - f.lower_parabola.sigma;
  const bool ok = gu >= 0.1 && gu <= 0.5 && gl >= 0.1 && gl <= 0.5;
  return {ok, "upper sigma " + fmt("%.4f", f.upper_parabola.sigma) + " vs " +
                  fmt("%.4f", f.upper_sinusoid.sigma) + " (gap " + fmt("%.3f", gu) +
                  "), lower " + fmt("%.4f", f.lower_parabola.sigma) + " vs " +
                  fmt("%.4f", f.lower_sinusoid.sigma) + " (gap " + fmt("%.3f", gl) + ")"};
}

Verdict gate_accounting() {
  const WalkLayout l = walk_layout(std::vector<int>{3});
  const Circuit add = qadd(l.reg, l.dims[0], l.dims[0], +1, std::vector<Qubit>{l.coins[0]});
  const GateCounts k = gate_counts(add);
  const double err = distance_up_to_phase(unitary_of(decompose_to_basis(add)), unitary_of(add));
  return {k.cx == 6 && k.phase == 9 && k.h + k.x == 0 && err <= 1e-9,
          "CX " + std::to_string(k.cx) + ", phase gates " + std::to_string(k.phase) +
              " (reference figure: 9), other single-qubit " + std::to_string(k.h + k.x)};
}

Verdict junction_routing() {
  const CouplingGraph g = CouplingGraph::t_junction();
  const RoutedCircuit fwd = lower_qft3_junction(g, junction_layout());
  const RoutedCircuit dag = lower_qft3_dag_junction(g, junction_layout());
  const bool home = dag.final.same_mapping(junction_layout());
  const WalkLayout l = walk_layout(std::vector<int>{3});
  const Circuit abstract = qft(l.reg, l.dims[0]);
  std::mt19937 rng(5);
  double worst = 1.0;
  for (int t = 0; t < 20; ++t) {
    const WalkState in = random_state(4, rng);
    worst = std::min(worst, fidelity(run_routed(fwd, in), applied(in, abstract)));
  }
  const bool ok = fwd.swap_count() == 2 && home && worst >= 1.0 - 1e-9 &&
                  respects_coupling(fwd.circuit, g);
  return {ok, std::to_string(fwd.swap_count()) + " SWAPs, returns home: " +
                  (home ? "yes" : "no") + ", min fidelity " + fmt("%.12f", worst)};
}

Verdict heavy_hex_routing() {
  const CouplingGraph g = CouplingGraph::heavy_hex_patch();
  WalkSpec s;
  s.dims = {3, 3};
  s.steps = 1;
  s.initial = InitialState::basis(0, 0);
  const RoutedCircuit single = lower_walk2d_single_ancilla(s, g, walk2d_patch_layout(g, false));
  const RoutedCircuit dual = lower_walk2d_dual_ancilla(s, g, walk2d_patch_layout(g, true));
  bool four = single.transport_swaps.size() == 4;
  for (int k : single.transport_swaps) four &= k == 4;
  const GateCounts a = gate_counts(single.circuit), b = gate_counts(dual.circuit);
  const double ratio = double(b.two_qubit_depth) / double(a.two_qubit_depth);
  return {four && b.two_qubit_depth < a.two_qubit_depth,
          "transport SWAPs per shift 4/4/4/4: " + std::string(four ? "yes" : "no") +
              "; two-qubit depth single " + std::to_string(a.two_qubit_depth) + ", dual " +
              std::to_string(b.two_qubit_depth) + " (ratio " + fmt("%.3f", ratio) +
              "); full depth " + std::to_string(a.depth) + " vs " + std::to_string(b.depth)};
}

Verdict invariants() {
  const auto t0 = Clock::now();
  std::vector<WalkSpec> variants;
  WalkSpec w;
  w.dims = {4};
  w.steps = 100;
  w.initial = InitialState::basis(3, 0);
  variants.push_back(w);  // 1D periodic
  w.boundaries = {BoundarySpec::line(9, 0.6)};
  variants.push_back(w);  // 1D bounded
  w.dims = {2, 2};
  w.boundaries.clear();
  w.initial = InitialState::basis(6, 1);
  variants.push_back(w);  // 2D periodic
  w.boundaries = {BoundarySpec::single(1, 2, kLeft | kDown, 0.3)};
  w.initial = InitialState::basis(15, 0);
  variants.push_back(w);  // 2D single state
  w.boundaries = {BoundarySpec::global(0, 2)};
  w.initial = InitialState::basis(1, 0);
  variants.push_back(w);  // 2D global
  double norm_err = 0.0;
  for (const WalkSpec& v : variants) {
    for (const Distribution& d : trace_walk(v).distributions) {
      norm_err = std::max(norm_err, std::abs(d.total() - 1.0));
    }
  }

  std::mt19937 rng(23);
  double adj_err = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    Circuit c(n);
    for (int i = 0; i < 50; ++i) {
      const int a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
      switch (rng() % 4) {
        case 0: c.h(a); break;
        case 1: c.cx(a, b); break;
        case 2: c.cp(a, b, 0.1 * (rng() % 60)); break;
        default: c.swap(a, b);
      }
    }
    const WalkState s = random_state(n, rng);
    adj_err = std::max(adj_err, 1.0 - fidelity(applied(applied(s, c), adjoint(c)), s));
  }

  double qasm_err = 0.0;
  bool structure = true;
  for (int k = 1; k <= 3; ++k) {
    const Circuit c = shift_experiment(k);
    const auto p = testing_qasm::read(to_qasm(c, {.measure = true}));
    structure &= p.header.at(0) == "OPENQASM 2.0;" && p.num_qubits == 4 && p.measures == 4;
    qasm_err = std::max(qasm_err, distance_up_to_phase(unitary_of(p.circuit), unitary_of(c)));
  }
  const double secs = seconds_since(t0);
  const bool ok = norm_err <= 1e-10 && adj_err <= 1e-9 && qasm_err <= 1e-9 && structure;
  return {ok, "norm drift " + fmt("%.2e", norm_err) + ", adjoint infidelity " +
                  fmt("%.2e", adj_err) + ", QASM round trip " + fmt("%.2e", qasm_err) + ", " +
                  fmt("%.2f", secs) + " s"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"adder correctness", adder},
      {"walk oracle equivalence", oracle_equivalence},
      {"boundary no-leak", no_leak},
      {"peak concentration", peak_concentration},
      {"period doubling", period_doubling},
      {"fit comparison", fit_comparison},
      {"gate accounting", gate_accounting},
      {"junction QFT routing", junction_routing},
      {"2D routing strategies", heavy_hex_routing},
      {"invariant suite", invariants},
  };
  const auto t0 = Clock::now();
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Verdict v{false, ""};
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("criterion %2d %-24s %s  %s\n", index++, name, v.pass ? "PASS" : "FAIL",
                v.detail.c_str());
  }
  std::printf("%d of %d criteria passed in %.1f s\n", 10 - failed, 10, seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
