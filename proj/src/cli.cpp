#include "qwalk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "qwalk/analysis.hpp"
#include "qwalk/decompose.hpp"
#include "qwalk/qasm.hpp"
#include "qwalk/router.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {
namespace fs = std::filesystem;

namespace {

/// Resolved settings of one run, echoed to manifest.txt.
struct RunConfig {
  std::string subcommand;
  fs::path out_dir;
  unsigned seed = 0;  // reserved; every pipeline is deterministic
  std::vector<std::pair<std::string, std::string>> settings;

  void set(const std::string& key, const std::string& value) {
    settings.emplace_back(key, value);
  }
};

fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("QWALK_OUT_DIR"); env && *env) return env;
  return ".";
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void write_manifest(const RunConfig& cfg) {
  std::ostringstream os;
  os << "subcommand=" << cfg.subcommand << "\n";
  for (const auto& [k, v] : cfg.settings) os << k << "=" << v << "\n";
  os << "out=" << cfg.out_dir.string() << "\nseed=" << cfg.seed << "\n";
  write_file(cfg.out_dir / "manifest.txt", os.str());
}

void prepare(RunConfig& cfg, const std::string& out_flag) {
  cfg.out_dir = resolve_out_dir(out_flag);
  fs::create_directories(cfg.out_dir);
}

std::vector<BasisIndex> parse_numbers(const std::string& text) {
  std::vector<BasisIndex> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("expected a non-negative integer, got '" + part + "'");
    }
    out.push_back(std::stoull(part));
  }
  return out;
}

InitialState parse_initial(const std::string& text, const std::vector<int>& dims) {
  if (text == "uniform") return InitialState::uniform();
  const std::string prefix = "basis:";
  if (text.rfind(prefix, 0) != 0) {
    throw ValidationError("initial state must be 'uniform' or 'basis:<node>,<coin>'");
  }
  const auto n = parse_numbers(text.substr(prefix.size()));
  if (n.size() == 2) return InitialState::basis(n[0], n[1]);
  if (n.size() == 3 && dims.size() == 2) {
    return InitialState::basis((n[0] << dims[1]) | n[1], n[2]);
  }
  throw ValidationError("basis start takes <node>,<coin> (or <row>,<col>,<coin> in 2D)");
}

InitCheck parse_init_check(const std::string& mode, const InitialState& init) {
  if (mode == "strict") return InitCheck::kStrict;
  if (mode == "allow-leak") return InitCheck::kAllowLeak;
  // Auto: the uniform start of the reference walks touches the forbidden
  // states, so it is allowed to leak; basis starts are held to the guard.
  return init.kind == InitialState::Kind::kUniform ? InitCheck::kAllowLeak
                                                   : InitCheck::kStrict;
}

BoundarySpec parse_boundary_2d(const std::string& text, double phase) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ValidationError("boundary must be single:v,h,dirs or global:axis,value");
  }
  const std::string kind = text.substr(0, colon);
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(colon + 1));
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (kind == "single" && parts.size() == 3) {
    const auto vh = parse_numbers(parts[0] + "," + parts[1]);
    return BoundarySpec::single(vh[0], vh[1], parse_directions(parts[2]), phase);
  }
  if (kind == "global" && parts.size() == 2) {
    int axis = -1;
    if (parts[0] == "v" || parts[0] == "0") axis = 0;
    if (parts[0] == "h" || parts[0] == "1") axis = 1;
    if (axis < 0) throw ValidationError("global boundary axis must be v or h");
    return BoundarySpec::global(axis, parse_numbers(parts[1]).at(0), phase);
  }
  throw ValidationError("boundary must be single:v,h,dirs or global:axis,value, got '" +
                        text + "'");
}

std::string init_name(const InitialState& i) {
  if (i.kind == InitialState::Kind::kUniform) return "uniform";
  return "basis:" + std::to_string(i.node) + "," + std::to_string(i.coin);
}

// Shared tail of walk1d / walk2d.
void run_walk(const WalkSpec& spec, RunConfig& cfg, bool emit_qasm, std::ostream& out) {
  cfg.set("init_check", spec.init_check == InitCheck::kStrict ? "strict" : "allow-leak");
  const StepTrace trace = trace_walk(spec);
  std::ostringstream trace_csv, summary_csv, report;
  write_trace_csv(trace_csv, trace);
  write_summary_csv(summary_csv, trace);
  write_file(cfg.out_dir / "trace.csv", trace_csv.str());
  write_file(cfg.out_dir / "summary.csv", summary_csv.str());
  if (trace.steps() >= 1) write_peak_report(report, peak_stats(trace));
  report << "steps=" << spec.steps << "\n";
  if (spec.bounded()) {
    report << "initial_leak=" << format_number(initial_leak(spec)) << "\n";
    if (!trace.forbidden.empty()) {
      const double worst = *std::max_element(trace.forbidden.begin(), trace.forbidden.end());
      report << "max_forbidden=" << format_number(worst) << "\n";
    }
    report << "blocked_edges=";
    const auto edges = blocked_edges(spec);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      report << (i ? ";" : "") << edges[i].first << "-" << edges[i].second;
    }
    report << "\n";
  }
  write_file(cfg.out_dir / "peak.txt", report.str());
  if (emit_qasm) {
    Circuit c = preparation_circuit(spec);
    c.append(walk_circuit(spec));
    write_file(cfg.out_dir / "walk.qasm", to_qasm(c, {.measure = true}));
  }
  write_manifest(cfg);
  out << report.str() << "wrote " << cfg.out_dir.string() << "\n";
}

struct WalkFlags {
  int steps = 0;
  std::string initial = "uniform";
  std::string init_check = "auto";
  double phase = 0.0;
  std::string coin = "hadamard";
  bool qasm = false;
  std::string out;
};

void add_walk_flags(CLI::App* sub, WalkFlags& f) {
  sub->add_option("--steps", f.steps, "Number of walk steps M")->required()->check(
      CLI::NonNegativeNumber);
  sub->add_option("--initial", f.initial, "uniform | basis:<node>,<coin>")
      ->capture_default_str();
  sub->add_option("--init-check", f.init_check,
                  "auto | strict | allow-leak (auto: allow-leak for uniform)")
      ->check(CLI::IsMember({"auto", "strict", "allow-leak"}))
      ->capture_default_str();
  sub->add_option("--phase", f.phase, "Boundary phase in radians")->capture_default_str();
  sub->add_option("--coin", f.coin, "Coin operator")
      ->check(CLI::IsMember({"hadamard"}))
      ->capture_default_str();
  sub->add_flag("--qasm", f.qasm, "Also write walk.qasm");
  sub->add_option("--out", f.out, "Output directory (default $QWALK_OUT_DIR or .)");
}

void common_settings(RunConfig& cfg, const WalkFlags& f, const WalkSpec& spec) {
  cfg.set("steps", std::to_string(f.steps));
  cfg.set("initial", init_name(spec.initial));
  cfg.set("phase", format_number(f.phase));
  cfg.set("coin", f.coin);
}

// ---------------------------------------------------------------------------

std::vector<std::string> split_counts(const GateCounts& k, const std::string& prefix) {
  std::vector<std::string> lines;
  std::stringstream ss(to_string(k));
  for (std::string l; std::getline(ss, l);) lines.push_back(prefix + l);
  return lines;
}

void run_experiment(const std::string& kind, const std::string& param, bool routed,
                    RunConfig& cfg, std::ostream& out) {
  Circuit logical;
  BasisIndex expected = 0;
  std::optional<RoutedCircuit> lowered;
  if (kind == "qft-roundtrip") {
    if (!std::regex_match(param, std::regex("[01]{3}"))) {
      throw ValidationError("qft-roundtrip takes a 3-bit state such as 011");
    }
    const int bits = std::stoi(param, nullptr, 2);
    logical = qft_roundtrip_experiment(bits);
    expected = static_cast<BasisIndex>(bits) << 1;
    if (routed) lowered = routed_qft_roundtrip(bits);
  } else {
    if (!std::regex_match(param, std::regex("[0-9]+"))) {
      throw ValidationError("shift takes a repetition count 1..7");
    }
    const int k = std::stoi(param);
    logical = shift_experiment(k);
    expected = static_cast<BasisIndex>(k % 8) << 1;
    if (routed) lowered = routed_shift_experiment(k);
  }
  const WalkState target = new_basis_state(logical.num_qubits(), expected);
  WalkState s(logical.num_qubits());
  apply_circuit(s, logical);
  std::ostringstream report;
  report << "kind=" << kind << "\nparam=" << param << "\n";
  report << "fidelity=" << format_number(fidelity(s, target)) << "\n";
  for (const auto& l : split_counts(gate_counts(logical), "logical.")) report << l << "\n";
  std::string qasm = to_qasm(logical, {.measure = true});
  if (lowered) {
    const WalkState r = run_routed(*lowered, WalkState(logical.num_qubits()));
    report << "routed.fidelity=" << format_number(fidelity(r, target)) << "\n";
    report << "routed.qft_swaps=2\nrouted.swaps=" << lowered->swap_count() << "\n";
    for (const auto& l : split_counts(gate_counts(lowered->circuit), "routed.")) {
      report << l << "\n";
    }
    qasm = to_qasm(lowered->circuit, {.measure = true});
  }
  write_file(cfg.out_dir / "experiment.qasm", qasm);
  write_file(cfg.out_dir / "counts.txt", report.str());
  write_manifest(cfg);
  out << report.str() << "wrote " << cfg.out_dir.string() << "\n";
}

CouplingGraph parse_patch(const std::string& patch) {
  if (patch == "heavy-hex") return CouplingGraph::heavy_hex_patch(true);
  if (patch == "heavy-hex-nospare") return CouplingGraph::heavy_hex_patch(false);
  return CouplingGraph::load_edge_list(patch);
}

void run_route(const std::string& strategy, const WalkSpec& spec, const CouplingGraph& graph,
               RunConfig& cfg, std::ostream& out) {
  struct Row {
    std::string name;
    RoutedCircuit step;
  };
  std::vector<Row> rows;
  const bool has_spare = graph.num_qubits() > 9 && graph.adjacent(4, 9);
  rows.push_back({"single", lower_walk2d_single_ancilla(
                                spec, graph, walk2d_patch_layout(graph, false))});
  if (strategy == "dual" || has_spare) {
    rows.push_back({"dual", lower_walk2d_dual_ancilla(
                                spec, graph, walk2d_patch_layout(graph, true))});
  }
  WalkSpec abstract = spec;
  const Distribution want = marginal_distribution(
      applied(initial_state(abstract), walk_2d(abstract)), walk_layout(spec).nodes());

  std::ostringstream csv;
  csv << "strategy,steps,swaps,transport_swaps_per_shift,cx,depth,two_qubit_depth,"
         "two_qubit_depth_ratio,equivalent\n";
  double single_depth = 0.0;
  for (const Row& r : rows) {
    const RoutedCircuit full = repeat(r.step, spec.steps);
    const GateCounts k = gate_counts(full.circuit);
    if (r.name == "single") single_depth = static_cast<double>(k.two_qubit_depth);
    const Distribution got = simulate_routed_walk2d(spec, r.step);
    double err = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) err = std::max(err, std::abs(got[i] - want[i]));
    std::string transport;
    for (std::size_t i = 0; i < r.step.transport_swaps.size(); ++i) {
      transport += (i ? ";" : "") + std::to_string(r.step.transport_swaps[i]);
    }
    const double ratio = single_depth > 0 ? k.two_qubit_depth / single_depth : 1.0;
    csv << r.name << ',' << spec.steps << ',' << full.swap_count() << ',' << transport << ','
        << k.cx << ',' << k.depth << ',' << k.two_qubit_depth << ','
        << format_number(ratio) << ',' << (err <= 1e-9 ? "pass" : "fail") << '\n';
    if (r.name == strategy) {
      write_file(cfg.out_dir / "routed.qasm", to_qasm(full.circuit));
    }
  }
  write_file(cfg.out_dir / "comparison.csv", csv.str());
  write_manifest(cfg);
  out << csv.str() << "wrote " << cfg.out_dir.string() << "\n";
}

void run_fit(const std::string& input, const std::string& model, bool envelopes,
             int quarter_cycles, RunConfig& cfg, std::ostream& out) {
  std::ifstream in(input);
  if (!in) throw ValidationError("cannot read " + input);
  const std::vector<Point> pts = read_summary_csv(in);
  if (pts.empty()) throw ValidationError(input + " holds no data rows");
  std::ostringstream report;
  const bool par = model != "sinusoid", sin = model != "parabola";
  if (envelopes) {
    std::vector<double> y;
    for (const Point& p : pts) y.push_back(p.y);
    const int k = quarter_cycles > 0 ? quarter_cycles : static_cast<int>(y.size());
    const EnvelopeFits f = fit_envelopes(y, k);
    report << "peak_step=" << f.peak_step << "\nwindow_end=" << f.window_end << "\n";
    for (const auto& [name, p, s] :
         {std::tuple{"upper", f.upper_parabola, f.upper_sinusoid},
          std::tuple{"lower", f.lower_parabola, f.lower_sinusoid}}) {
      if (par) write_fit_report(report, std::string(name) + ".parabola", p);
      if (sin) write_fit_report(report, std::string(name) + ".sinusoid", s);
      if (par && sin) {
        report << name << ".sigma_gap=" << format_number(s.sigma - p.sigma) << "\n";
      }
    }
    if (par) report << "joint.parabola.sigma=" << format_number(f.joint_parabola.sigma) << "\n";
  } else {
    const auto top = std::max_element(pts.begin(), pts.end(),
                                      [](const Point& a, const Point& b) { return a.y < b.y; });
    const std::size_t peak = static_cast<std::size_t>(top - pts.begin());
    std::vector<Point> window = pts;
    if (quarter_cycles > 0 && peak > 0) {
      window.resize(std::min(pts.size(), quarter_cycles * peak + 1));
    }
    report << "points=" << window.size() << "\n";
    FitResult p, s;
    if (par) {
      p = fit_parabola(window);
      write_fit_report(report, "parabola", p);
    }
    if (sin) {
      s = fit_sinusoid(window);
      write_fit_report(report, "sinusoid", s);
    }
    if (par && sin) report << "sigma_gap=" << format_number(s.sigma - p.sigma) << "\n";
  }
  write_file(cfg.out_dir / "fit.txt", report.str());
  write_manifest(cfg);
  out << report.str() << "wrote " << cfg.out_dir.string() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coined quantum walk circuits: build, simulate, route, analyse", "qwalk"};
  app.require_subcommand(1);

  // walk1d
  auto* w1 = app.add_subcommand("walk1d", "Simulate a 1D walk on 2^N nodes");
  int node_qubits = 0;
  std::vector<std::string> boundaries1;
  WalkFlags f1;
  w1->add_option("--node-qubits", node_qubits, "Node qubits N")->required();
  w1->add_option("--boundary", boundaries1, "Block the edge between b and b+1 (repeatable)");
  add_walk_flags(w1, f1);

  // walk2d
  auto* w2 = app.add_subcommand("walk2d", "Simulate a 2D walk on a 2^Nv x 2^Nh torus");
  int v_qubits = 0, h_qubits = 0;
  std::vector<std::string> boundaries2;
  WalkFlags f2;
  w2->add_option("--v-qubits", v_qubits, "Vertical node qubits")->required();
  w2->add_option("--h-qubits", h_qubits, "Horizontal node qubits")->required();
  w2->add_option("--boundary", boundaries2,
                 "single:v,h,dirs (dirs from u,d,l,r) or global:v|h,value (repeatable)");
  add_walk_flags(w2, f2);

  // experiment
  auto* ex = app.add_subcommand("experiment", "Emit a hardware-experiment circuit");
  std::string kind, param, ex_out;
  bool routed = false;
  ex->add_option("--kind", kind, "qft-roundtrip | shift")
      ->required()
      ->check(CLI::IsMember({"qft-roundtrip", "shift"}));
  ex->add_option("--param", param, "3-bit state (qft-roundtrip) or k in 1..7 (shift)")
      ->required();
  ex->add_flag("--routed", routed, "Lower onto the 4-qubit T-junction");
  ex->add_option("--out", ex_out, "Output directory");

  // route
  auto* rt = app.add_subcommand("route", "Route one 2D walk step onto the heavy-hex patch");
  std::string strategy, patch = "heavy-hex", rt_init = "uniform", rt_out;
  int rt_steps = 1;
  rt->add_option("--strategy", strategy, "single | dual")
      ->required()
      ->check(CLI::IsMember({"single", "dual"}));
  rt->add_option("--steps", rt_steps, "Steps to route")->capture_default_str()->check(
      CLI::NonNegativeNumber);
  rt->add_option("--patch", patch, "heavy-hex | heavy-hex-nospare | <edge-list file>")
      ->capture_default_str();
  rt->add_option("--initial", rt_init, "Start state for the equivalence check")
      ->capture_default_str();
  rt->add_option("--out", rt_out, "Output directory");

  // fit
  auto* ft = app.add_subcommand("fit", "Fit parabola / sinusoid to an average-node series");
  std::string input, model = "both", ft_out;
  bool envelopes = false;
  int quarter_cycles = 2;
  ft->add_option("--input", input, "summary.csv from walk1d/walk2d")->required();
  ft->add_option("--model", model, "parabola | sinusoid | both")
      ->check(CLI::IsMember({"parabola", "sinusoid", "both"}))
      ->capture_default_str();
  ft->add_flag("--envelopes", envelopes, "Fit the upper and lower envelopes separately");
  ft->add_option("--quarter-cycles", quarter_cycles,
                 "Fit steps 0..k*peak_step; 0 uses every point")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  ft->add_option("--out", ft_out, "Output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg;
    if (w1->parsed()) {
      WalkSpec spec;
      spec.dims = {node_qubits};
      spec.steps = f1.steps;
      spec.initial = parse_initial(f1.initial, spec.dims);
      spec.init_check = parse_init_check(f1.init_check, spec.initial);
      for (const auto& b : boundaries1) {
        spec.boundaries.push_back(BoundarySpec::line(parse_numbers(b).at(0), f1.phase));
      }
      spec.validate();
      cfg.subcommand = "walk1d";
      prepare(cfg, f1.out);
      cfg.set("node_qubits", std::to_string(node_qubits));
      cfg.set("boundary", CLI::detail::join(boundaries1, ";"));
      common_settings(cfg, f1, spec);
      run_walk(spec, cfg, f1.qasm, out);
    } else if (w2->parsed()) {
      WalkSpec spec;
      spec.dims = {v_qubits, h_qubits};
      spec.steps = f2.steps;
      spec.initial = parse_initial(f2.initial, spec.dims);
      spec.init_check = parse_init_check(f2.init_check, spec.initial);
      for (const auto& b : boundaries2) spec.boundaries.push_back(parse_boundary_2d(b, f2.phase));
      spec.validate();
      cfg.subcommand = "walk2d";
      prepare(cfg, f2.out);
      cfg.set("v_qubits", std::to_string(v_qubits));
      cfg.set("h_qubits", std::to_string(h_qubits));
      cfg.set("boundary", CLI::detail::join(boundaries2, ";"));
      common_settings(cfg, f2, spec);
      run_walk(spec, cfg, f2.qasm, out);
    } else if (ex->parsed()) {
      cfg.subcommand = "experiment";
      prepare(cfg, ex_out);
      cfg.set("kind", kind);
      cfg.set("param", param);
      cfg.set("routed", routed ? "true" : "false");
      run_experiment(kind, param, routed, cfg, out);
    } else if (rt->parsed()) {
      WalkSpec spec;
      spec.dims = {3, 3};
      spec.steps = rt_steps;
      spec.initial = parse_initial(rt_init, spec.dims);
      const CouplingGraph graph = parse_patch(patch);
      cfg.subcommand = "route";
      prepare(cfg, rt_out);
      cfg.set("strategy", strategy);
      cfg.set("steps", std::to_string(rt_steps));
      cfg.set("patch", patch);
      cfg.set("initial", init_name(spec.initial));
      run_route(strategy, spec, graph, cfg, out);
    } else if (ft->parsed()) {
      cfg.subcommand = "fit";
      prepare(cfg, ft_out);
      cfg.set("input", input);
      cfg.set("model", model);
      cfg.set("envelopes", envelopes ? "true" : "false");
      cfg.set("quarter_cycles", std::to_string(quarter_cycles));
      run_fit(input, model, envelopes, quarter_cycles, cfg, out);
    }
  } catch (const std::invalid_argument& e) {  // ValidationError included
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace qwalk
