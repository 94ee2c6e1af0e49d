#include "qwalk/router.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <utility>

#include "qwalk/decompose.hpp"

namespace qwalk {
namespace {

using std::numbers::pi;

Register physical_register(int n) {
  Register r;
  for (int i = 0; i < n; ++i) r.push_back({Role::kPhysical, 0, i});
  return r;
}

Gate to_physical_gate(Gate g, const Layout& l) {
  for (Qubit& q : g.targets) q = l.physical(q);
  for (Qubit& q : g.controls) q = l.physical(q);
  return g;
}

// Emits logical gates through a live layout onto a physical circuit.
class Emitter {
 public:
  Emitter(const CouplingGraph& graph, const Layout& initial)
      : circuit_(physical_register(graph.num_qubits())),
        start_(initial.num_logical(), initial.mapping()),
        layout_(start_) {}

  PhysicalQubit at(Qubit logical) const { return layout_.physical(logical); }
  void gate(const Gate& logical) { circuit_.add(to_physical_gate(logical, layout_)); }
  void swap(PhysicalQubit a, PhysicalQubit b) {
    circuit_.swap(a, b);
    layout_.swap(a, b);
    ++swaps_;
  }
  void relabel(PhysicalQubit a, PhysicalQubit b) { layout_.relabel(a, b); }
  int take_swaps() { return std::exchange(swaps_, 0); }

  RoutedCircuit finish(std::vector<int> transport = {}) {
    return {std::move(circuit_), start_, layout_, std::move(transport)};
  }

 private:
  Circuit circuit_;
  Layout start_;
  Layout layout_;
  int swaps_ = 0;
};

Layout reversed(const Layout& done) {
  Layout l(done.num_logical(), done.mapping());
  const auto& log = done.log();
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    if (it->kind == LayoutEvent::Kind::kSwap) l.swap(it->a, it->b);
    else l.relabel(it->a, it->b);
  }
  return l;
}

}  // namespace

std::size_t RoutedCircuit::swap_count() const {
  return count_kind(circuit, GateKind::kSwap);
}

WalkState to_physical(const WalkState& logical, const Layout& layout) {
  if (logical.num_qubits() != layout.num_logical()) {
    throw ValidationError("state size does not match the layout");
  }
  return embed(logical, layout.positions(), layout.num_physical());
}

WalkState to_logical(const WalkState& physical, const Layout& layout) {
  return extract(physical, layout.positions());
}

WalkState run_routed(const RoutedCircuit& routed, const WalkState& logical) {
  WalkState s = to_physical(logical, routed.initial);
  apply_circuit(s, routed.circuit);
  return to_logical(s, routed.final);
}

bool respects_coupling(const Circuit& physical, const CouplingGraph& graph) {
  for (const Gate& g : physical.gates()) {
    const auto qs = g.qubits();
    if (qs.size() == 2 && !graph.adjacent(qs[0], qs[1])) return false;
    if (qs.size() > 2 && !graph.connected(qs)) return false;
  }
  return true;
}

std::set<std::pair<Qubit, Qubit>> connectivity_requirements(const Circuit& circuit) {
  std::set<std::pair<Qubit, Qubit>> out;
  for (const Gate& g : circuit.gates()) {
    const auto qs = g.qubits();
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (std::size_t j = i + 1; j < qs.size(); ++j) {
        out.emplace(std::min(qs[i], qs[j]), std::max(qs[i], qs[j]));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Layout junction_layout() { return Layout::trivial(4, 4); }

RoutedCircuit lower_qft3_junction(const CouplingGraph& graph, const Layout& initial) {
  if (initial.num_logical() != 4 || initial.num_physical() != graph.num_qubits()) {
    throw ValidationError("junction QFT needs a layout of 3 node qubits and a coin");
  }
  const PhysicalQubit centre = initial.physical(0);
  if (graph.degree(centre) != 3) {
    throw ValidationError("node 0 must sit on a degree-3 junction centre");
  }
  for (Qubit q = 1; q < 4; ++q) {
    if (!graph.adjacent(centre, initial.physical(q))) {
      throw ValidationError("nodes 1, 2 and the coin must sit on the junction arms");
    }
  }
  Emitter e(graph, initial);
  e.gate(Gate::h(0));
  e.gate(Gate::cp(1, 0, pi / 2));
  e.gate(Gate::cp(2, 0, pi / 4));
  e.gate(Gate::h(1));
  e.swap(e.at(0), e.at(1));  // node 1 takes the centre to reach node 2
  e.gate(Gate::cp(2, 1, pi / 2));
  e.gate(Gate::h(2));
  e.relabel(e.at(0), e.at(2));  // bit-reversal swap, no gate
  e.swap(e.at(1), e.at(3));     // coin back on the centre
  return e.finish();
}

RoutedCircuit lower_qft3_dag_junction(const CouplingGraph& graph, const Layout& initial) {
  const RoutedCircuit fwd = lower_qft3_junction(graph, initial);
  return {adjoint(fwd.circuit), Layout(fwd.final.num_logical(), fwd.final.mapping()),
          reversed(fwd.final), {}};
}

namespace {

// Junction QFT, `middle` (logical gates, run with the QFT's final layout),
// junction QFT dagger.
RoutedCircuit around_junction_qft(const Circuit& prep, const Circuit& middle) {
  const CouplingGraph g = CouplingGraph::t_junction();
  const Layout home = junction_layout();
  const RoutedCircuit fwd = lower_qft3_junction(g, home);
  const RoutedCircuit dag = lower_qft3_dag_junction(g, home);
  Circuit c(fwd.circuit.qubits());
  for (const Gate& gate : prep.gates()) c.add(to_physical_gate(gate, home));
  c.append(fwd.circuit);
  for (const Gate& gate : middle.gates()) c.add(to_physical_gate(gate, fwd.final));
  c.append(dag.circuit);
  return {std::move(c), home, dag.final, {}};
}

}  // namespace

RoutedCircuit routed_qft_roundtrip(int bits) {
  const Circuit full = qft_roundtrip_experiment(bits);
  Circuit prep(full.qubits());
  for (const Gate& g : full.gates()) {
    if (g.kind != GateKind::kX) break;
    prep.add(g);
  }
  return around_junction_qft(prep, Circuit(full.qubits()));
}

RoutedCircuit routed_shift_experiment(int k) {
  const Circuit full = shift_experiment(k);
  const WalkLayout l = walk_layout(std::vector<int>{3});
  Circuit middle(full.qubits());
  const std::vector<Qubit> ctl{l.coins[0]};
  for (int i = 0; i < k; ++i) {
    middle.x(l.coins[0]);
    middle.append(qadd(l.reg, l.dims[0], l.dims[0], +1, ctl));
    middle.x(l.coins[0]);
  }
  return around_junction_qft(Circuit(full.qubits()), middle);
}

// ---------------------------------------------------------------------------

RoutedCircuit route_circuit(const Circuit& circuit, const CouplingGraph& graph,
                            const Layout& initial) {
  if (circuit.num_qubits() != initial.num_logical() ||
      graph.num_qubits() != initial.num_physical()) {
    throw ValidationError("layout does not match the circuit and coupling graph");
  }
  Emitter e(graph, initial);
  auto place = [&](const Gate& g) {
    const auto qs = g.qubits();
    if (qs.size() == 2 && !graph.adjacent(e.at(qs[0]), e.at(qs[1]))) {
      const auto path = graph.shortest_path(e.at(qs[0]), e.at(qs[1]));
      if (path.empty()) {
        throw ValidationError("qubits " + std::to_string(qs[0]) + " and " +
                              std::to_string(qs[1]) +
                              " sit in disconnected parts of the coupling graph");
      }
      for (std::size_t i = 0; i + 2 < path.size(); ++i) e.swap(path[i], path[i + 1]);
    }
    e.gate(g);
  };
  for (const Gate& g : circuit.gates()) {
    if (g.arity() <= 2) {
      place(g);
      continue;
    }
    const Circuit parts = decompose_gate(g, circuit.num_qubits());
    for (const Gate& b : parts.gates()) place(b);
  }
  return e.finish();
}

// ---------------------------------------------------------------------------

namespace {

constexpr Qubit kC0 = 6, kC1 = 7, kA0 = 8, kA1 = 9;

// Physical hops from the ancilla home (4) to each junction centre.
constexpr std::array<PhysicalQubit, 3> kToV{4, 3, 0};
constexpr std::array<PhysicalQubit, 3> kToH{4, 5, 6};
// Ancilla 1 starts on the spare qubit.
constexpr std::array<PhysicalQubit, 4> kSpareToH{9, 4, 5, 6};

struct Shift {
  Direction dir;
  int dim;  // 0: V nodes 0..2, 1: H nodes 3..5
  int sign;
};

constexpr Shift kRightShift{kRight, 1, +1};
constexpr Shift kLeftShift{kLeft, 1, -1};
constexpr Shift kUpShift{kUp, 0, +1};
constexpr Shift kDownShift{kDown, 0, -1};

void check_spec(const WalkSpec& spec) {
  spec.validate();
  if (spec.dims != std::vector<int>{3, 3}) {
    throw ValidationError("the heavy-hex templates need a 3+3 qubit grid");
  }
  if (!spec.coin.is_hadamard()) {
    throw ValidationError("the heavy-hex templates apply the Hadamard coin only");
  }
  if (spec.bounded()) throw ValidationError("the heavy-hex templates route periodic walks");
}

void check_patch(const CouplingGraph& graph, bool dual) {
  static const std::vector<Edge> kPatch{{0, 1}, {0, 2}, {0, 3}, {3, 4},
                                        {4, 5}, {5, 6}, {6, 7}, {6, 8}};
  for (auto [a, b] : kPatch) {
    if (!graph.adjacent(a, b)) {
      throw ValidationError("coupling graph does not contain the heavy-hex patch (edge " +
                            std::to_string(a) + "-" + std::to_string(b) + ")");
    }
  }
  if (dual && !graph.adjacent(4, 9)) {
    throw ValidationError("dual-ancilla routing needs the spare qubit 9 next to the ancilla");
  }
}

void conjugate(Emitter& e, Direction d) {
  const int s = coin_state_of(d);
  if (!(s & 0b10)) e.gate(Gate::x(kC0));
  if (!(s & 0b01)) e.gate(Gate::x(kC1));
}

void mark(Emitter& e, Direction d, Qubit ancilla) {
  conjugate(e, d);
  e.gate(Gate::ccx(kC0, kC1, ancilla));
  conjugate(e, d);
}

void deliver(Emitter& e, const Shift& s, Qubit ancilla) {
  const Qubit base = s.dim == 0 ? 0 : 3;
  for (int r = 0; r < 3; ++r) {
    e.gate(Gate::cp(ancilla, base + r, s.sign * pi / static_cast<double>(1 << r)));
  }
}

template <std::size_t N>
void go(Emitter& e, const std::array<PhysicalQubit, N>& path) {
  for (std::size_t i = 0; i + 1 < N; ++i) e.swap(path[i], path[i + 1]);
}

template <std::size_t N>
void back(Emitter& e, const std::array<PhysicalQubit, N>& path) {
  for (std::size_t i = N - 1; i > 0; --i) e.swap(path[i - 1], path[i]);
}

}  // namespace

Register walk2d_register(const WalkSpec& spec, int ancillas) {
  Register reg = walk_layout(spec).reg;
  for (int k = 0; k < ancillas; ++k) reg.push_back({Role::kAncilla, 0, k});
  return reg;
}

Layout walk2d_patch_layout(const CouplingGraph& graph, bool dual) {
  check_patch(graph, dual);
  const int logical = dual ? 10 : 9;
  std::vector<PhysicalQubit> slots{0, 1, 2, 6, 7, 8, 3, 5, 4};
  for (PhysicalQubit p = 9; p < graph.num_qubits(); ++p) slots.push_back(p);
  return Layout(logical, std::move(slots));
}

Circuit walk2d_step_body(const WalkSpec& spec, int ancillas) {
  WalkLayout l = walk_layout(spec);
  l.reg = walk2d_register(spec, ancillas);
  Circuit c = coin_op(l.reg, l.coins, spec.coin);
  c.append(shift_phase_2d(l));
  return c;
}

RoutedCircuit repeat(const RoutedCircuit& body, int times) {
  if (!body.final.same_mapping(body.initial)) {
    throw ValidationError("only layout-preserving bodies can be repeated");
  }
  if (times < 0) throw ValidationError("repeat count must be non-negative");
  RoutedCircuit out{Circuit(body.circuit.qubits()), body.initial, body.initial, {}};
  for (int i = 0; i < times; ++i) {
    out.circuit.append(body.circuit);
    out.transport_swaps.insert(out.transport_swaps.end(), body.transport_swaps.begin(),
                               body.transport_swaps.end());
  }
  return out;
}

Distribution simulate_routed_walk2d(const WalkSpec& spec, const RoutedCircuit& step) {
  spec.validate();
  const int ancillas = step.initial.num_logical() - walk_layout(spec).num_qubits();
  if (ancillas < 0) throw ValidationError("routed step is smaller than the walk register");
  const WalkLayout l = walk_layout(spec);
  const Register reg = walk2d_register(spec, ancillas);
  std::vector<Qubit> walk_qubits(l.num_qubits());
  for (int i = 0; i < l.num_qubits(); ++i) walk_qubits[i] = i;
  WalkState s = embed(initial_state(spec), walk_qubits, static_cast<int>(reg.size()));
  for (const auto& d : l.dims) apply_circuit(s, qft(reg, d));
  s = run_routed(repeat(step, spec.steps), s);
  for (const auto& d : l.dims) apply_circuit(s, qft_dag(reg, d));
  return marginal_distribution(s, l.nodes());
}

RoutedCircuit lower_walk2d_single_ancilla(const WalkSpec& spec, const CouplingGraph& graph,
                                          const Layout& initial) {
  check_spec(spec);
  if (!initial.same_mapping(walk2d_patch_layout(graph, false)) ||
      initial.num_logical() != 9) {
    throw ValidationError("layout does not match the single-ancilla patch template");
  }
  Emitter e(graph, initial);
  std::vector<int> transport;
  e.gate(Gate::h(kC0));
  e.gate(Gate::h(kC1));
  for (const Shift& s : {kRightShift, kLeftShift, kUpShift, kDownShift}) {
    mark(e, s.dir, kA0);
    e.take_swaps();
    const auto& path = s.dim == 0 ? kToV : kToH;
    go(e, path);
    deliver(e, s, kA0);
    back(e, path);
    transport.push_back(e.take_swaps());
    mark(e, s.dir, kA0);
  }
  return e.finish(std::move(transport));
}

RoutedCircuit lower_walk2d_dual_ancilla(const WalkSpec& spec, const CouplingGraph& graph,
                                        const Layout& initial) {
  check_spec(spec);
  if (!initial.same_mapping(walk2d_patch_layout(graph, true)) ||
      initial.num_logical() != 10) {
    throw ValidationError("layout does not match the dual-ancilla patch template");
  }
  Emitter e(graph, initial);
  std::vector<int> transport;
  e.gate(Gate::h(kC0));
  e.gate(Gate::h(kC1));
  const std::pair<Shift, Shift> pairs[] = {{kUpShift, kRightShift},
                                           {kDownShift, kLeftShift}};
  for (const auto& [vert, horiz] : pairs) {
    // Ancilla 0 heads for the vertical junction; coin 0 lands next to the
    // spare, so ancilla 1 can be marked while ancilla 0 delivers.
    mark(e, vert.dir, kA0);
    go(e, kToV);
    deliver(e, vert, kA0);
    mark(e, horiz.dir, kA1);
    go(e, kSpareToH);
    deliver(e, horiz, kA1);
    back(e, kSpareToH);
    mark(e, horiz.dir, kA1);
    back(e, kToV);
    mark(e, vert.dir, kA0);
    transport.push_back(2 * static_cast<int>(kToV.size() - 1));
    transport.push_back(2 * static_cast<int>(kSpareToH.size() - 1));
  }
  e.take_swaps();
  return e.finish(std::move(transport));
}

}  // namespace qwalk
