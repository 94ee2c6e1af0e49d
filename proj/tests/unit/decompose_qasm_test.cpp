#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qwalk/decompose.hpp"
#include "qwalk/qasm.hpp"
#include "qwalk/unitary.hpp"
#include "qwalk/walk.hpp"
#include "support/qasm_reader.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

bool only_basis_gates(const Circuit& c) {
  for (const Gate& g : c.gates()) {
    const bool ok = (g.kind == GateKind::kH && g.controls.empty()) ||
                    (g.kind == GateKind::kX && g.controls.size() <= 1) ||
                    (g.kind == GateKind::kPhase && g.controls.empty());
    if (!ok) return false;
  }
  return true;
}

Circuit qadd3() {
  const WalkLayout l = walk_layout(std::vector<int>{3});
  return qadd(l.reg, l.dims[0], l.dims[0], +1, std::vector<Qubit>{l.coins[0]});
}

// Builder outputs on at most 5 qubits.
std::vector<Circuit> builder_outputs() {
  std::vector<Circuit> out;
  out.push_back(qft(4));
  out.push_back(qadd3());
  WalkSpec w;
  w.dims = {3};
  w.steps = 2;
  out.push_back(walk_circuit(w));
  w.boundaries = {BoundarySpec::line(5, 0.3)};
  out.push_back(walk_circuit(w));
  w.dims = {1, 2};
  w.initial = InitialState::basis(1, 0);
  w.boundaries = {BoundarySpec::single(1, 2, kLeft | kUp)};
  w.steps = 1;
  out.push_back(walk_circuit(w));
  w.boundaries = {BoundarySpec::global(1, 3)};
  out.push_back(walk_circuit(w));
  out.push_back(shift_experiment(2));
  Circuit mc(5);
  mc.add(Gate::mcx({0, 1, 2, 3}, 4));
  mc.add(Gate::phase(4, 0.4).controlled_by({0, 1, 3}));
  mc.add(Gate::swap(1, 2).controlled_by({0}));
  mc.add(Gate::unitary({3}, {0.6, Complex(0, 0.8), Complex(0, 0.8), 0.6}).controlled_by({0, 4}));
  out.push_back(mc);
  return out;
}

}  // namespace

TEST(Decompose, StandardIdentities) {
  Circuit s(2);
  s.swap(0, 1);
  const Circuit ds = decompose_to_basis(s);
  EXPECT_EQ(count_kind(ds, GateKind::kX), 3u);
  EXPECT_EQ(ds.size(), 3u);

  Circuit cp(2);
  cp.cp(0, 1, 0.7);
  const GateCounts k = gate_counts(cp);
  EXPECT_EQ(k.cx, 2u);
  EXPECT_EQ(k.phase, 3u);
  EXPECT_EQ(k.total, 5u);
}

TEST(Decompose, ThreeQubitAdderCounts) {
  const GateCounts k = gate_counts(qadd3());
  EXPECT_EQ(k.cx, 6u);
  EXPECT_EQ(k.two_qubit_count, 6u);
  EXPECT_EQ(k.phase, 9u);  // three per controlled phase; no other single-qubit gates
  EXPECT_EQ(k.h + k.x, 0u);
}

TEST(Decompose, CountsAndDepth) {
  EXPECT_EQ(gate_counts(Circuit(3)), GateCounts{});
  Circuit hh(2);
  hh.h(0).h(1);
  EXPECT_EQ(gate_counts(hh).depth, 1u);
  Circuit chain(3);
  chain.cx(0, 1).cx(1, 2).h(0);
  const GateCounts k = count_basis(chain);
  EXPECT_EQ(k.depth, 2u);
  EXPECT_EQ(k.two_qubit_depth, 2u);
  EXPECT_LE(k.depth, k.total);
}

TEST(Decompose, CountsNeverDecrease) {
  std::mt19937 rng(4);
  Circuit c(4);
  GateCounts prev = gate_counts(c);
  const std::vector<Gate> pool{Gate::h(0), Gate::cx(1, 3), Gate::cp(2, 0, 0.5),
                               Gate::ccx(0, 1, 2), Gate::swap(2, 3), Gate::x(1)};
  for (int i = 0; i < 40; ++i) {
    c.add(pool[rng() % pool.size()]);
    const GateCounts k = gate_counts(c);
    EXPECT_GE(k.h, prev.h);
    EXPECT_GE(k.x, prev.x);
    EXPECT_GE(k.phase, prev.phase);
    EXPECT_GE(k.cx, prev.cx);
    EXPECT_GE(k.total, prev.total);
    EXPECT_GE(k.depth, prev.depth);
    EXPECT_GE(k.two_qubit_depth, prev.two_qubit_depth);
    prev = k;
  }
}

TEST(Decompose, SoundOnBuilderOutputs) {
  for (const Circuit& c : builder_outputs()) {
    const Circuit d = decompose_to_basis(c);
    EXPECT_TRUE(only_basis_gates(d));
    EXPECT_LT(distance_up_to_phase(unitary_of(d), unitary_of(c)), 1e-9);
  }
}

TEST(Decompose, LadderUsesIdleAncillas) {
  Register reg = plain_register(5);
  reg.push_back({Role::kAncilla, 0, 0});
  reg.push_back({Role::kAncilla, 0, 1});
  reg.push_back({Role::kAncilla, 0, 2});
  Circuit c(reg);
  c.add(Gate::mcx({0, 1, 2, 3}, 4));
  const Circuit d = decompose_to_basis(c);
  EXPECT_TRUE(only_basis_gates(d));
  bool touches_ancilla = false;
  for (const Gate& g : d.gates()) {
    for (Qubit q : g.qubits()) touches_ancilla |= q >= 5;
  }
  EXPECT_TRUE(touches_ancilla);
  // Equal on the clean-ancilla subspace.
  const Matrix u = unitary_of(c), v = unitary_of(d);
  Matrix us(u.rows(), 32), vs(v.rows(), 32);
  for (int col = 0; col < 32; ++col) {
    us.col(col) = u.col(col << 3);
    vs.col(col) = v.col(col << 3);
  }
  EXPECT_LT(distance_up_to_phase(vs, us), 1e-9);
}

TEST(Decompose, RejectsMultiQubitCustomUnitary) {
  Circuit c(2);
  std::vector<Complex> id(16, 0.0);
  for (int i = 0; i < 4; ++i) id[i * 5] = 1.0;
  c.add(Gate::unitary({0, 1}, id));
  EXPECT_THROW(decompose_to_basis(c), ValidationError);
}

TEST(Qasm, AngleLiterals) {
  EXPECT_EQ(format_angle(0.0), "0");
  EXPECT_EQ(format_angle(pi), "pi");
  EXPECT_EQ(format_angle(-pi / 2), "-pi/2");
  EXPECT_EQ(format_angle(3 * pi / 4), "3*pi/4");
  EXPECT_DOUBLE_EQ(testing_qasm::parse_angle(format_angle(0.123)), 0.123);
}

TEST(Qasm, HeaderAndRegisters) {
  Circuit c(2);
  c.h(0).cx(0, 1);
  const auto p = testing_qasm::read(to_qasm(c, {.measure = true}));
  ASSERT_GE(p.header.size(), 2u);
  EXPECT_EQ(p.header[0], "OPENQASM 2.0;");
  EXPECT_EQ(p.header[1], "include \"qelib1.inc\";");
  EXPECT_EQ(p.num_qubits, 2);
  EXPECT_TRUE(p.has_creg);
  EXPECT_EQ(p.measures, 2);
  EXPECT_EQ(p.ops, (std::vector<std::string>{"h", "cx"}));
}

TEST(Qasm, RoundTripsThroughUnitaries) {
  for (const Circuit& c : builder_outputs()) {
    if (c.num_qubits() > 4) continue;
    const auto p = testing_qasm::read(to_qasm(c));
    EXPECT_LT(distance_up_to_phase(unitary_of(p.circuit), unitary_of(c)), 1e-9);
  }
  // Native gates are written one-for-one.
  Circuit n(3);
  n.h(0).x(1).cx(0, 2).ccx(0, 1, 2).cp(2, 1, pi / 8).swap(0, 2).phase(1, pi / 4);
  const auto p = testing_qasm::read(to_qasm(n));
  EXPECT_EQ(p.ops, (std::vector<std::string>{"h", "x", "cx", "ccx", "cu1", "swap", "rz"}));
}

TEST(Qasm, RoundtripExperimentStructure) {
  // Prep X gates, then the QFT (H first), then the QFT dagger (H last).
  const auto p = testing_qasm::read(to_qasm(qft_roundtrip_experiment(0b011), {.measure = true}));
  ASSERT_GE(p.ops.size(), 4u);
  EXPECT_EQ(p.ops[0], "x");
  EXPECT_EQ(p.ops[1], "x");
  EXPECT_EQ(p.ops[2], "h");
  EXPECT_EQ(p.ops.back(), "h");
  const auto swaps = std::count(p.ops.begin(), p.ops.end(), "swap");
  EXPECT_EQ(swaps, 2);  // one bit-reversal swap in each transform
  const auto half = p.ops.begin() + 2 + (p.ops.size() - 2) / 2;
  EXPECT_EQ(std::count(p.ops.begin() + 2, half, "h"), 3);
  EXPECT_EQ(std::count(half, p.ops.end(), "h"), 3);
  EXPECT_EQ(p.measures, 4);
}
