#pragma once

#include <set>
#include <utility>
#include <vector>

#include "qwalk/circuit.hpp"
#include "qwalk/statevector.hpp"
#include "qwalk/topology.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// A circuit over physical qubits plus the layouts it maps between. Feeding
/// a logical state placed by `initial` yields the logical result placed by
/// `final`.
struct RoutedCircuit {
  Circuit circuit;
  Layout initial;
  Layout final;
  /// SWAPs used to move a control ancilla, one entry per directional shift
  /// (2D templates only).
  std::vector<int> transport_swaps;

  std::size_t swap_count() const;
};

/// Places logical qubit i of `logical` at layout.physical(i).
WalkState to_physical(const WalkState& logical, const Layout& layout);
/// Gathers the logical qubits back; idle physical wires must be |0>.
WalkState to_logical(const WalkState& physical, const Layout& layout);

/// Runs `routed` on `logical` and returns the logical output.
WalkState run_routed(const RoutedCircuit& routed, const WalkState& logical);

/// True when every two-qubit gate sits on an edge and every wider gate acts
/// on a connected set of qubits.
bool respects_coupling(const Circuit& physical, const CouplingGraph& graph);

/// Pairs of logical qubits that interact in some multi-qubit gate (every
/// pair of a wider gate's qubits).
std::set<std::pair<Qubit, Qubit>> connectivity_requirements(const Circuit& circuit);

// ---------------------------------------------------------------------------
// Junction QFT on 3 node qubits and a coin

/// Starting layout for the junction templates: node 0 on the centre, node 1
/// and node 2 and the coin on the arms 1, 2, 3.
Layout junction_layout();

/// Routed 3-qubit QFT using 2 SWAPs. The terminal bit-reversal swap becomes
/// a relabel, and the coin ends on the centre. `initial` must put node 0 on
/// the degree-3 centre and the other three qubits on its arms.
RoutedCircuit lower_qft3_junction(const CouplingGraph& graph, const Layout& initial);
/// Adjoint of the routed QFT, starting from its final layout and returning
/// every qubit home.
RoutedCircuit lower_qft3_dag_junction(const CouplingGraph& graph, const Layout& initial);

/// The hardware-experiment circuits on the T-junction: junction QFT, the
/// middle section with the coin on the centre, and the junction QFT dagger.
RoutedCircuit routed_qft_roundtrip(int bits);
RoutedCircuit routed_shift_experiment(int k);

// ---------------------------------------------------------------------------
// Generic greedy router

/// Gates wider than two qubits are decomposed first. Before each two-qubit
/// gate whose qubits are apart, its first qubit walks the shortest path
/// (lowest ids first) by SWAPs until adjacent. Throws when a gate's qubits
/// lie in different components.
RoutedCircuit route_circuit(const Circuit& circuit, const CouplingGraph& graph,
                            const Layout& initial);

// ---------------------------------------------------------------------------
// 2D walk step on the heavy-hex patch

/// Logical register for the 2D templates: the walk register of `spec`
/// followed by `ancillas` ancilla qubits.
Register walk2d_register(const WalkSpec& spec, int ancillas);

/// V nodes on 0,1,2; coin 0 on 3; ancilla 0 on 4; coin 1 on 5; H nodes on
/// 6,7,8; ancilla 1 (dual only) on 9.
Layout walk2d_patch_layout(const CouplingGraph& graph, bool dual);

/// Abstract step body the templates implement: coin, then the four
/// coin-selected QADD blocks (the QFTs stay outside the step loop).
Circuit walk2d_step_body(const WalkSpec& spec, int ancillas);

/// `times` copies of a routed body whose final mapping equals its initial one.
RoutedCircuit repeat(const RoutedCircuit& body, int times);

/// Node distribution of a periodic 2D walk run through a routed step body:
/// abstract QFTs, spec.steps copies of `step`, abstract QFT daggers.
Distribution simulate_routed_walk2d(const WalkSpec& spec, const RoutedCircuit& step);

/// One step with a single ancilla: per direction, a Toffoli from the coins
/// marks the ancilla, 2 SWAPs carry it to the subsystem junction, it controls
/// the QADD, and 2 SWAPs bring it back for uncomputation.
RoutedCircuit lower_walk2d_single_ancilla(const WalkSpec& spec, const CouplingGraph& graph,
                                          const Layout& initial);

/// One step with two ancillas: while ancilla 0 drives a vertical QADD,
/// ancilla 1 is computed on the spare qubit and drives the horizontal one.
RoutedCircuit lower_walk2d_dual_ancilla(const WalkSpec& spec, const CouplingGraph& graph,
                                        const Layout& initial);

}  // namespace qwalk
