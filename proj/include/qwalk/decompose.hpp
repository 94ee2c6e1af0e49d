#pragma once

#include <cstddef>
#include <string>

#include "qwalk/circuit.hpp"

namespace qwalk {

/// Rewrites `circuit` into {H, X, P(angle), CX}. The result equals the input
/// up to a global phase.
///
/// Multi-controlled gates are expanded without ancillas unless the register
/// holds ancilla-role qubits that no gate in `circuit` touches. Those are
/// treated as clean |0> scratch space for a Toffoli ladder.
///
/// Throws ValidationError for custom multi-qubit unitaries, which have no
/// registered decomposition.
Circuit decompose_to_basis(const Circuit& circuit);

/// Decomposes one gate on its own, ancilla-free.
Circuit decompose_gate(const Gate& gate, int num_qubits);

struct GateCounts {
  std::size_t h = 0;
  std::size_t x = 0;
  std::size_t phase = 0;
  std::size_t cx = 0;
  std::size_t total = 0;
  std::size_t two_qubit_count = 0;
  /// Longest per-qubit chain counting every gate.
  std::size_t depth = 0;
  /// Longest per-qubit chain counting only two-qubit gates.
  std::size_t two_qubit_depth = 0;

  bool operator==(const GateCounts&) const = default;
};

/// Counts taken on decompose_to_basis(circuit).
GateCounts gate_counts(const Circuit& circuit);

/// Counts of an already-decomposed circuit; no rewriting.
GateCounts count_basis(const Circuit& basis_circuit);

std::string to_string(const GateCounts& counts);

}  // namespace qwalk
