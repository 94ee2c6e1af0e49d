#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qwalk/circuit.hpp"

namespace qwalk {

using BasisIndex = std::uint64_t;

/// Dense amplitude vector over 2^n basis states. Qubit 0 is the most
/// significant bit of the index, so for a walk register |node>|coin> the
/// basis index is node * 2^coins + coin.
///
/// Single-writer: concurrent reads are fine, concurrent mutation is not.
/// The kernel is single-threaded and results are bitwise reproducible.
class WalkState {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit WalkState(int num_qubits);
  /// Takes ownership of `amplitudes`; the length must be a power of two.
  WalkState(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  const Complex& operator[](BasisIndex i) const { return amps_[i]; }
  Complex& operator[](BasisIndex i) { return amps_[i]; }

  double norm() const;
  void normalize();

 private:
  int num_qubits_;
  std::vector<Complex> amps_;
};

/// Probabilities over the joint basis of a designated qubit subset, in the
/// order the subset was listed (first listed = most significant).
struct Distribution {
  std::vector<double> probabilities;

  std::size_t size() const { return probabilities.size(); }
  double operator[](std::size_t i) const { return probabilities[i]; }
  double total() const;
};

/// Bit mask selecting qubit q in a register of n qubits.
constexpr BasisIndex qubit_mask(int n, Qubit q) {
  return BasisIndex{1} << (n - 1 - q);
}

WalkState new_basis_state(int num_qubits, BasisIndex index);

/// Applies `gate` in place. Throws on out-of-range or duplicate qubits.
void apply_gate(WalkState& state, const Gate& gate);
void apply_circuit(WalkState& state, const Circuit& circuit);

/// Value-returning convenience forms.
WalkState applied(WalkState state, const Gate& gate);
WalkState applied(WalkState state, const Circuit& circuit);

Distribution marginal_distribution(const WalkState& state,
                                   std::span<const Qubit> qubits);

/// |<a|b>|^2.
double fidelity(const WalkState& a, const WalkState& b);

/// Places qubit i of `state` at position `positions[i]` of a register of
/// `total_qubits` qubits; positions not listed start in |0>.
WalkState embed(const WalkState& state, std::span<const Qubit> positions,
                int total_qubits);

/// Inverse of embed: gathers the listed positions back into a
/// positions.size()-qubit state. Throws if the dropped qubits are not |0>
/// (to within 1e-9 in probability).
WalkState extract(const WalkState& state, std::span<const Qubit> positions);

}  // namespace qwalk
