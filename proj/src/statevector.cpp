#include "qwalk/statevector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {
namespace {

constexpr int kMaxQubits = 30;

void check_qubits(const WalkState& state, const Gate& gate) {
  const int n = state.num_qubits();
  BasisIndex seen = 0;
  for (Qubit q : gate.qubits()) {
    if (q < 0 || q >= n) {
      throw std::out_of_range("qubit " + std::to_string(q) +
                              " outside a " + std::to_string(n) +
                              "-qubit state");
    }
    const BasisIndex m = qubit_mask(n, q);
    if (seen & m) throw ValidationError("duplicate qubit in " + gate.name());
    seen |= m;
  }
}

BasisIndex control_mask(int n, const Gate& gate) {
  BasisIndex m = 0;
  for (Qubit c : gate.controls) m |= qubit_mask(n, c);
  return m;
}

using Mat2 = std::array<Complex, 4>;

Mat2 single_qubit_matrix(const Gate& g) {
  const double s = 1.0 / std::numbers::sqrt2;
  switch (g.kind) {
    case GateKind::kH: return {s, s, s, -s};
    case GateKind::kX: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kPhase: return {1.0, 0.0, 0.0, std::polar(1.0, g.angle)};
    case GateKind::kUnitary:
      return {g.matrix[0], g.matrix[1], g.matrix[2], g.matrix[3]};
    case GateKind::kSwap: break;
  }
  throw std::logic_error("not a single-qubit gate");
}

void apply_x(std::span<Complex> a, BasisIndex tmask, BasisIndex cmask) {
  for (BasisIndex i = 0; i < a.size(); ++i) {
    if ((i & tmask) || (i & cmask) != cmask) continue;
    std::swap(a[i], a[i | tmask]);
  }
}

void apply_phase(std::span<Complex> a, BasisIndex tmask, BasisIndex cmask,
                 double angle) {
  const Complex ph = std::polar(1.0, angle);
  const BasisIndex all = tmask | cmask;
  for (BasisIndex i = 0; i < a.size(); ++i) {
    if ((i & all) == all) a[i] *= ph;
  }
}

void apply_mat2(std::span<Complex> a, BasisIndex tmask, BasisIndex cmask,
                const Mat2& m) {
  for (BasisIndex i = 0; i < a.size(); ++i) {
    if ((i & tmask) || (i & cmask) != cmask) continue;
    const Complex a0 = a[i];
    const Complex a1 = a[i | tmask];
    a[i] = m[0] * a0 + m[1] * a1;
    a[i | tmask] = m[2] * a0 + m[3] * a1;
  }
}

void apply_swap(std::span<Complex> a, BasisIndex ma, BasisIndex mb,
                BasisIndex cmask) {
  for (BasisIndex i = 0; i < a.size(); ++i) {
    // Visit each |..1..0..> / |..0..1..> pair once, from the a=1 side.
    if (!(i & ma) || (i & mb) || (i & cmask) != cmask) continue;
    std::swap(a[i], a[(i & ~ma) | mb]);
  }
}

void apply_dense(std::span<Complex> a, int n, const Gate& g, BasisIndex cmask) {
  const std::size_t k = g.targets.size();
  const std::size_t dim = std::size_t{1} << k;
  std::vector<BasisIndex> offsets(dim);
  BasisIndex tall = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    BasisIndex off = 0;
    for (std::size_t t = 0; t < k; ++t) {
      // Target 0 is the most significant bit of the local index.
      if (r & (std::size_t{1} << (k - 1 - t))) off |= qubit_mask(n, g.targets[t]);
    }
    offsets[r] = off;
    tall |= off;
  }
  std::vector<Complex> in(dim);
  for (BasisIndex base = 0; base < a.size(); ++base) {
    if ((base & tall) || (base & cmask) != cmask) continue;
    for (std::size_t r = 0; r < dim; ++r) in[r] = a[base | offsets[r]];
    for (std::size_t r = 0; r < dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += g.matrix[r * dim + c] * in[c];
      a[base | offsets[r]] = acc;
    }
  }
}

}  // namespace

WalkState::WalkState(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw ValidationError("unsupported qubit count " +
                          std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  amps_[0] = 1.0;
}

WalkState::WalkState(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 1 || num_qubits > kMaxQubits ||
      amps_.size() != (std::size_t{1} << num_qubits)) {
    throw ValidationError("amplitude vector length must be 2^num_qubits");
  }
}

double WalkState::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void WalkState::normalize() {
  const double n = norm();
  if (n == 0.0) throw ValidationError("cannot normalize the zero vector");
  for (auto& a : amps_) a /= n;
}

double Distribution::total() const {
  double s = 0.0;
  for (double p : probabilities) s += p;
  return s;
}

WalkState new_basis_state(int num_qubits, BasisIndex index) {
  WalkState s(num_qubits);
  if (index >= s.dimension()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
  }
  s[0] = 0.0;
  s[index] = 1.0;
  return s;
}

void apply_gate(WalkState& state, const Gate& gate) {
  check_qubits(state, gate);
  const int n = state.num_qubits();
  const BasisIndex cmask = control_mask(n, gate);
  auto amps = state.amplitudes();
  switch (gate.kind) {
    case GateKind::kX:
      apply_x(amps, qubit_mask(n, gate.targets[0]), cmask);
      return;
    case GateKind::kPhase:
      apply_phase(amps, qubit_mask(n, gate.targets[0]), cmask, gate.angle);
      return;
    case GateKind::kH:
      apply_mat2(amps, qubit_mask(n, gate.targets[0]), cmask,
                 single_qubit_matrix(gate));
      return;
    case GateKind::kSwap:
      apply_swap(amps, qubit_mask(n, gate.targets[0]),
                 qubit_mask(n, gate.targets[1]), cmask);
      return;
    case GateKind::kUnitary:
      if (gate.targets.size() == 1) {
        apply_mat2(amps, qubit_mask(n, gate.targets[0]), cmask,
                   single_qubit_matrix(gate));
      } else {
        apply_dense(amps, n, gate, cmask);
      }
      return;
  }
}

void apply_circuit(WalkState& state, const Circuit& circuit) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw ValidationError("circuit register has " +
                          std::to_string(circuit.num_qubits()) +
                          " qubits but the state has " +
                          std::to_string(state.num_qubits()));
  }
  for (const Gate& g : circuit.gates()) apply_gate(state, g);
}

WalkState applied(WalkState state, const Gate& gate) {
  apply_gate(state, gate);
  return state;
}

WalkState applied(WalkState state, const Circuit& circuit) {
  apply_circuit(state, circuit);
  return state;
}

Distribution marginal_distribution(const WalkState& state,
                                   std::span<const Qubit> qubits) {
  const int n = state.num_qubits();
  if (qubits.empty()) throw ValidationError("empty qubit subset");
  BasisIndex seen = 0;
  for (Qubit q : qubits) {
    if (q < 0 || q >= n) throw ValidationError("qubit outside the register");
    if (seen & qubit_mask(n, q)) throw ValidationError("duplicate qubit");
    seen |= qubit_mask(n, q);
  }
  const std::size_t k = qubits.size();
  Distribution d;
  d.probabilities.assign(std::size_t{1} << k, 0.0);
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::size_t local = 0;
    for (Qubit q : qubits) {
      local = (local << 1) | ((i & qubit_mask(n, q)) ? 1u : 0u);
    }
    d.probabilities[local] += p;
  }
  return d;
}

double fidelity(const WalkState& a, const WalkState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw ValidationError("fidelity of states with different qubit counts");
  }
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    overlap += std::conj(a[i]) * b[i];
  }
  return std::min(1.0, std::norm(overlap));
}

WalkState embed(const WalkState& state, std::span<const Qubit> positions,
                int total_qubits) {
  const int n = state.num_qubits();
  if (static_cast<int>(positions.size()) != n || total_qubits < n) {
    throw ValidationError("embedding needs one position per qubit");
  }
  WalkState out(total_qubits);
  out[0] = 0.0;
  for (BasisIndex i = 0; i < state.dimension(); ++i) {
    BasisIndex j = 0;
    for (int q = 0; q < n; ++q) {
      if (i & qubit_mask(n, q)) j |= qubit_mask(total_qubits, positions[q]);
    }
    out[j] = state[i];
  }
  return out;
}

WalkState extract(const WalkState& state, std::span<const Qubit> positions) {
  const int total = state.num_qubits();
  const int n = static_cast<int>(positions.size());
  BasisIndex kept = 0;
  for (Qubit p : positions) kept |= qubit_mask(total, p);
  WalkState out(n);
  out[0] = 0.0;
  double dropped = 0.0;
  for (BasisIndex j = 0; j < state.dimension(); ++j) {
    if (j & ~kept) {
      dropped += std::norm(state[j]);
      continue;
    }
    BasisIndex i = 0;
    for (int q = 0; q < n; ++q) {
      if (j & qubit_mask(total, positions[q])) i |= qubit_mask(n, q);
    }
    out[i] = state[j];
  }
  if (dropped > 1e-9) {
    throw ValidationError("extracted qubits are entangled with the rest");
  }
  return out;
}

}  // namespace qwalk
