#include "qwalk/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace qwalk {
namespace {

constexpr double kUnitaryTol = 1e-9;

bool is_unitary(const std::vector<Complex>& m, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        acc += std::conj(m[k * dim + i]) * m[k * dim + j];
      }
      const Complex expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(acc - expect) > kUnitaryTol) return false;
    }
  }
  return true;
}

void check_distinct(const Gate& g) {
  std::vector<Qubit> all = g.qubits();
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ValidationError("gate " + g.name() + " references a qubit twice");
  }
}

}  // namespace

double normalize_angle(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r == 0.0) r = 0.0;  // drop -0.0
  return r;
}

Gate Gate::h(Qubit q) { return Gate{GateKind::kH, {q}, {}, 0.0, {}, {}}; }
Gate Gate::x(Qubit q) { return Gate{GateKind::kX, {q}, {}, 0.0, {}, {}}; }

Gate Gate::phase(Qubit q, double angle) {
  return Gate{GateKind::kPhase, {q}, {}, normalize_angle(angle), {}, {}};
}

Gate Gate::swap(Qubit a, Qubit b) {
  Gate g{GateKind::kSwap, {a, b}, {}, 0.0, {}, {}};
  check_distinct(g);
  return g;
}

Gate Gate::cx(Qubit control, Qubit target) {
  return x(target).controlled_by({control});
}

Gate Gate::cp(Qubit control, Qubit target, double angle) {
  return phase(target, angle).controlled_by({control});
}

Gate Gate::ccx(Qubit c0, Qubit c1, Qubit target) {
  return x(target).controlled_by({c0, c1});
}

Gate Gate::mcx(std::vector<Qubit> controls, Qubit target) {
  return x(target).controlled_by(controls);
}

Gate Gate::unitary(std::vector<Qubit> targets, std::vector<Complex> matrix,
                   std::string label) {
  const std::size_t dim = std::size_t{1} << targets.size();
  if (targets.empty() || matrix.size() != dim * dim) {
    throw ValidationError("custom gate matrix size does not match its targets");
  }
  if (!is_unitary(matrix, dim)) {
    throw ValidationError("custom gate '" + label + "' is not unitary");
  }
  Gate g{GateKind::kUnitary, std::move(targets), {}, 0.0, std::move(matrix),
         std::move(label)};
  check_distinct(g);
  return g;
}

Gate Gate::controlled_by(std::span<const Qubit> extra) const {
  Gate g = *this;
  g.controls.insert(g.controls.end(), extra.begin(), extra.end());
  check_distinct(g);
  return g;
}

std::vector<Qubit> Gate::qubits() const {
  std::vector<Qubit> all = controls;
  all.insert(all.end(), targets.begin(), targets.end());
  return all;
}

std::string Gate::name() const {
  std::string base;
  switch (kind) {
    case GateKind::kH: base = "h"; break;
    case GateKind::kX: base = "x"; break;
    case GateKind::kPhase: base = "p"; break;
    case GateKind::kSwap: base = "swap"; break;
    case GateKind::kUnitary: base = label.empty() ? "u" : label; break;
  }
  return std::string(controls.size(), 'c') + base;
}

Gate inverse(const Gate& g) {
  Gate inv = g;
  switch (g.kind) {
    case GateKind::kH:
    case GateKind::kX:
    case GateKind::kSwap:
      break;
    case GateKind::kPhase:
      inv.angle = normalize_angle(-g.angle);
      break;
    case GateKind::kUnitary: {
      const std::size_t dim = std::size_t{1} << g.targets.size();
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          inv.matrix[i * dim + j] = std::conj(g.matrix[j * dim + i]);
        }
      }
      // Labels round-trip: "coin" <-> "coin_dg".
      constexpr std::string_view suffix = "_dg";
      if (inv.label.size() > suffix.size() &&
          inv.label.ends_with(suffix)) {
        inv.label.resize(inv.label.size() - suffix.size());
      } else {
        inv.label += suffix;
      }
      break;
    }
  }
  return inv;
}

std::string QubitLabel::name() const {
  switch (role) {
    case Role::kNode:
      return "node[" + std::to_string(dim) + "][" + std::to_string(index) + "]";
    case Role::kCoin: return "coin[" + std::to_string(index) + "]";
    case Role::kAncilla: return "ancilla[" + std::to_string(index) + "]";
    case Role::kPhysical: return "phys[" + std::to_string(index) + "]";
    case Role::kQubit: break;
  }
  return "q[" + std::to_string(index) + "]";
}

Register plain_register(int n) {
  Register reg;
  for (int i = 0; i < n; ++i) reg.push_back({Role::kQubit, 0, i});
  return reg;
}

Circuit::Circuit(int num_qubits) : register_(plain_register(num_qubits)) {}

Circuit::Circuit(Register reg) : register_(std::move(reg)) {}

Circuit& Circuit::add(Gate g) {
  for (Qubit q : g.qubits()) {
    if (q < 0 || q >= num_qubits()) {
      throw std::out_of_range("gate " + g.name() + " references qubit " +
                              std::to_string(q) + " outside a register of " +
                              std::to_string(num_qubits()));
    }
  }
  check_distinct(g);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits() != num_qubits()) {
    throw ValidationError("cannot append a circuit over a different register");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

std::vector<Qubit> Circuit::find(Role role, int dim) const {
  std::vector<Qubit> out;
  for (int i = 0; i < num_qubits(); ++i) {
    const auto& l = register_[i];
    if (l.role == role && (dim < 0 || l.dim == dim)) out.push_back(i);
  }
  return out;
}

Circuit adjoint(const Circuit& c) {
  Circuit out(c.qubits());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.add(inverse(*it));
  }
  return out;
}

std::size_t count_kind(const Circuit& c, GateKind kind) {
  return static_cast<std::size_t>(
      std::count_if(c.gates().begin(), c.gates().end(),
                    [kind](const Gate& g) { return g.kind == kind; }));
}

}  // namespace qwalk
