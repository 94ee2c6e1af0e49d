#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;
using Qubit = int;

/// Thrown when a walk description, boundary, or circuit argument is invalid.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GateKind : std::uint8_t {
  kH,
  kX,
  kPhase,  // diag(1, e^{i angle})
  kSwap,
  kUnitary,  // dense matrix over the target list
};

/// A gate acting on `targets`, applied only when every qubit in `controls`
/// is |1>. Open (|0>) controls do not exist; callers conjugate with X.
struct Gate {
  GateKind kind = GateKind::kH;
  std::vector<Qubit> targets;
  std::vector<Qubit> controls;
  double angle = 0.0;
  // Row-major 2^k x 2^k matrix for kUnitary, empty otherwise.
  std::vector<Complex> matrix;
  std::string label;

  static Gate h(Qubit q);
  static Gate x(Qubit q);
  static Gate phase(Qubit q, double angle);
  static Gate swap(Qubit a, Qubit b);
  static Gate cx(Qubit control, Qubit target);
  static Gate cp(Qubit control, Qubit target, double angle);
  static Gate ccx(Qubit c0, Qubit c1, Qubit target);
  static Gate mcx(std::vector<Qubit> controls, Qubit target);
  /// Throws ValidationError unless `matrix` is square, sized for the targets,
  /// and unitary to 1e-9.
  static Gate unitary(std::vector<Qubit> targets, std::vector<Complex> matrix,
                      std::string label = "u");

  Gate controlled_by(std::span<const Qubit> extra) const;
  Gate controlled_by(std::initializer_list<Qubit> extra) const {
    return controlled_by(std::span<const Qubit>(extra.begin(), extra.size()));
  }

  /// Controls followed by targets.
  std::vector<Qubit> qubits() const;
  std::size_t arity() const { return targets.size() + controls.size(); }
  std::string name() const;

  bool operator==(const Gate&) const = default;
};

/// Maps any angle into (-2pi, 2pi); +-2pi collapse to 0.
double normalize_angle(double angle);

Gate inverse(const Gate& g);

enum class Role : std::uint8_t { kQubit, kNode, kCoin, kAncilla, kPhysical };

struct QubitLabel {
  Role role = Role::kQubit;
  int dim = 0;
  int index = 0;

  std::string name() const;
  bool operator==(const QubitLabel&) const = default;
};

using Register = std::vector<QubitLabel>;

/// Register of `n` generic qubits labelled q[0..n).
Register plain_register(int n);

/// Ordered gate list over a role-labelled register. Qubit 0 is the most
/// significant bit of a basis index.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits);
  explicit Circuit(Register reg);

  int num_qubits() const { return static_cast<int>(register_.size()); }
  const Register& qubits() const { return register_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends a gate after checking that its qubits are distinct and in range.
  Circuit& add(Gate g);
  /// Appends every gate of `other`, which must have the same register size.
  Circuit& append(const Circuit& other);

  Circuit& h(Qubit q) { return add(Gate::h(q)); }
  Circuit& x(Qubit q) { return add(Gate::x(q)); }
  Circuit& phase(Qubit q, double a) { return add(Gate::phase(q, a)); }
  Circuit& cx(Qubit c, Qubit t) { return add(Gate::cx(c, t)); }
  Circuit& cp(Qubit c, Qubit t, double a) { return add(Gate::cp(c, t, a)); }
  Circuit& swap(Qubit a, Qubit b) { return add(Gate::swap(a, b)); }
  Circuit& ccx(Qubit a, Qubit b, Qubit t) { return add(Gate::ccx(a, b, t)); }

  /// Positions of all qubits with the given role (and dimension, for nodes).
  std::vector<Qubit> find(Role role, int dim = -1) const;

  bool operator==(const Circuit&) const = default;

 private:
  Register register_;
  std::vector<Gate> gates_;
};

/// Reverses the gate order and inverts every gate.
Circuit adjoint(const Circuit& c);

/// Number of gates of the given kind (controls ignored).
std::size_t count_kind(const Circuit& c, GateKind kind);

}  // namespace qwalk
