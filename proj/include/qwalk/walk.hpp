#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/circuit.hpp"
#include "qwalk/statevector.hpp"

namespace qwalk {

// ---------------------------------------------------------------------------
// Coins

/// Coin operator. The Hadamard coin applies H to every coin qubit. A custom
/// coin is a dense unitary over all coin qubits (2x2 in 1D, 4x4 in 2D).
class Coin {
 public:
  static Coin hadamard() { return Coin{}; }
  /// Throws ValidationError unless `matrix` is unitary to 1e-9.
  static Coin custom(std::vector<Complex> matrix, std::string label = "coin");

  bool is_hadamard() const { return matrix_.empty(); }
  const std::vector<Complex>& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }
  /// Dense row-major matrix over `num_coins` qubits.
  std::vector<Complex> dense(int num_coins) const;

 private:
  std::vector<Complex> matrix_;
  std::string label_ = "h";
};

Circuit coin_op(const Register& reg, std::span<const Qubit> coins,
                const Coin& coin);

// ---------------------------------------------------------------------------
// Boundaries

/// Shift directions on the 2D grid. The coin state |c0 c1> selects one:
/// |00> right, |10> left, |01> up, |11> down.
enum Direction : unsigned {
  kRight = 1u << 0,
  kLeft = 1u << 1,
  kUp = 1u << 2,
  kDown = 1u << 3,
};

/// Coin basis index (c0 * 2 + c1) that moves in direction `d`.
int coin_state_of(Direction d);

/// Parses "u", "d", "l", "r" letters (any order, e.g. "lr"). Throws on junk.
unsigned parse_directions(const std::string& text);
std::string format_directions(unsigned dirs);

enum class BoundaryKind : std::uint8_t {
  kLine,    // 1D: edge between node b and b+1 mod 2^N
  kSingle,  // 2D: node (v, h) with a blocked direction set
  kGlobal,  // 2D: every node sharing one subregister value
};

struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::kLine;
  BasisIndex node = 0;     // kLine
  BasisIndex v = 0, h = 0; // kSingle
  unsigned blocked = 0;    // kSingle, Direction bits
  int axis = 1;            // kGlobal: 0 blocks vertical moves, 1 horizontal
  BasisIndex value = 0;    // kGlobal: blocks value <-> value+1 on that axis
  double phase = 0.0;      // e^{i phase} applied with the reflection
  /// Optional coin-space unitary replacing the default X reflection on the
  /// first coin qubit (2x2 on coin 0, or 4x4 on both coins in 2D).
  std::vector<Complex> reflection;

  static BoundarySpec line(BasisIndex b, double phase = 0.0);
  static BoundarySpec single(BasisIndex v, BasisIndex h, unsigned blocked,
                             double phase = 0.0);
  static BoundarySpec global(int axis, BasisIndex value, double phase = 0.0);
};

// ---------------------------------------------------------------------------
// Walk description

struct InitialState {
  enum class Kind : std::uint8_t { kBasis, kUniform };
  Kind kind = Kind::kBasis;
  BasisIndex node = 0;  // joint node index (v * 2^N_H + h in 2D)
  BasisIndex coin = 0;  // coin basis index

  /// H on every node qubit, coin |0>.
  static InitialState uniform() { return {Kind::kUniform, 0, 0}; }
  static InitialState basis(BasisIndex node, BasisIndex coin = 0) {
    return {Kind::kBasis, node, coin};
  }
};

/// Whether a bounded walk may start with amplitude on its forbidden states.
enum class InitCheck : std::uint8_t { kStrict, kAllowLeak };

struct WalkSpec {
  std::vector<int> dims;  // node qubits per dimension; 2D is {N_V, N_H}
  Coin coin = Coin::hadamard();
  std::vector<BoundarySpec> boundaries;
  int steps = 0;
  InitialState initial;
  InitCheck init_check = InitCheck::kStrict;

  int num_dims() const { return static_cast<int>(dims.size()); }
  int node_qubits() const;
  int coin_qubits() const { return num_dims(); }
  bool bounded() const { return !boundaries.empty(); }

  /// Throws ValidationError describing the first problem found.
  void validate() const;
};

/// Qubit positions of a walk register: node qubits (dimension 0 first, MSB
/// first within each), then coins.
struct WalkLayout {
  std::vector<std::vector<Qubit>> dims;
  std::vector<Qubit> coins;
  Register reg;

  std::vector<Qubit> nodes() const;
  int num_qubits() const { return static_cast<int>(reg.size()); }
};

WalkLayout walk_layout(const WalkSpec& spec);
WalkLayout walk_layout(std::span<const int> dims);

// ---------------------------------------------------------------------------
// Building blocks

/// QFT on `qubits` (first listed = most significant), with terminal swaps.
Circuit qft(const Register& reg, std::span<const Qubit> qubits);
Circuit qft_dag(const Register& reg, std::span<const Qubit> qubits);
/// QFT over every qubit of a plain n-qubit register.
Circuit qft(int n);

/// Phase ladder adding sign * 2^{N-j} (mod 2^N) to `dim_register` once
/// wrapped in qft/qft_dag, where `subset` is the last j qubits of it.
/// Every gate is controlled by `controls`.
Circuit qadd(const Register& reg, std::span<const Qubit> dim_register,
             std::span<const Qubit> subset, int sign,
             std::span<const Qubit> controls);

/// Boundary block for a 1D edge. Inserted between the coin and the shift.
Circuit coin_boundary_1d(const WalkLayout& layout, const BoundarySpec& b,
                         const Coin& coin);
/// Boundary block for a 2D single-state or global boundary.
Circuit boundary_2d(const WalkLayout& layout, const BoundarySpec& b,
                    const Coin& coin);

/// Phase-space part of one shift: the controlled QADD blocks only.
Circuit shift_phase_1d(const WalkLayout& layout);
Circuit shift_phase_2d(const WalkLayout& layout);

/// Node-space 2D shift for one step: QFTs, the four QADD blocks, QFT daggers.
Circuit shift_2d(const WalkSpec& spec);

// ---------------------------------------------------------------------------
// Whole walks (state preparation not included)

Circuit core_walk_1d(const WalkSpec& spec);
Circuit bounded_walk_1d(const WalkSpec& spec);
Circuit walk_2d(const WalkSpec& spec);
/// Dispatches on dimension and boundaries.
Circuit walk_circuit(const WalkSpec& spec);

/// One node-space step: coin_stage followed by shift_stage.
Circuit step_circuit(const WalkSpec& spec);
/// Coin and boundary blocks.
Circuit coin_stage(const WalkSpec& spec);
/// QFT per subregister, the controlled QADD blocks, QFT dagger.
Circuit shift_stage(const WalkSpec& spec);

/// Gates preparing spec.initial from |0...0>.
Circuit preparation_circuit(const WalkSpec& spec);
WalkState initial_state(const WalkSpec& spec);

/// Basis indices (over the full register) that must carry no amplitude just
/// before a shift.
std::vector<BasisIndex> forbidden_states(const WalkSpec& spec);

/// Node pairs (joint indices, smaller first) whose connecting move is
/// blocked by some boundary of `spec`.
std::vector<std::pair<BasisIndex, BasisIndex>> blocked_edges(const WalkSpec& spec);

/// Largest forbidden-state probability produced by the first coin and
/// boundary stage on the initial state.
double initial_leak(const WalkSpec& spec);

/// Throws ValidationError if spec.init_check is strict and initial_leak
/// exceeds 1e-9.
void check_initialization(const WalkSpec& spec);

// ---------------------------------------------------------------------------
// Hardware-experiment compositions on 3 node qubits and one coin

/// X preparation of `bits` (0..7), qft, qft_dag.
Circuit qft_roundtrip_experiment(int bits);
/// qft, k controlled QADD+ blocks with the coin raised only around them,
/// qft_dag. 1 <= k <= 7.
Circuit shift_experiment(int k);

}  // namespace qwalk
