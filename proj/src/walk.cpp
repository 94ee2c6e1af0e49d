#include "qwalk/walk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace qwalk {
namespace {

using std::numbers::pi;

constexpr int kMaxNodeQubits = 24;

std::vector<Qubit> targets_for(std::size_t matrix_size) {
  switch (matrix_size) {
    case 4: return {0};
    case 16: return {0, 1};
    default: throw ValidationError("coin-space matrix must be 2x2 or 4x4");
  }
}

void require_unitary(const std::vector<Complex>& m, const std::string& what) {
  (void)Gate::unitary(targets_for(m.size()), m, what);
}

// X on every qubit of `qubits` whose bit of `value` is 0, so that |value>
// maps to the all-ones state. qubits[0] is the most significant bit.
void x_transform(Circuit& c, std::span<const Qubit> qubits, BasisIndex value) {
  const std::size_t n = qubits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!((value >> (n - 1 - i)) & 1u)) c.x(qubits[i]);
  }
}

// Node-controlled U_C^dagger, reflection, and optional phase, conditioned on
// `controls` all being |1>.
void reflect_block(Circuit& c, const WalkLayout& layout,
                   std::span<const Qubit> controls, const BoundarySpec& b,
                   const Coin& coin) {
  const auto& coins = layout.coins;
  if (coin.is_hadamard()) {
    for (Qubit q : coins) c.add(Gate::h(q).controlled_by(controls));
  } else {
    const Gate u = Gate::unitary(coins, coin.matrix(), coin.label());
    c.add(inverse(u).controlled_by(controls));
  }
  if (b.reflection.empty()) {
    c.add(Gate::x(coins[0]).controlled_by(controls));
  } else if (b.reflection.size() == 4) {
    c.add(Gate::unitary({coins[0]}, b.reflection, "refl").controlled_by(controls));
  } else {
    c.add(Gate::unitary(coins, b.reflection, "refl").controlled_by(controls));
  }
  if (b.phase != 0.0) {
    const Qubit last = controls.back();
    c.add(Gate::phase(last, b.phase)
              .controlled_by(controls.subspan(0, controls.size() - 1)));
  }
}

void boundary_at(Circuit& c, const WalkLayout& layout,
                 std::span<const Qubit> qubits, BasisIndex value,
                 const BoundarySpec& b, const Coin& coin) {
  x_transform(c, qubits, value);
  reflect_block(c, layout, qubits, b, coin);
  x_transform(c, qubits, value);
}

BasisIndex wrap_add(BasisIndex x, int delta, int bits) {
  const BasisIndex size = BasisIndex{1} << bits;
  const BasisIndex step = delta >= 0 ? static_cast<BasisIndex>(delta)
                                     : size - static_cast<BasisIndex>(-delta) % size;
  return (x + step) % size;
}

struct Move {
  Direction dir;
  int dim;   // 0 vertical, 1 horizontal
  int sign;
};

constexpr Move kMoves[] = {
    {kRight, 1, +1}, {kLeft, 1, -1}, {kUp, 0, +1}, {kDown, 0, -1}};

void check_dims(const WalkSpec& spec, int want, const char* who) {
  if (spec.num_dims() != want) {
    throw ValidationError(std::string(who) + " needs a " + std::to_string(want) +
                          "D walk spec");
  }
}

Circuit with_register(const WalkLayout& layout) { return Circuit(layout.reg); }

}  // namespace

// ---------------------------------------------------------------------------

Coin Coin::custom(std::vector<Complex> matrix, std::string label) {
  require_unitary(matrix, label);
  Coin c;
  c.matrix_ = std::move(matrix);
  c.label_ = std::move(label);
  return c;
}

std::vector<Complex> Coin::dense(int num_coins) const {
  if (!is_hadamard()) {
    if (matrix_.size() != (std::size_t{1} << (2 * num_coins))) {
      throw ValidationError("coin matrix does not match " +
                            std::to_string(num_coins) + " coin qubit(s)");
    }
    return matrix_;
  }
  const double s = 1.0 / std::numbers::sqrt2;
  std::vector<Complex> m{1.0};
  std::size_t dim = 1;
  for (int k = 0; k < num_coins; ++k) {
    std::vector<Complex> next(4 * dim * dim);
    const std::size_t nd = 2 * dim;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            const double h = (a & b) ? -s : s;
            next[(2 * r + a) * nd + (2 * c + b)] = m[r * dim + c] * h;
          }
        }
      }
    }
    m = std::move(next);
    dim = nd;
  }
  return m;
}

Circuit coin_op(const Register& reg, std::span<const Qubit> coins,
                const Coin& coin) {
  Circuit c(reg);
  if (coin.is_hadamard()) {
    for (Qubit q : coins) c.h(q);
  } else {
    if (coin.matrix().size() != (std::size_t{1} << (2 * coins.size()))) {
      throw ValidationError("coin matrix does not match the coin register");
    }
    c.add(Gate::unitary({coins.begin(), coins.end()}, coin.matrix(), coin.label()));
  }
  return c;
}

// ---------------------------------------------------------------------------

int coin_state_of(Direction d) {
  switch (d) {
    case kRight: return 0b00;
    case kLeft: return 0b10;
    case kUp: return 0b01;
    case kDown: return 0b11;
  }
  throw ValidationError("unknown direction");
}

unsigned parse_directions(const std::string& text) {
  unsigned dirs = 0;
  for (char ch : text) {
    switch (ch) {
      case 'r': case 'R': dirs |= kRight; break;
      case 'l': case 'L': dirs |= kLeft; break;
      case 'u': case 'U': dirs |= kUp; break;
      case 'd': case 'D': dirs |= kDown; break;
      default:
        throw ValidationError(std::string("unknown direction letter '") + ch +
                              "' (use u, d, l, r)");
    }
  }
  return dirs;
}

std::string format_directions(unsigned dirs) {
  std::string s;
  if (dirs & kUp) s += 'u';
  if (dirs & kDown) s += 'd';
  if (dirs & kLeft) s += 'l';
  if (dirs & kRight) s += 'r';
  return s;
}

BoundarySpec BoundarySpec::line(BasisIndex b, double phase) {
  BoundarySpec s;
  s.kind = BoundaryKind::kLine;
  s.node = b;
  s.phase = phase;
  return s;
}

BoundarySpec BoundarySpec::single(BasisIndex v, BasisIndex h, unsigned blocked,
                                  double phase) {
  BoundarySpec s;
  s.kind = BoundaryKind::kSingle;
  s.v = v;
  s.h = h;
  s.blocked = blocked;
  s.phase = phase;
  return s;
}

BoundarySpec BoundarySpec::global(int axis, BasisIndex value, double phase) {
  BoundarySpec s;
  s.kind = BoundaryKind::kGlobal;
  s.axis = axis;
  s.value = value;
  s.phase = phase;
  return s;
}

// ---------------------------------------------------------------------------

int WalkSpec::node_qubits() const {
  int n = 0;
  for (int d : dims) n += d;
  return n;
}

void WalkSpec::validate() const {
  if (dims.empty() || dims.size() > 2) {
    throw ValidationError("walks have 1 or 2 dimensions, got " +
                          std::to_string(dims.size()));
  }
  for (int d : dims) {
    if (d < 1) throw ValidationError("each dimension needs at least 1 node qubit");
  }
  if (node_qubits() > kMaxNodeQubits) {
    throw ValidationError("at most " + std::to_string(kMaxNodeQubits) +
                          " node qubits are supported");
  }
  if (steps < 0) throw ValidationError("step count must be non-negative");
  if (!coin.is_hadamard() &&
      coin.matrix().size() != (std::size_t{1} << (2 * coin_qubits()))) {
    throw ValidationError("custom coin must be " +
                          std::to_string(1 << coin_qubits()) + "x" +
                          std::to_string(1 << coin_qubits()) + " for a " +
                          std::to_string(num_dims()) + "D walk");
  }
  const BasisIndex nodes = BasisIndex{1} << node_qubits();
  for (const auto& b : boundaries) {
    if (!b.reflection.empty()) {
      require_unitary(b.reflection, "reflection");
      if (num_dims() == 1 && b.reflection.size() != 4) {
        throw ValidationError("1D reflection must be 2x2");
      }
    }
    switch (b.kind) {
      case BoundaryKind::kLine:
        if (num_dims() != 1) throw ValidationError("line boundaries are 1D only");
        if (b.node >= nodes) {
          throw ValidationError("boundary node " + std::to_string(b.node) +
                                " outside 0.." + std::to_string(nodes - 1));
        }
        break;
      case BoundaryKind::kSingle: {
        if (num_dims() != 2) throw ValidationError("single-state boundaries are 2D only");
        if (b.v >= (BasisIndex{1} << dims[0]) || b.h >= (BasisIndex{1} << dims[1])) {
          throw ValidationError("single-state boundary node outside the grid");
        }
        const int k = std::popcount(b.blocked);
        if (b.blocked & ~0xFu) throw ValidationError("unknown direction bits");
        if (k < 1 || k > 3) {
          throw ValidationError("a single-state boundary blocks 1 to 3 directions, got " +
                                std::to_string(k));
        }
        break;
      }
      case BoundaryKind::kGlobal:
        if (num_dims() != 2) throw ValidationError("global boundaries are 2D only");
        if (b.axis != 0 && b.axis != 1) throw ValidationError("axis must be 0 (v) or 1 (h)");
        if (b.value >= (BasisIndex{1} << dims[b.axis])) {
          throw ValidationError("global boundary value outside the subregister");
        }
        break;
    }
  }
  if (initial.kind == InitialState::Kind::kBasis) {
    if (initial.node >= nodes) throw ValidationError("initial node outside the grid");
    if (initial.coin >= (BasisIndex{1} << coin_qubits())) {
      throw ValidationError("initial coin state out of range");
    }
  }
}

std::vector<Qubit> WalkLayout::nodes() const {
  std::vector<Qubit> out;
  for (const auto& d : dims) out.insert(out.end(), d.begin(), d.end());
  return out;
}

WalkLayout walk_layout(std::span<const int> dims) {
  WalkLayout l;
  Qubit next = 0;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    std::vector<Qubit> qs;
    for (int i = 0; i < dims[d]; ++i) {
      qs.push_back(next++);
      l.reg.push_back({Role::kNode, static_cast<int>(d), i});
    }
    l.dims.push_back(std::move(qs));
  }
  for (std::size_t j = 0; j < dims.size(); ++j) {
    l.coins.push_back(next++);
    l.reg.push_back({Role::kCoin, 0, static_cast<int>(j)});
  }
  return l;
}

WalkLayout walk_layout(const WalkSpec& spec) { return walk_layout(spec.dims); }

// ---------------------------------------------------------------------------

Circuit qft(const Register& reg, std::span<const Qubit> qs) {
  if (qs.empty()) throw ValidationError("qft needs at least one qubit");
  Circuit c(reg);
  const std::size_t n = qs.size();
  for (std::size_t i = 0; i < n; ++i) {
    c.h(qs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      c.cp(qs[j], qs[i], pi / static_cast<double>(std::size_t{1} << (j - i)));
    }
  }
  for (std::size_t i = 0; i < n / 2; ++i) c.swap(qs[i], qs[n - 1 - i]);
  return c;
}

Circuit qft_dag(const Register& reg, std::span<const Qubit> qs) {
  return adjoint(qft(reg, qs));
}

Circuit qft(int n) {
  std::vector<Qubit> qs(n);
  for (int i = 0; i < n; ++i) qs[i] = i;
  return qft(plain_register(n), qs);
}

Circuit qadd(const Register& reg, std::span<const Qubit> dim_register,
             std::span<const Qubit> subset, int sign,
             std::span<const Qubit> controls) {
  if (sign != 1 && sign != -1) throw ValidationError("qadd sign must be +1 or -1");
  if (subset.empty() || subset.size() > dim_register.size() ||
      !std::equal(subset.begin(), subset.end(),
                  dim_register.end() - static_cast<std::ptrdiff_t>(subset.size()))) {
    throw ValidationError(
        "qadd subset must be the trailing (least significant) qubits of its register");
  }
  for (Qubit q : controls) {
    if (std::find(dim_register.begin(), dim_register.end(), q) != dim_register.end()) {
      throw ValidationError("qadd controls overlap the node register");
    }
  }
  Circuit c(reg);
  for (std::size_t r = 0; r < subset.size(); ++r) {
    const double angle = sign * pi / static_cast<double>(std::size_t{1} << r);
    c.add(Gate::phase(subset[r], angle).controlled_by(controls));
  }
  return c;
}

// ---------------------------------------------------------------------------

Circuit coin_boundary_1d(const WalkLayout& layout, const BoundarySpec& b,
                         const Coin& coin) {
  if (layout.dims.size() != 1 || b.kind != BoundaryKind::kLine) {
    throw ValidationError("coin_boundary_1d needs a 1D layout and a line boundary");
  }
  const auto& nodes = layout.dims[0];
  const int n = static_cast<int>(nodes.size());
  if (b.node >= (BasisIndex{1} << n)) {
    throw ValidationError("boundary node " + std::to_string(b.node) + " out of range");
  }
  Circuit c = with_register(layout);
  boundary_at(c, layout, nodes, b.node, b, coin);
  boundary_at(c, layout, nodes, wrap_add(b.node, 1, n), b, coin);
  return c;
}

Circuit boundary_2d(const WalkLayout& layout, const BoundarySpec& b,
                    const Coin& coin) {
  if (layout.dims.size() != 2) throw ValidationError("boundary_2d needs a 2D layout");
  const int nv = static_cast<int>(layout.dims[0].size());
  const int nh = static_cast<int>(layout.dims[1].size());
  Circuit c = with_register(layout);
  if (b.kind == BoundaryKind::kGlobal) {
    const auto& qs = layout.dims[b.axis];
    const int bits = b.axis == 0 ? nv : nh;
    boundary_at(c, layout, qs, b.value, b, coin);
    boundary_at(c, layout, qs, wrap_add(b.value, 1, bits), b, coin);
    return c;
  }
  if (b.kind != BoundaryKind::kSingle) {
    throw ValidationError("boundary_2d needs a single-state or global boundary");
  }
  const int k = std::popcount(b.blocked);
  if (k < 1 || k > 3) {
    throw ValidationError("a single-state boundary blocks 1 to 3 directions");
  }
  // The node itself, then each neighbour across a blocked edge.
  std::vector<std::pair<BasisIndex, BasisIndex>> sites{{b.v, b.h}};
  for (const Move& m : kMoves) {
    if (!(b.blocked & m.dir)) continue;
    std::pair<BasisIndex, BasisIndex> s{b.v, b.h};
    if (m.dim == 0) s.first = wrap_add(b.v, m.sign, nv);
    else s.second = wrap_add(b.h, m.sign, nh);
    if (std::find(sites.begin(), sites.end(), s) == sites.end()) sites.push_back(s);
  }
  const auto nodes = layout.nodes();
  for (const auto& [v, h] : sites) {
    boundary_at(c, layout, nodes, (v << nh) | h, b, coin);
  }
  return c;
}

Circuit shift_phase_1d(const WalkLayout& layout) {
  const auto& nodes = layout.dims.at(0);
  const Qubit coin = layout.coins.at(0);
  const std::vector<Qubit> ctl{coin};
  Circuit c = with_register(layout);
  c.append(qadd(layout.reg, nodes, nodes, -1, ctl));
  c.x(coin);
  c.append(qadd(layout.reg, nodes, nodes, +1, ctl));
  c.x(coin);
  return c;
}

Circuit shift_phase_2d(const WalkLayout& layout) {
  if (layout.dims.size() != 2) throw ValidationError("shift_2d needs a 2D layout");
  const auto& coins = layout.coins;
  Circuit c = with_register(layout);
  for (const Move& m : kMoves) {
    const int state = coin_state_of(m.dir);
    const bool one0 = state & 0b10, one1 = state & 0b01;
    if (!one0) c.x(coins[0]);
    if (!one1) c.x(coins[1]);
    const auto& dim = layout.dims[m.dim];
    c.append(qadd(layout.reg, dim, dim, m.sign, coins));
    if (!one0) c.x(coins[0]);
    if (!one1) c.x(coins[1]);
  }
  return c;
}

Circuit shift_2d(const WalkSpec& spec) {
  check_dims(spec, 2, "shift_2d");
  spec.validate();
  const WalkLayout l = walk_layout(spec);
  Circuit c = with_register(l);
  for (const auto& d : l.dims) c.append(qft(l.reg, d));
  c.append(shift_phase_2d(l));
  for (const auto& d : l.dims) c.append(qft_dag(l.reg, d));
  return c;
}

// ---------------------------------------------------------------------------

namespace {

Circuit boundary_blocks(const WalkSpec& spec, const WalkLayout& l) {
  Circuit c = with_register(l);
  for (const auto& b : spec.boundaries) {
    c.append(spec.num_dims() == 1 ? coin_boundary_1d(l, b, spec.coin)
                                  : boundary_2d(l, b, spec.coin));
  }
  return c;
}

Circuit shift_phase(const WalkLayout& l) {
  return l.dims.size() == 1 ? shift_phase_1d(l) : shift_phase_2d(l);
}

// Periodic walk: one QFT per subregister around all M steps.
Circuit unbounded_walk(const WalkSpec& spec) {
  const WalkLayout l = walk_layout(spec);
  Circuit c = with_register(l);
  for (const auto& d : l.dims) c.append(qft(l.reg, d));
  const Circuit coin = coin_op(l.reg, l.coins, spec.coin);
  const Circuit shift = shift_phase(l);
  for (int m = 0; m < spec.steps; ++m) {
    c.append(coin);
    c.append(shift);
  }
  for (const auto& d : l.dims) c.append(qft_dag(l.reg, d));
  return c;
}

Circuit repeated_steps(const WalkSpec& spec) {
  const Circuit step = step_circuit(spec);
  Circuit c(step.qubits());
  for (int m = 0; m < spec.steps; ++m) c.append(step);
  return c;
}

}  // namespace

Circuit coin_stage(const WalkSpec& spec) {
  spec.validate();
  const WalkLayout l = walk_layout(spec);
  Circuit c = coin_op(l.reg, l.coins, spec.coin);
  c.append(boundary_blocks(spec, l));
  return c;
}

Circuit shift_stage(const WalkSpec& spec) {
  spec.validate();
  const WalkLayout l = walk_layout(spec);
  Circuit c = with_register(l);
  for (const auto& d : l.dims) c.append(qft(l.reg, d));
  c.append(shift_phase(l));
  for (const auto& d : l.dims) c.append(qft_dag(l.reg, d));
  return c;
}

Circuit step_circuit(const WalkSpec& spec) {
  return coin_stage(spec).append(shift_stage(spec));
}

Circuit core_walk_1d(const WalkSpec& spec) {
  check_dims(spec, 1, "core_walk_1d");
  spec.validate();
  if (spec.bounded()) {
    throw ValidationError("core_walk_1d takes no boundaries; use bounded_walk_1d");
  }
  return unbounded_walk(spec);
}

Circuit bounded_walk_1d(const WalkSpec& spec) {
  check_dims(spec, 1, "bounded_walk_1d");
  spec.validate();
  if (!spec.bounded()) throw ValidationError("bounded_walk_1d needs a boundary");
  check_initialization(spec);
  return repeated_steps(spec);
}

Circuit walk_2d(const WalkSpec& spec) {
  check_dims(spec, 2, "walk_2d");
  spec.validate();
  if (!spec.bounded()) return unbounded_walk(spec);
  check_initialization(spec);
  return repeated_steps(spec);
}

Circuit walk_circuit(const WalkSpec& spec) {
  spec.validate();
  if (spec.num_dims() == 2) return walk_2d(spec);
  return spec.bounded() ? bounded_walk_1d(spec) : core_walk_1d(spec);
}

// ---------------------------------------------------------------------------

Circuit preparation_circuit(const WalkSpec& spec) {
  spec.validate();
  const WalkLayout l = walk_layout(spec);
  Circuit c = with_register(l);
  const auto nodes = l.nodes();
  if (spec.initial.kind == InitialState::Kind::kUniform) {
    for (Qubit q : nodes) c.h(q);
    return c;
  }
  x_transform(c, nodes, ~spec.initial.node);  // X where the bit is 1
  x_transform(c, l.coins, ~spec.initial.coin);
  return c;
}

WalkState initial_state(const WalkSpec& spec) {
  const Circuit prep = preparation_circuit(spec);
  WalkState s(prep.num_qubits());
  apply_circuit(s, prep);
  return s;
}

std::vector<BasisIndex> forbidden_states(const WalkSpec& spec) {
  spec.validate();
  std::vector<BasisIndex> out;
  const int coins = spec.coin_qubits();
  auto add = [&](BasisIndex node, int coin) {
    const BasisIndex idx = (node << coins) | static_cast<BasisIndex>(coin);
    if (std::find(out.begin(), out.end(), idx) == out.end()) out.push_back(idx);
  };
  for (const auto& b : spec.boundaries) {
    switch (b.kind) {
      case BoundaryKind::kLine:
        add(b.node, 0);
        add(wrap_add(b.node, 1, spec.dims[0]), 1);
        break;
      case BoundaryKind::kSingle:
        for (const Move& m : kMoves) {
          if (b.blocked & m.dir) add((b.v << spec.dims[1]) | b.h, coin_state_of(m.dir));
        }
        break;
      case BoundaryKind::kGlobal: {
        const int nh = spec.dims[1];
        const int bits = spec.dims[b.axis];
        const BasisIndex other = BasisIndex{1} << spec.dims[1 - b.axis];
        const BasisIndex lo = b.value, hi = wrap_add(b.value, 1, bits);
        // Moving from lo to hi, and from hi back to lo, is blocked.
        const Direction fwd = b.axis == 1 ? kRight : kUp;
        const Direction back = b.axis == 1 ? kLeft : kDown;
        for (BasisIndex o = 0; o < other; ++o) {
          const auto node = [&](BasisIndex val) {
            return b.axis == 1 ? (o << nh) | val : (val << nh) | o;
          };
          add(node(lo), coin_state_of(fwd));
          add(node(hi), coin_state_of(back));
        }
        break;
      }
    }
  }
  return out;
}

std::vector<std::pair<BasisIndex, BasisIndex>> blocked_edges(const WalkSpec& spec) {
  const int coins = spec.coin_qubits();
  const BasisIndex coin_mask = (BasisIndex{1} << coins) - 1;
  std::vector<std::pair<BasisIndex, BasisIndex>> out;
  for (BasisIndex idx : forbidden_states(spec)) {
    const BasisIndex node = idx >> coins;
    const int coin = static_cast<int>(idx & coin_mask);
    BasisIndex other = 0;
    if (spec.num_dims() == 1) {
      other = wrap_add(node, coin == 0 ? +1 : -1, spec.dims[0]);
    } else {
      const int nh = spec.dims[1];
      BasisIndex v = node >> nh, h = node & ((BasisIndex{1} << nh) - 1);
      for (const Move& m : kMoves) {
        if (coin_state_of(m.dir) != coin) continue;
        if (m.dim == 0) v = wrap_add(v, m.sign, spec.dims[0]);
        else h = wrap_add(h, m.sign, nh);
      }
      other = (v << nh) | h;
    }
    const std::pair<BasisIndex, BasisIndex> e{std::min(node, other), std::max(node, other)};
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

double initial_leak(const WalkSpec& spec) {
  if (!spec.bounded()) return 0.0;
  WalkState s = initial_state(spec);
  apply_circuit(s, coin_stage(spec));
  double leak = 0.0;
  for (BasisIndex i : forbidden_states(spec)) leak = std::max(leak, std::norm(s[i]));
  return leak;
}

void check_initialization(const WalkSpec& spec) {
  if (spec.init_check != InitCheck::kStrict || !spec.bounded()) return;
  const double leak = initial_leak(spec);
  if (leak > 1e-9) {
    throw ValidationError(
        "initial state puts probability " + std::to_string(leak) +
        " on a forbidden boundary state; choose another start or allow the leak");
  }
}

// ---------------------------------------------------------------------------

namespace {
const std::vector<int> kThreeNodes{3};
}

Circuit qft_roundtrip_experiment(int bits) {
  if (bits < 0 || bits > 7) throw ValidationError("initial state must be 3 bits (0..7)");
  const WalkLayout l = walk_layout(kThreeNodes);
  const auto& nodes = l.dims[0];
  Circuit c = with_register(l);
  x_transform(c, nodes, ~static_cast<BasisIndex>(bits));
  c.append(qft(l.reg, nodes));
  c.append(qft_dag(l.reg, nodes));
  return c;
}

Circuit shift_experiment(int k) {
  if (k < 1 || k > 7) throw ValidationError("shift count must be 1..7");
  const WalkLayout l = walk_layout(kThreeNodes);
  const auto& nodes = l.dims[0];
  const Qubit coin = l.coins[0];
  const std::vector<Qubit> ctl{coin};
  Circuit c = with_register(l);
  c.append(qft(l.reg, nodes));
  for (int i = 0; i < k; ++i) {
    c.x(coin);
    c.append(qadd(l.reg, nodes, nodes, +1, ctl));
    c.x(coin);
  }
  c.append(qft_dag(l.reg, nodes));
  return c;
}

}  // namespace qwalk
