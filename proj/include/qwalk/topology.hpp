#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

using PhysicalQubit = int;
using Edge = std::pair<PhysicalQubit, PhysicalQubit>;

/// Undirected coupling graph over physical qubits 0..n-1.
class CouplingGraph {
 public:
  CouplingGraph() = default;
  CouplingGraph(int num_qubits, std::vector<Edge> edges, std::string name = "custom");

  /// Degree-3 centre 0 with arms 1, 2, 3.
  static CouplingGraph t_junction();

  /// Two junctions joined by a three-qubit chain, sized for the 2D routing
  /// templates:
  ///
  ///   1   2           7   8
  ///    \ /             \ /
  ///     0 - 3 - 4 - 5 - 6
  ///             |
  ///             9   (spare, only when with_spare)
  ///
  /// 0 and 6 are the junction centres; 3, 4, 5 form the chain.
  static CouplingGraph heavy_hex_patch(bool with_spare = true);

  /// One "u v" pair per line; '#' starts a comment. Qubit count is one more
  /// than the largest id.
  static CouplingGraph parse_edge_list(std::istream& is, std::string name = "file");
  static CouplingGraph load_edge_list(const std::string& path);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }
  bool adjacent(PhysicalQubit a, PhysicalQubit b) const;
  const std::vector<PhysicalQubit>& neighbors(PhysicalQubit q) const { return adj_.at(q); }
  int degree(PhysicalQubit q) const { return static_cast<int>(adj_.at(q).size()); }
  int max_degree() const;

  /// Shortest path a..b inclusive, empty if unreachable. Among equal-length
  /// paths the one visiting lower ids first wins.
  std::vector<PhysicalQubit> shortest_path(PhysicalQubit a, PhysicalQubit b) const;
  /// True when `qubits` induce a connected subgraph.
  bool connected(std::span<const PhysicalQubit> qubits) const;

 private:
  int num_qubits_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<PhysicalQubit>> adj_;
  std::string name_;
};

struct LayoutEvent {
  enum class Kind { kSwap, kRelabel };
  Kind kind = Kind::kSwap;
  PhysicalQubit a = 0;
  PhysicalQubit b = 0;

  bool operator==(const LayoutEvent&) const = default;
};

/// Logical -> physical bijection over all physical qubits. Slots
/// 0..num_logical-1 are circuit qubits; higher slots are idle wires.
/// Every change is logged: kSwap for a physical SWAP gate, kRelabel for a
/// gate-free exchange of two logical names.
class Layout {
 public:
  Layout() = default;
  /// `physical_of_slot` must be a permutation of 0..num_physical-1.
  Layout(int num_logical, std::vector<PhysicalQubit> physical_of_slot);
  static Layout trivial(int num_logical, int num_physical);

  int num_logical() const { return num_logical_; }
  int num_physical() const { return static_cast<int>(phys_.size()); }
  PhysicalQubit physical(int logical) const { return phys_.at(logical); }
  /// Slot currently at `p`; >= num_logical() for an idle wire.
  int slot_at(PhysicalQubit p) const { return slot_.at(p); }
  /// Physical positions of logical qubits 0..num_logical-1.
  std::vector<PhysicalQubit> positions() const;
  /// Physical position of every slot, idle wires included.
  const std::vector<PhysicalQubit>& mapping() const { return phys_; }

  void swap(PhysicalQubit a, PhysicalQubit b);
  void relabel(PhysicalQubit a, PhysicalQubit b);

  const std::vector<LayoutEvent>& log() const { return log_; }
  /// Starting mapping, with an empty log.
  Layout start() const;
  /// Replays the log on start(). Relabels can be skipped to isolate the
  /// movement caused by SWAP gates.
  Layout replay(bool include_relabels = true) const;
  bool same_mapping(const Layout& other) const { return phys_ == other.phys_; }

 private:
  void exchange(PhysicalQubit a, PhysicalQubit b);

  int num_logical_ = 0;
  std::vector<PhysicalQubit> phys_;     // slot -> physical
  std::vector<int> slot_;               // physical -> slot
  std::vector<PhysicalQubit> initial_;  // slot -> physical at construction
  std::vector<LayoutEvent> log_;
};

}  // namespace qwalk
