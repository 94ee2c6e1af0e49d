#include "qwalk/topology.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "qwalk/circuit.hpp"

namespace qwalk {

CouplingGraph::CouplingGraph(int num_qubits, std::vector<Edge> edges, std::string name)
    : num_qubits_(num_qubits), adj_(num_qubits), name_(std::move(name)) {
  if (num_qubits < 1) throw ValidationError("coupling graph needs at least one qubit");
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits || a == b) {
      throw ValidationError("bad coupling edge " + std::to_string(a) + "-" +
                            std::to_string(b));
    }
    if (adjacent(a, b)) continue;
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (auto& n : adj_) std::sort(n.begin(), n.end());
}

CouplingGraph CouplingGraph::t_junction() {
  return CouplingGraph(4, {{0, 1}, {0, 2}, {0, 3}}, "t_junction");
}

CouplingGraph CouplingGraph::heavy_hex_patch(bool with_spare) {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5},
                      {5, 6}, {6, 7}, {6, 8}};
  if (with_spare) e.emplace_back(4, 9);
  return CouplingGraph(with_spare ? 10 : 9, std::move(e),
                       with_spare ? "heavy_hex_patch" : "heavy_hex_patch_nospare");
}

CouplingGraph CouplingGraph::parse_edge_list(std::istream& is, std::string name) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    int a = 0, b = 0;
    if (!(row >> a)) continue;  // blank line
    std::string rest;
    if (!(row >> b) || (row >> rest)) {
      throw ValidationError("edge list line " + std::to_string(lineno) +
                            ": expected two qubit ids");
    }
    edges.emplace_back(a, b);
    max_id = std::max({max_id, a, b});
  }
  if (edges.empty()) throw ValidationError("edge list is empty");
  return CouplingGraph(max_id + 1, std::move(edges), std::move(name));
}

CouplingGraph CouplingGraph::load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read edge list " + path);
  return parse_edge_list(in, path);
}

bool CouplingGraph::adjacent(PhysicalQubit a, PhysicalQubit b) const {
  if (a < 0 || a >= num_qubits_) return false;
  const auto& n = adj_[a];
  return std::find(n.begin(), n.end(), b) != n.end();
}

int CouplingGraph::max_degree() const {
  int d = 0;
  for (const auto& n : adj_) d = std::max(d, static_cast<int>(n.size()));
  return d;
}

std::vector<PhysicalQubit> CouplingGraph::shortest_path(PhysicalQubit a,
                                                        PhysicalQubit b) const {
  // BFS from b so that following parents from a walks toward b; neighbour
  // lists are sorted, so the first parent found is the lowest id.
  std::vector<int> dist(num_qubits_, -1);
  std::queue<PhysicalQubit> q;
  dist[b] = 0;
  q.push(b);
  while (!q.empty()) {
    const PhysicalQubit u = q.front();
    q.pop();
    for (PhysicalQubit v : adj_[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  if (dist[a] < 0) return {};
  std::vector<PhysicalQubit> path{a};
  while (path.back() != b) {
    const PhysicalQubit u = path.back();
    for (PhysicalQubit v : adj_[u]) {
      if (dist[v] == dist[u] - 1) {
        path.push_back(v);
        break;
      }
    }
  }
  return path;
}

bool CouplingGraph::connected(std::span<const PhysicalQubit> qubits) const {
  if (qubits.empty()) return true;
  std::vector<PhysicalQubit> seen{qubits[0]};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (PhysicalQubit v : adj_.at(seen[i])) {
      const bool member = std::find(qubits.begin(), qubits.end(), v) != qubits.end();
      if (member && std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
  }
  return seen.size() == qubits.size();
}

// ---------------------------------------------------------------------------

Layout::Layout(int num_logical, std::vector<PhysicalQubit> physical_of_slot)
    : num_logical_(num_logical), phys_(std::move(physical_of_slot)) {
  const int n = num_physical();
  if (num_logical < 0 || num_logical > n) {
    throw ValidationError("more logical qubits than physical qubits");
  }
  slot_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    const PhysicalQubit p = phys_[s];
    if (p < 0 || p >= n || slot_[p] != -1) {
      throw ValidationError("layout is not a bijection");
    }
    slot_[p] = s;
  }
  initial_ = phys_;
}

Layout Layout::trivial(int num_logical, int num_physical) {
  std::vector<PhysicalQubit> p(num_physical);
  for (int i = 0; i < num_physical; ++i) p[i] = i;
  return Layout(num_logical, std::move(p));
}

std::vector<PhysicalQubit> Layout::positions() const {
  return {phys_.begin(), phys_.begin() + num_logical_};
}

void Layout::exchange(PhysicalQubit a, PhysicalQubit b) {
  const int sa = slot_.at(a), sb = slot_.at(b);
  std::swap(slot_[a], slot_[b]);
  phys_[sa] = b;
  phys_[sb] = a;
}

void Layout::swap(PhysicalQubit a, PhysicalQubit b) {
  exchange(a, b);
  log_.push_back({LayoutEvent::Kind::kSwap, a, b});
}

void Layout::relabel(PhysicalQubit a, PhysicalQubit b) {
  exchange(a, b);
  log_.push_back({LayoutEvent::Kind::kRelabel, a, b});
}

Layout Layout::start() const { return Layout(num_logical_, initial_); }

Layout Layout::replay(bool include_relabels) const {
  Layout l = start();
  for (const auto& e : log_) {
    if (e.kind == LayoutEvent::Kind::kSwap) l.swap(e.a, e.b);
    else if (include_relabels) l.relabel(e.a, e.b);
  }
  return l;
}

}  // namespace qwalk
