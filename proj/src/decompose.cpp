#include "qwalk/decompose.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace qwalk {
namespace {

using std::numbers::pi;
using Mat2 = std::array<Complex, 4>;

// Euler angles with U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct Zyz {
  double alpha, beta, gamma, delta;
};

Zyz zyz_of(const Mat2& u) {
  const Complex det = u[0] * u[3] - u[1] * u[2];
  const double alpha = std::arg(det) / 2.0;
  const Complex ph = std::polar(1.0, -alpha);
  const Complex v00 = u[0] * ph, v10 = u[2] * ph, v11 = u[3] * ph;
  const double gamma = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
  double sum = 0.0;   // beta + delta
  double diff = 0.0;  // beta - delta
  if (std::abs(v00) > 1e-12) sum = 2.0 * std::arg(v11);
  if (std::abs(v10) > 1e-12) diff = 2.0 * std::arg(v10);
  if (std::abs(v00) <= 1e-12) sum = diff;  // only beta - delta is fixed
  if (std::abs(v10) <= 1e-12) diff = sum;
  return {alpha, (sum + diff) / 2.0, gamma, (sum - diff) / 2.0};
}

Mat2 matrix_of(const Gate& g) {
  const double s = 1.0 / std::numbers::sqrt2;
  switch (g.kind) {
    case GateKind::kH: return {s, s, s, -s};
    case GateKind::kX: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kPhase: return {1.0, 0.0, 0.0, std::polar(1.0, g.angle)};
    case GateKind::kUnitary:
      return {g.matrix[0], g.matrix[1], g.matrix[2], g.matrix[3]};
    case GateKind::kSwap: break;
  }
  throw std::logic_error("matrix_of: not a single-qubit gate");
}

class Decomposer {
 public:
  Decomposer(Register reg, std::vector<Qubit> clean)
      : out_(std::move(reg)), clean_(std::move(clean)) {}

  Circuit take() { return std::move(out_); }

  void gate(const Gate& g) {
    const auto& c = g.controls;
    if (c.size() >= 3 && clean_.size() >= c.size() - 1) {
      ladder(g);
      return;
    }
    switch (g.kind) {
      case GateKind::kX: mcx(c, g.targets[0]); return;
      case GateKind::kPhase: {
        std::vector<Qubit> all = c;
        all.push_back(g.targets[0]);
        mcp(all, g.angle);
        return;
      }
      case GateKind::kH:
        if (c.empty()) {
          out_.h(g.targets[0]);
        } else {
          controlled_u(matrix_of(g), g.targets[0], c);
        }
        return;
      case GateKind::kSwap: {
        const Qubit a = g.targets[0], b = g.targets[1];
        out_.cx(b, a);
        std::vector<Qubit> ctl = c;
        ctl.push_back(a);
        mcx(ctl, b);
        out_.cx(b, a);
        return;
      }
      case GateKind::kUnitary:
        if (g.targets.size() != 1) {
          throw ValidationError("no registered decomposition for custom " +
                                std::to_string(g.targets.size()) +
                                "-qubit gate '" + g.label + "'");
        }
        controlled_u(matrix_of(g), g.targets[0], c);
        return;
    }
  }

 private:
  void phase(Qubit q, double a) {
    a = normalize_angle(a);
    if (std::abs(a) < 1e-14) return;
    out_.phase(q, a);
  }

  // Diagonal phase e^{i phi} on the all-ones state of `qs`.
  void mcp(const std::vector<Qubit>& qs, double phi) {
    const std::size_t m = qs.size();
    if (m == 1) {
      phase(qs[0], phi);
      return;
    }
    if (m == 2) {
      const Qubit c = qs[0], t = qs[1];
      phase(c, phi / 2);
      out_.cx(c, t);
      phase(t, -phi / 2);
      out_.cx(c, t);
      phase(t, phi / 2);
      return;
    }
    // x_1...x_m = 2^{1-m} sum_S (-1)^{|S|+1} parity(S).
    const double unit = phi / static_cast<double>(std::size_t{1} << (m - 1));
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      std::vector<Qubit> s;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (std::size_t{1} << i)) s.push_back(qs[i]);
      }
      const Qubit last = s.back();
      for (std::size_t i = 0; i + 1 < s.size(); ++i) out_.cx(s[i], last);
      phase(last, (s.size() % 2 == 1) ? unit : -unit);
      for (std::size_t i = s.size() - 1; i-- > 0;) out_.cx(s[i], last);
    }
  }

  void toffoli(Qubit a, Qubit b, Qubit t) {
    const double q = pi / 4;
    out_.h(t);
    out_.cx(b, t);
    phase(t, -q);
    out_.cx(a, t);
    phase(t, q);
    out_.cx(b, t);
    phase(t, -q);
    out_.cx(a, t);
    phase(b, q);
    phase(t, q);
    out_.h(t);
    out_.cx(a, b);
    phase(a, q);
    phase(b, -q);
    out_.cx(a, b);
  }

  void mcx(const std::vector<Qubit>& c, Qubit t) {
    switch (c.size()) {
      case 0: out_.x(t); return;
      case 1: out_.cx(c[0], t); return;
      case 2: toffoli(c[0], c[1], t); return;
      default: {
        out_.h(t);
        std::vector<Qubit> all = c;
        all.push_back(t);
        mcp(all, pi);
        out_.h(t);
      }
    }
  }

  void rz(Qubit q, double a) { phase(q, a); }  // equal up to global phase

  void ry(Qubit q, double a) {
    if (std::abs(normalize_angle(a)) < 1e-14) return;
    phase(q, -pi / 2);
    out_.h(q);
    phase(q, a);
    out_.h(q);
    phase(q, pi / 2);
  }

  void controlled_u(const Mat2& u, Qubit t, const std::vector<Qubit>& c) {
    const Zyz z = zyz_of(u);
    if (c.empty()) {
      rz(t, z.delta);
      ry(t, z.gamma);
      rz(t, z.beta);
      return;
    }
    // A = Rz(beta) Ry(gamma/2), B = Ry(-gamma/2) Rz(-(delta+beta)/2),
    // C = Rz((delta-beta)/2); ABC = I and A X B X C = e^{-i alpha} U.
    rz(t, (z.delta - z.beta) / 2);
    mcx(c, t);
    rz(t, -(z.delta + z.beta) / 2);
    ry(t, -z.gamma / 2);
    mcx(c, t);
    ry(t, z.gamma / 2);
    rz(t, z.beta);
    mcp(c, z.alpha);
  }

  // Computes the AND of the controls into clean ancillas, applies the gate
  // with that single control, then uncomputes.
  void ladder(const Gate& g) {
    const auto& c = g.controls;
    const std::size_t k = c.size();
    std::vector<Qubit> anc(clean_.begin(), clean_.begin() + (k - 1));
    std::vector<std::array<Qubit, 3>> steps;
    steps.push_back({c[0], c[1], anc[0]});
    for (std::size_t i = 2; i < k; ++i) steps.push_back({anc[i - 2], c[i], anc[i - 1]});
    for (const auto& s : steps) toffoli(s[0], s[1], s[2]);
    Gate inner = g;
    inner.controls = {anc.back()};
    gate(inner);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      toffoli((*it)[0], (*it)[1], (*it)[2]);
    }
  }

  Circuit out_;
  std::vector<Qubit> clean_;
};

std::vector<Qubit> clean_ancillas(const Circuit& c) {
  std::set<Qubit> used;
  for (const Gate& g : c.gates()) {
    for (Qubit q : g.qubits()) used.insert(q);
  }
  std::vector<Qubit> out;
  for (Qubit q : c.find(Role::kAncilla)) {
    if (!used.contains(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

Circuit decompose_to_basis(const Circuit& circuit) {
  Decomposer d(circuit.qubits(), clean_ancillas(circuit));
  for (const Gate& g : circuit.gates()) d.gate(g);
  return d.take();
}

Circuit decompose_gate(const Gate& gate, int num_qubits) {
  Decomposer d(plain_register(num_qubits), {});
  d.gate(gate);
  return d.take();
}

GateCounts count_basis(const Circuit& c) {
  GateCounts k;
  std::vector<std::size_t> level(c.num_qubits(), 0);
  std::vector<std::size_t> level2(c.num_qubits(), 0);
  for (const Gate& g : c.gates()) {
    const auto qs = g.qubits();
    const bool two = qs.size() >= 2;
    switch (g.kind) {
      case GateKind::kH: ++k.h; break;
      case GateKind::kX: (g.controls.empty() ? k.x : k.cx)++; break;
      case GateKind::kPhase: ++k.phase; break;
      default: break;
    }
    ++k.total;
    if (two) ++k.two_qubit_count;
    std::size_t l = 0, l2 = 0;
    for (Qubit q : qs) {
      l = std::max(l, level[q]);
      l2 = std::max(l2, level2[q]);
    }
    ++l;
    if (two) ++l2;
    for (Qubit q : qs) {
      level[q] = l;
      level2[q] = l2;
    }
    k.depth = std::max(k.depth, l);
    k.two_qubit_depth = std::max(k.two_qubit_depth, l2);
  }
  return k;
}

GateCounts gate_counts(const Circuit& circuit) {
  return count_basis(decompose_to_basis(circuit));
}

std::string to_string(const GateCounts& k) {
  std::ostringstream os;
  os << "h=" << k.h << "\nx=" << k.x << "\nphase=" << k.phase
     << "\ncx=" << k.cx << "\ntotal=" << k.total
     << "\ntwo_qubit_count=" << k.two_qubit_count << "\ndepth=" << k.depth
     << "\ntwo_qubit_depth=" << k.two_qubit_depth << "\n";
  return os.str();
}

}  // namespace qwalk
