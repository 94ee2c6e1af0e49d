#include "qwalk/qasm.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qwalk/decompose.hpp"

namespace qwalk {
namespace {

std::string q(Qubit i) { return "q[" + std::to_string(i) + "]"; }

bool emit_native(std::ostringstream& os, const Gate& g) {
  const auto& c = g.controls;
  const auto& t = g.targets;
  switch (g.kind) {
    case GateKind::kH:
      if (!c.empty()) return false;
      os << "h " << q(t[0]) << ";\n";
      return true;
    case GateKind::kX:
      if (c.empty()) os << "x " << q(t[0]) << ";\n";
      else if (c.size() == 1) os << "cx " << q(c[0]) << "," << q(t[0]) << ";\n";
      else if (c.size() == 2)
        os << "ccx " << q(c[0]) << "," << q(c[1]) << "," << q(t[0]) << ";\n";
      else return false;
      return true;
    case GateKind::kPhase:
      if (c.empty()) os << "rz(" << format_angle(g.angle) << ") " << q(t[0]) << ";\n";
      else if (c.size() == 1)
        os << "cu1(" << format_angle(g.angle) << ") " << q(c[0]) << "," << q(t[0])
           << ";\n";
      else return false;
      return true;
    case GateKind::kSwap:
      if (!c.empty()) return false;
      os << "swap " << q(t[0]) << "," << q(t[1]) << ";\n";
      return true;
    case GateKind::kUnitary:
      return false;
  }
  return false;
}

}  // namespace

std::string format_angle(double a) {
  using std::numbers::pi;
  if (a == 0.0) return "0";
  // Smallest k with a = num * pi / 2^k for an integer num.
  for (int k = 0; k <= 12; ++k) {
    const double units = a / pi * std::ldexp(1.0, k);
    const double r = std::round(units);
    if (std::abs(units - r) > 1e-12) continue;
    const long long num = std::llround(r);
    std::string s = num == 1 ? "pi" : num == -1 ? "-pi" : std::to_string(num) + "*pi";
    if (k > 0) s += "/" + std::to_string(1LL << k);
    return s;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

std::string to_qasm(const Circuit& circuit, const QasmOptions& options) {
  std::ostringstream os;
  const int n = circuit.num_qubits();
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "// qubits:";
  for (const auto& l : circuit.qubits()) os << " " << l.name();
  os << "\nqreg q[" << n << "];\n";
  if (options.measure) os << "creg c[" << n << "];\n";
  for (const Gate& g : circuit.gates()) {
    if (emit_native(os, g)) continue;
    const Circuit parts = decompose_gate(g, n);
    for (const Gate& b : parts.gates()) emit_native(os, b);
  }
  if (options.measure) {
    for (int i = 0; i < n; ++i) os << "measure q[" << i << "] -> c[" << i << "];\n";
  }
  return os.str();
}

}  // namespace qwalk
