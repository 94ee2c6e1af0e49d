#pragma once

#include <string>
#include <vector>

#include "qwalk/circuit.hpp"

namespace testing_qasm {

/// Parsed form of an emitted OpenQASM 2.0 file. Test-only: accepts exactly
/// the subset the emitter writes (h, x, cx, ccx, rz, cu1, swap, measure).
struct Program {
  int num_qubits = 0;
  bool has_creg = false;
  int measures = 0;
  std::vector<std::string> header;  // lines before qreg
  std::vector<std::string> ops;     // gate names in order
  qwalk::Circuit circuit;           // rz read back as a phase gate
};

/// Throws std::runtime_error on anything outside the subset.
Program read(const std::string& text);

double parse_angle(const std::string& text);

}  // namespace testing_qasm
