#pragma once

#include <string>

#include "qwalk/circuit.hpp"

namespace qwalk {

struct QasmOptions {
  bool measure = false;  // append creg c[n] and measure every qubit
};

/// OpenQASM 2.0 text over a single `qreg q[n]`. Emitted gate names are
/// h, x, cx, cu1, rz, swap and ccx; anything else is decomposed first.
/// A bare phase is written as rz, which differs by a global phase.
std::string to_qasm(const Circuit& circuit, const QasmOptions& options = {});

/// Angle literal: an exact multiple of pi/2^k is printed as a pi fraction.
std::string format_angle(double radians);

}  // namespace qwalk
