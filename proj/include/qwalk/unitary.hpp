#pragma once

#include <Eigen/Dense>

#include "qwalk/circuit.hpp"

namespace qwalk {

using Matrix = Eigen::MatrixXcd;

constexpr int kMaxUnitaryQubits = 10;

/// Dense matrix of `circuit`; column k is the circuit applied to |k>.
/// Throws ValidationError above kMaxUnitaryQubits qubits.
Matrix unitary_of(const Circuit& circuit);

/// Largest elementwise |a - e^{i theta} b| after aligning the global phase
/// on the largest-magnitude entry of b.
double distance_up_to_phase(const Matrix& a, const Matrix& b);

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol = 1e-9);

}  // namespace qwalk
