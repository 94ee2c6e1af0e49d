#include "qwalk/unitary.hpp"

#include <cmath>
#include <string>

#include "qwalk/statevector.hpp"

namespace qwalk {

Matrix unitary_of(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  if (n < 1 || n > kMaxUnitaryQubits) {
    throw ValidationError("unitary_of supports 1.." +
                          std::to_string(kMaxUnitaryQubits) + " qubits, got " +
                          std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix u(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    WalkState s = new_basis_state(n, static_cast<BasisIndex>(k));
    apply_circuit(s, circuit);
    for (Eigen::Index r = 0; r < dim; ++r) u(r, k) = s[static_cast<BasisIndex>(r)];
  }
  return u;
}

double distance_up_to_phase(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Complex phase = 1.0;
  if (std::abs(b(r, c)) > 0.0 && std::abs(a(r, c)) > 0.0) {
    phase = a(r, c) / b(r, c);
    phase /= std::abs(phase);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  return distance_up_to_phase(a, b) <= tol;
}

}  // namespace qwalk
