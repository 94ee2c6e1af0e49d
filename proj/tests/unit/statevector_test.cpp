#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/statevector.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

WalkState random_state(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  for (auto& z : a) z = {g(rng), g(rng)};
  WalkState s(n, std::move(a));
  s.normalize();
  return s;
}

Gate random_gate(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 6), pick(0, n - 1);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  const int a = pick(rng);
  int b = pick(rng);
  while (n > 1 && b == a) b = pick(rng);
  int c = pick(rng);
  while (n > 2 && (c == a || c == b)) c = pick(rng);
  switch (n < 3 ? kind(rng) % 5 : kind(rng)) {
    case 0: return Gate::h(a);
    case 1: return Gate::x(a);
    case 2: return Gate::phase(a, angle(rng));
    case 3: return n > 1 ? Gate::cx(a, b) : Gate::h(a);
    case 4: return n > 1 ? Gate::swap(a, b) : Gate::x(a);
    case 5: return Gate::ccx(a, b, c);
    default: return Gate::cp(a, b, angle(rng)).controlled_by({c});
  }
}

double max_diff(const WalkState& a, const WalkState& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(StateVector, BasisStates) {
  const WalkState one = new_basis_state(1, 0);
  ASSERT_EQ(one.dimension(), 2u);
  EXPECT_EQ(one[0], Complex(1.0));
  EXPECT_EQ(one[1], Complex(0.0));
  const WalkState five = new_basis_state(3, 5);
  for (BasisIndex i = 0; i < 8; ++i) EXPECT_EQ(five[i], Complex(i == 5 ? 1.0 : 0.0));
  EXPECT_THROW(new_basis_state(4, 16), std::out_of_range);
}

TEST(StateVector, GateDefinitions) {
  const WalkState plus = applied(WalkState(1), Gate::h(0));
  EXPECT_NEAR(plus[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(plus[1].real(), 1.0 / std::sqrt(2.0), 1e-15);

  const WalkState cx = applied(new_basis_state(2, 0b10), Gate::cx(0, 1));
  EXPECT_EQ(cx[0b11], Complex(1.0));

  const Gate cp = Gate::cp(0, 1, std::numbers::pi);
  EXPECT_NEAR(applied(new_basis_state(2, 0b11), cp)[0b11].real(), -1.0, 1e-15);
  EXPECT_NEAR(applied(new_basis_state(2, 0b10), cp)[0b10].real(), 1.0, 1e-15);
}

TEST(StateVector, QubitZeroIsMostSignificant) {
  EXPECT_EQ(qubit_mask(3, 0), 4u);
  EXPECT_EQ(qubit_mask(3, 2), 1u);
  EXPECT_EQ(applied(WalkState(3), Gate::x(0))[4], Complex(1.0));
}

TEST(StateVector, CircuitIdentities) {
  std::mt19937 rng(1);
  const WalkState s = random_state(3, rng);
  EXPECT_EQ(max_diff(applied(s, Circuit(3)), s), 0.0);
  Circuit xx(1);
  xx.x(0).x(0);
  EXPECT_EQ(applied(WalkState(1), xx)[0], Complex(1.0));

  const Register reg = plain_register(3);
  const std::vector<Qubit> qs{0, 1, 2};
  Circuit rt = qft(reg, qs);
  rt.append(qft_dag(reg, qs));
  EXPECT_LT(max_diff(applied(new_basis_state(3, 0b011), rt), new_basis_state(3, 0b011)), 1e-10);
}

TEST(StateVector, RejectsBadGates) {
  WalkState s(2);
  EXPECT_THROW(apply_gate(s, Gate::x(2)), std::out_of_range);
  EXPECT_THROW(apply_circuit(s, Circuit(3)), ValidationError);
}

TEST(StateVector, MarginalsAndFidelity) {
  const WalkState five = new_basis_state(3, 5);
  const std::vector<Qubit> all{0, 1, 2};
  const Distribution d = marginal_distribution(five, all);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(d[i], i == 5 ? 1.0 : 0.0);

  // (|5>|0> + |5>|1>)/sqrt2 on 3 node qubits + coin.
  WalkState s(4);
  s[0] = 0.0;
  s[10] = s[11] = 1.0 / std::sqrt(2.0);
  const std::vector<Qubit> nodes{0, 1, 2};
  const Distribution n = marginal_distribution(s, nodes);
  EXPECT_NEAR(n[5], 1.0, 1e-15);
  EXPECT_NEAR(n.total(), 1.0, 1e-15);

  EXPECT_DOUBLE_EQ(fidelity(WalkState(1), WalkState(1)), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(WalkState(1), new_basis_state(1, 1)), 0.0);
  EXPECT_NEAR(fidelity(WalkState(1), applied(WalkState(1), Gate::h(0))), 0.5, 1e-15);
}

TEST(StateVector, FullMarginalIsSquaredAmplitudes) {
  std::mt19937 rng(7);
  const WalkState s = random_state(4, rng);
  const std::vector<Qubit> all{0, 1, 2, 3};
  const Distribution d = marginal_distribution(s, all);
  for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_NEAR(d[i], std::norm(s[i]), 1e-15);
  // Listing order defines significance.
  const std::vector<Qubit> swapped{1, 0};
  const Distribution a = marginal_distribution(new_basis_state(2, 0b10), swapped);
  EXPECT_EQ(a[0b01], 1.0);
}

TEST(StateVector, NormPreservedByEveryGate) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    WalkState s = random_state(4, rng);
    apply_gate(s, random_gate(4, rng));
    EXPECT_NEAR(s.norm(), 1.0, 1e-10);
  }
}

TEST(StateVector, Linearity) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const WalkState a = random_state(3, rng), b = random_state(3, rng);
    const Complex alpha(0.6, 0.2), beta(-0.3, 0.7);
    std::vector<Complex> mix(8);
    for (int i = 0; i < 8; ++i) mix[i] = alpha * a[i] + beta * b[i];
    const Gate g = random_gate(3, rng);
    const WalkState lhs = applied(WalkState(3, mix), g);
    const WalkState ga = applied(a, g), gb = applied(b, g);
    for (int i = 0; i < 8; ++i) EXPECT_LT(std::abs(lhs[i] - (alpha * ga[i] + beta * gb[i])), 1e-10);
  }
}

TEST(StateVector, AdjointRoundTrip) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(1, 6), len(0, 50);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = size(rng);
    Circuit c(n);
    for (int i = len(rng); i > 0; --i) c.add(random_gate(n, rng));
    const WalkState s = random_state(n, rng);
    const WalkState back = applied(applied(s, c), adjoint(c));
    EXPECT_LT(max_diff(back, s), 1e-9);
  }
}

TEST(StateVector, EmbedExtract) {
  std::mt19937 rng(2);
  const WalkState s = random_state(2, rng);
  const std::vector<Qubit> pos{3, 1};
  const WalkState big = embed(s, pos, 4);
  EXPECT_LT(max_diff(extract(big, pos), s), 1e-15);
  const std::vector<Qubit> wrong{0, 2};
  EXPECT_THROW(extract(big, wrong), ValidationError);
}
