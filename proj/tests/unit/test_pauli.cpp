#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qorder/error.hpp"
#include "qorder/pauli.hpp"

using namespace qorder;

TEST(PauliString, ParseAndPrint) {
  const auto p = PauliString::parse("Z0 X1 Y3");
  EXPECT_EQ(p.at(0), Pauli::Z);
  EXPECT_EQ(p.at(1), Pauli::X);
  EXPECT_FALSE(p.at(2).has_value());
  EXPECT_EQ(p.at(3), Pauli::Y);
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p.y_count(), 1);
  EXPECT_EQ(p.max_site(), 3);
  EXPECT_EQ(p.to_string(), "Z0 X1 Y3");
  EXPECT_EQ(PauliString::parse("X3X4"), PauliString::from_word("XX", 3));
  EXPECT_EQ(PauliString::parse("").weight(), 0);
}

TEST(PauliString, RejectsMalformedLabels) {
  EXPECT_THROW(PauliString::parse("Q0"), OperatorError);
  EXPECT_THROW(PauliString::parse("X0 Z0"), OperatorError);
  EXPECT_THROW(PauliString::parse("X"), OperatorError);
  EXPECT_THROW(check_sites(PauliString::parse("X4"), 4), OperatorError);
}

TEST(PauliString, CommutationMatchesDenseCommutator) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_pauli(4, rng);
    const auto b = oracle::random_pauli(4, rng);
    const auto ma = oracle::pauli(a, 4), mb = oracle::pauli(b, 4);
    const double comm = (ma * mb - mb * ma).norm();
    EXPECT_EQ(a.commutes_with(b), comm < 1e-12) << a.to_string() << " vs " << b.to_string();
  }
}

TEST(PauliKernels, ApplyMatchesDenseOracle) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = oracle::random_pauli(n, rng);
      const auto psi = oracle::random_state(n, rng);
      const Eigen::VectorXcd expect = oracle::pauli(p, n) * oracle::vec(psi);
      EXPECT_LE(oracle::max_diff(apply_pauli(psi, p), expect), 1e-12) << p.to_string();
    }
  }
}

TEST(PauliKernels, RotationMatchesMatrixExponential) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(-2 * M_PI, 2 * M_PI);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = oracle::random_pauli(n, rng);
      const double th = angle(rng);
      auto psi = oracle::random_state(n, rng);
      const Eigen::VectorXcd expect = oracle::rotation(p, n, th) * oracle::vec(psi);
      apply_pauli_rotation(psi, p, th);
      EXPECT_LE(oracle::max_diff(psi, expect), 1e-12) << p.to_string() << " angle " << th;
    }
  }
}

TEST(PauliKernels, RotationPreservesNormAndInverts) {
  std::mt19937_64 rng(3);
  auto psi = oracle::random_state(5, rng);
  const auto orig = psi;
  const auto p = PauliString::parse("Y0 Z2 X4");
  apply_pauli_rotation(psi, p, 0.7);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-14);
  apply_pauli_rotation(psi, p, -0.7);
  EXPECT_LE(oracle::max_diff(psi, oracle::vec(orig)), 1e-14);
}

TEST(PauliKernels, RotationRejectsNonUnitCoefficient) {
  StateVector s(2);
  EXPECT_THROW(apply_pauli_rotation(s, PauliString::parse("X0", 2.0), 0.1), OperatorError);
  EXPECT_THROW(apply_pauli_rotation(s, PauliString::parse("X2"), 0.1), OperatorError);
}

TEST(PauliKernels, ControlledZMatchesDiagonal) {
  std::mt19937_64 rng(4);
  auto psi = oracle::random_state(4, rng);
  const auto v = oracle::vec(psi);
  apply_controlled_z(psi, 1, 3);
  for (std::size_t b = 0; b < psi.dim(); ++b) {
    const bool both = (b >> 1 & 1) && (b >> 3 & 1);
    EXPECT_LE(std::abs(psi[b] - (both ? -1.0 : 1.0) * v(static_cast<Eigen::Index>(b))), 1e-15);
  }
}

TEST(PauliKernels, MatrixElementAndExpectation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = oracle::random_pauli(5, rng);
    const auto a = oracle::random_state(5, rng), b = oracle::random_state(5, rng);
    const cplx expect = oracle::vec(a).dot(oracle::pauli(p, 5) * oracle::vec(b));
    EXPECT_LE(std::abs(pauli_matrix_element(a, p, b) - expect), 1e-12);
    const cplx diag = oracle::vec(a).dot(oracle::pauli(p, 5) * oracle::vec(a));
    EXPECT_NEAR(pauli_expectation(a, p), diag.real(), 1e-12);
  }
}
