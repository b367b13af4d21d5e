#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "qorder/error.hpp"
#include "qorder/exact_diag.hpp"
#include "qorder/hamiltonian.hpp"

using namespace qorder;

namespace {

// Classical energy of the h = 0 ANNNI chain on basis state b (open chain).
double annni_classical(int n, std::uint64_t b) {
  auto s = [&](int q) { return (b >> q & 1) ? -1.0 : 1.0; };
  double e = 0;
  for (int i = 0; i + 1 < n; ++i) e -= s(i) * s(i + 1);
  for (int i = 0; i + 2 < n; ++i) e -= 0.5 * s(i) * s(i + 2);
  return e;
}

}  // namespace

TEST(Hamiltonian, AnnniTermCountsAndLabels) {
  const auto h = build_ising_annni(6, 0.7);
  // 5 nn + 4 nnn + 6 field terms
  EXPECT_EQ(h.terms().size(), 15u);
  EXPECT_EQ(h.kind(), ModelKind::IsingAnnni);
  EXPECT_DOUBLE_EQ(h.field(), 0.7);
  EXPECT_TRUE(h.is_real());
  const auto pbc = build_ising_annni(6, 0.7, Boundary::Periodic);
  EXPECT_EQ(pbc.terms().size(), 18u);
  EXPECT_THROW(build_ising_annni(2), SizeError);
}

TEST(Hamiltonian, ClusterIsingTermCounts) {
  const auto h = build_cluster_ising(8, 0.5);
  // 6 ZXZ + 7 XX + 8 X
  EXPECT_EQ(h.terms().size(), 21u);
  EXPECT_EQ(h.kind(), ModelKind::ClusterIsing);
  EXPECT_THROW(build_cluster_ising(2), SizeError);
}

TEST(Hamiltonian, ApplyMatchesDenseOracle) {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 6; ++n) {
    for (const auto& h : {build_ising_annni(n, 0.9), build_ising_annni(n, 1.3, Boundary::Periodic),
                          build_cluster_ising(n, 0.4)}) {
      const auto dense = oracle::hamiltonian(h);
      const auto psi = oracle::random_state(n, rng);
      EXPECT_LE(oracle::max_diff(apply_hamiltonian(h, psi), dense * oracle::vec(psi)), 1e-12);
      EXPECT_LE((dense_matrix(h) - dense).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((dense_real_matrix(h).cast<cplx>() - dense).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Hamiltonian, EnergyMomentsMatchDense) {
  std::mt19937_64 rng(8);
  const auto h = build_cluster_ising(5, 0.5);
  const auto dense = oracle::hamiltonian(h);
  const auto psi = oracle::random_state(5, rng);
  const auto v = oracle::vec(psi);
  const auto m = energy_moments(psi, h);
  EXPECT_NEAR(m.mean, v.dot(dense * v).real(), 1e-12);
  EXPECT_NEAR(m.second_moment, v.dot(dense * dense * v).real(), 1e-11);
  EXPECT_GE(m.variance(), 0.0);
}

TEST(Hamiltonian, ModelsAreTraceless) {
  for (const auto& h : {build_ising_annni(5), build_cluster_ising(5)}) EXPECT_NEAR(std::abs(oracle::hamiltonian(h).trace()), 0.0, 1e-10);
}

TEST(ExactDiag, AnnniZeroFieldIsClassical) {
  const int n = 4;
  const auto eig = exact_diagonalize(build_ising_annni(n, 0.0));
  std::multiset<double> expect;
  for (std::uint64_t b = 0; b < 16; ++b) expect.insert(annni_classical(n, b));
  std::vector<double> got(eig.energies().data(), eig.energies().data() + eig.size());
  auto it = expect.begin();
  for (double e : got) EXPECT_NEAR(e, *it++, 1e-12);
}

TEST(ExactDiag, ClusterGroundEnergyAtZeroCoupling) {
  const auto eig = exact_diagonalize(build_cluster_ising(8, 0.0));
  EXPECT_NEAR(eig.energies()(0), -6.0, 1e-10);
}

TEST(ExactDiag, ResidualsBelowToleranceUpToTenQubits) {
  for (int n : {4, 7, 10}) {
    for (const auto& h : {build_ising_annni(n), build_cluster_ising(n)}) {
      const auto eig = exact_diagonalize(h);
      EXPECT_LE(eig.max_residual(h), 1e-8) << n;
      EXPECT_NEAR(eig.energies().sum(), 0.0, 1e-8);
    }
  }
}

TEST(ExactDiag, ComplexHamiltonianUsesComplexSolver) {
  const Hamiltonian h(3, {{PauliString::parse("Y0 X1"), 0.8}, {PauliString::parse("Z0"), 0.3},
                          {PauliString::parse("X2"), -0.5}});
  EXPECT_FALSE(h.is_real());
  const auto eig = exact_diagonalize(h);
  EXPECT_FALSE(eig.is_real());
  EXPECT_LE(eig.max_residual(h), 1e-10);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(oracle::hamiltonian(h));
  EXPECT_LE((ref.eigenvalues() - eig.energies()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ExactDiag, OverlapsReconstructState) {
  std::mt19937_64 rng(9);
  const auto h = build_ising_annni(5);
  const auto eig = exact_diagonalize(h);
  const auto psi = oracle::random_state(5, rng);
  const auto c = eig.overlaps(psi);
  double total = 0;
  for (const auto& x : c) total += std::norm(x);
  EXPECT_NEAR(total, 1.0, 1e-12);
  Eigen::VectorXcd rebuilt = Eigen::VectorXcd::Zero(32);
  for (Eigen::Index k = 0; k < eig.size(); ++k) rebuilt += c[static_cast<std::size_t>(k)] * oracle::vec(eig.eigenvector(k));
  EXPECT_LE((rebuilt - oracle::vec(psi)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ExactDiag, CapacityCeiling) { EXPECT_THROW(exact_diagonalize(build_ising_annni(kMaxDenseQubits + 1)), CapacityError); }
