#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "qorder/density_matrix.hpp"
#include "qorder/error.hpp"
#include "qorder/exact_diag.hpp"
#include "qorder/level_stats.hpp"
#include "qorder/measurement.hpp"
#include "qorder/spectral.hpp"
#include "qorder/states.hpp"

using namespace qorder;

TEST(SpectralSupport, WeightsSumToOneAndMeanIsEnergy) {
  const auto h = build_ising_annni(6);
  const auto eig = exact_diagonalize(h);
  const auto psi = random_product_state(6, 3);
  const auto sup = spectral_support(psi, eig, OrderObservable::susceptibility());
  EXPECT_NEAR(sup.total_weight(), 1.0, 1e-12);
  EXPECT_NEAR(sup.mean_energy(), energy_moments(psi, h).mean, 1e-11);
  EXPECT_NEAR(sup.weight_in_window(-1e9, 1e9), 1.0, 1e-12);
  const auto dom = sup.dominant_components(0.9);
  double w = 0;
  for (auto k : dom) w += sup.components[k].weight;
  EXPECT_GE(w, 0.9);
  // Dropping the lightest chosen component falls below the target.
  EXPECT_LT(w - sup.components[dom.back()].weight, 0.9);
}

TEST(SpectralSupport, EigenstateHasSingleComponent) {
  const auto h = build_cluster_ising(6);
  const auto eig = exact_diagonalize(h);
  const auto sup = spectral_support(eig.eigenvector(5), eig, OrderObservable::string_order(1, 6));
  EXPECT_NEAR(sup.components[5].weight, 1.0, 1e-12);
  EXPECT_EQ(sup.dominant_components(0.9).size(), 1u);
}

TEST(Eigenphases, ClusteringOfKnownPhases) {
  const auto s = cluster_phases({0.1, 0.1 + 1e-8, 0.1 - 1e-8, 0.5, M_PI - 1e-9, -M_PI + 1e-9});
  // The last two straddle the branch cut and merge.
  ASSERT_EQ(s.clusters.size(), 3u);
  EXPECT_EQ(s.modal_multiplicity(), 3);
  EXPECT_NEAR(s.fraction_with_multiplicity(2), 2.0 / 6, 1e-15);
}

TEST(Eigenphases, DiagonalUnitary) {
  Eigen::VectorXcd d(4);
  d << std::polar(1.0, 0.3), std::polar(1.0, 0.3), std::polar(1.0, -1.0), std::polar(1.0, 2.5);
  const Eigen::MatrixXcd u = d.asDiagonal();
  const auto s = eigenphase_spectrum(u);
  EXPECT_EQ(s.phases.size(), 4u);
  EXPECT_NEAR(s.phases.front(), -1.0, 1e-12);
  EXPECT_EQ(s.modal_multiplicity(), 1);  // two singles tie with one pair; the smaller multiplicity wins
  EXPECT_THROW(eigenphase_spectrum(Eigen::MatrixXcd::Constant(2, 2, 1.0)), MatrixError);
}

TEST(Eigenphases, SectorResolutionPartitionsSpectrum) {
  std::mt19937_64 rng(51);
  const auto c = build_spt_layer(6);
  const auto u = circuit_unitary(c, oracle::random_params(c.n_params, rng));
  const auto syms = c.protected_symmetries();
  const auto sectors = sector_eigenphases(u, syms);
  ASSERT_EQ(sectors.size(), 4u);
  std::vector<double> all;
  for (const auto& s : sectors) {
    EXPECT_EQ(s.phases.size(), 16u);
    all.insert(all.end(), s.phases.begin(), s.phases.end());
  }
  std::sort(all.begin(), all.end());
  const auto full = eigenphase_spectrum(u).phases;
  for (std::size_t k = 0; k < all.size(); ++k) EXPECT_NEAR(all[k], full[k], 1e-9);
  const std::vector<int> charges{1, -1};
  const auto basis = symmetry_sector_basis(6, syms, charges);
  EXPECT_EQ(basis.cols(), 16);
  EXPECT_LE((basis.adjoint() * basis - Eigen::MatrixXcd::Identity(16, 16)).norm(), 1e-12);
}

TEST(LevelStats, PoissonSurrogate) {
  std::mt19937_64 rng(52);
  std::exponential_distribution<double> gap(1.0);
  std::vector<double> e{0.0};
  for (int k = 0; k < 200000; ++k) e.push_back(e.back() + gap(rng));
  // 2 ln 2 - 1
  EXPECT_NEAR(level_spacing_r(e).mean_r, 2 * std::log(2.0) - 1, 0.005);
}

TEST(LevelStats, CircularUnitarySurrogate) {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g;
  std::vector<double> r;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXcd z(200, 200);
    for (Eigen::Index i = 0; i < z.rows(); ++i)
      for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = cplx(g(rng), g(rng)) / std::sqrt(2.0);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd rr = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) q.col(k) *= rr(k, k) / std::abs(rr(k, k));  // Haar measure
    const auto s = eigenphase_spectrum(q);
    r.push_back(level_spacing_r(s.phases, {}, LevelKind::Phases).mean_r);
  }
  EXPECT_NEAR(std::accumulate(r.begin(), r.end(), 0.0) / r.size(), 0.5996, 0.01);
}

TEST(LevelStats, DegenerateLevelsAndSectors) {
  std::vector<double> e;
  for (int k = 0; k < 12; ++k) e.push_back(k * k * 0.01);
  e.push_back(e.back());
  const auto s = level_spacing_r(e);
  EXPECT_EQ(s.n_degenerate, 1u);
  EXPECT_EQ(s.n_levels, 12u);
  EXPECT_THROW(level_spacing_r(std::vector<double>{0, 1, 2}), StatisticsError);
  std::vector<int> labels(e.size(), 0);
  EXPECT_THROW(level_spacing_r(e, std::vector<int>{0, 1}), ArgumentError);
  EXPECT_EQ(level_spacing_r(e, labels).n_sectors, 1u);
}

TEST(CliffordHistogram, ReducesModTwoPi) {
  const std::vector<double> p{0.0, M_PI / 2, -M_PI / 2, 2 * M_PI + 0.1, M_PI / 4};
  const auto h = clifford_angle_histogram(p, 8);
  EXPECT_EQ(std::accumulate(h.counts.begin(), h.counts.end(), 0), 5);
  EXPECT_EQ(h.counts[0], 2);  // 0 and 0.1
  EXPECT_EQ(h.counts[6], 1);  // 3 pi / 2
  EXPECT_NEAR(h.mean_clifford_distance, (0.1 + M_PI / 4) / 5, 1e-12);
  EXPECT_EQ(h.clifford_angles.size(), 4u);
}

TEST(Measurement, CollapseAndProbability) {
  const auto s = ghz_state(4);
  EXPECT_NEAR(probability_of_one(s, 2), 0.5, 1e-15);
  std::mt19937_64 rng(54);
  const auto r = projective_measure(s, 2, rng);
  EXPECT_NEAR(r.probability, 0.5, 1e-15);
  EXPECT_NEAR(r.post_state.norm_squared(), 1.0, 1e-14);
  EXPECT_NEAR(half_chain_entropy(r.post_state), 0.0, 1e-12);
  const auto b = projective_measure(basis_state(3, 1), 0, rng);
  EXPECT_EQ(b.outcome, 1);
  EXPECT_NEAR(b.probability, 1.0, 1e-15);
}

TEST(Measurement, GhzBaselineCurve) {
  const std::vector<StateVector> g{ghz_state(6)};
  const auto curve = measurement_robustness(g, 3, 40, 5);
  ASSERT_EQ(curve.size(), 4u);
  EXPECT_NEAR(curve[0].mean_entropy, std::log(2.0), 1e-10);
  for (int m = 1; m <= 3; ++m) EXPECT_NEAR(curve[static_cast<std::size_t>(m)].mean_entropy, 0.0, 1e-10);
}

TEST(Measurement, DeterministicAndJobIndependent) {
  std::vector<StateVector> states;
  for (int k = 0; k < 3; ++k) states.push_back(random_product_state(6, static_cast<std::uint64_t>(k)));
  std::mt19937_64 rng(55);
  states.push_back(oracle::random_state(6, rng));
  const auto a = measurement_robustness(states, 4, 25, 9, 1);
  const auto b = measurement_robustness(states, 4, 25, 9, 4);
  for (std::size_t m = 0; m < a.size(); ++m) {
    EXPECT_EQ(a[m].mean_entropy, b[m].mean_entropy);
    EXPECT_EQ(a[m].n_samples, 100u);
  }
  EXPECT_THROW(measurement_robustness(states, 6, 10, 1), ArgumentError);
  EXPECT_THROW(measurement_robustness(states, 2, 0, 1), ArgumentError);
}

TEST(Qfi, GhzAndProductStates) {
  for (int n : {3, 6, 9}) EXPECT_NEAR(qfi_collective(ghz_state(n)), double(n) * n, 1e-10);
  // |+>^N: Var(sum Z) = N.
  EXPECT_NEAR(qfi_collective(plus_state(7)), 7.0, 1e-12);
  EXPECT_NEAR(qfi_collective(StateVector(5)), 0.0, 1e-12);
}
