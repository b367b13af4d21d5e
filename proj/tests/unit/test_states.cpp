#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qorder/error.hpp"
#include "qorder/objective.hpp"
#include "qorder/pauli.hpp"
#include "qorder/states.hpp"

using namespace qorder;

TEST(States, ProductStateAmplitudes) {
  const std::vector<double> a{0.4, 1.1};
  const auto s = product_state(a);
  const double c0 = std::cos(0.2), s0 = std::sin(0.2), c1 = std::cos(0.55), s1 = std::sin(0.55);
  EXPECT_NEAR(s[0].real(), c0 * c1, 1e-15);
  EXPECT_NEAR(s[1].real(), s0 * c1, 1e-15);  // qubit 0 flipped
  EXPECT_NEAR(s[2].real(), c0 * s1, 1e-15);
  EXPECT_NEAR(s[3].real(), s0 * s1, 1e-15);
}

TEST(States, RandomProductIsSeedDeterministic) {
  const auto a = random_product_state(6, 42), b = random_product_state(6, 42), c = random_product_state(6, 43);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
  EXPECT_NEAR(a.norm_squared(), 1.0, 1e-14);
  for (std::size_t k = 0; k < a.dim(); ++k) EXPECT_GE(a[k].real(), 0.0);
}

TEST(States, ClusterStateIsStabilized) {
  const int n = 7;
  const auto s = cluster_state(n);
  // Bulk stabilizers Z X Z and boundary X Z, Z X.
  for (int i = 0; i + 2 < n; ++i) EXPECT_NEAR(pauli_expectation(s, PauliString::from_word("ZXZ", i)), 1.0, 1e-12);
  EXPECT_NEAR(pauli_expectation(s, PauliString::from_word("XZ", 0)), 1.0, 1e-12);
  EXPECT_NEAR(pauli_expectation(s, PauliString::from_word("ZX", n - 2)), 1.0, 1e-12);
  EXPECT_THROW(cluster_state(2), SizeError);
}

TEST(States, GhzAndPlus) {
  const auto g = ghz_state(5);
  EXPECT_NEAR(std::norm(g[0]), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(g[31]), 0.5, 1e-15);
  EXPECT_NEAR(susceptibility(g), 1.0, 1e-14);
  EXPECT_NEAR(susceptibility(plus_state(5)), 1.0 / 5, 1e-14);
}

TEST(States, InitialStateLabels) {
  for (auto k : {InitialStateKind::RandomProduct, InitialStateKind::Cluster, InitialStateKind::Ghz, InitialStateKind::Zero,
                 InitialStateKind::Plus})
    EXPECT_EQ(parse_initial_state(to_string(k)), k);
  EXPECT_THROW(parse_initial_state("bogus"), ArgumentError);
  EXPECT_EQ(make_initial_state(InitialStateKind::Ghz, 4, 0), ghz_state(4));
}
