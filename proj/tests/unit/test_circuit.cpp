#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qorder/circuit.hpp"
#include "qorder/error.hpp"

using namespace qorder;

TEST(Circuit, BrickworkShapes) {
  const auto cyc = build_z2_brickwork(6, 6, GeneratorAssignment::Cycle);
  EXPECT_EQ(cyc.n_params, 5 * 6);
  EXPECT_EQ(cyc.slots.size(), 30u);
  const auto comp = build_z2_brickwork(6, 6, GeneratorAssignment::Composite);
  EXPECT_EQ(comp.n_params, 5 * 5 * 6);
  // First layer: even bonds (0,1),(2,3),(4,5) before odd bonds (1,2),(3,4).
  EXPECT_EQ(cyc.slots[0].sites, (std::vector<int>{0, 1}));
  EXPECT_EQ(cyc.slots[2].sites, (std::vector<int>{4, 5}));
  EXPECT_EQ(cyc.slots[3].sites, (std::vector<int>{1, 2}));
  EXPECT_EQ(cyc.slots[0].generator, PauliString::parse("X0 X1"));
  EXPECT_EQ(cyc.slots[1].generator, PauliString::parse("Y2 Y3"));
  EXPECT_EQ(cyc.slots[3].generator, PauliString::parse("Z1 Y2"));
  // Five bricks per layer at N = 6, so the second layer restarts the cycle.
  EXPECT_EQ(cyc.slots[5].generator, PauliString::parse("X0 X1"));
}

TEST(Circuit, ExplicitAssignment) {
  const std::vector<std::string> g{"ZZ", "YZ"};
  const auto c = build_z2_brickwork(3, 1, GeneratorAssignment::Explicit, g);
  EXPECT_EQ(c.slots[0].generator, PauliString::parse("Z0 Z1"));
  EXPECT_EQ(c.slots[1].generator, PauliString::parse("Y1 Z2"));
  const std::vector<std::string> odd{"XY", "ZZ"};
  EXPECT_THROW(build_z2_brickwork(3, 1, GeneratorAssignment::Explicit, odd), ArgumentError);
  EXPECT_THROW(build_z2_brickwork(3, 1, GeneratorAssignment::Explicit, std::vector<std::string>{"XX"}), ArgumentError);
  EXPECT_THROW(build_z2_brickwork(3, 1, GeneratorAssignment::Explicit, std::vector<std::string>{"XX", "YY", "ZZ"}),
               ArgumentError);
}

TEST(Circuit, SptLayerShape) {
  const auto c = build_spt_layer(8);
  EXPECT_EQ(c.n_params, 6 + 7);
  EXPECT_EQ(c.symmetry, Symmetry::Z2xZ2);
  EXPECT_EQ(c.slots.front().generator, PauliString::from_word("ZXZ", 0));
  EXPECT_EQ(c.protected_symmetries().size(), 2u);
  EXPECT_THROW(build_spt_layer(3), SizeError);
}

TEST(Circuit, ValidationCatchesSymmetryBreakingGates) {
  auto c = build_z2_brickwork(4, 1);
  EXPECT_NO_THROW(validate_circuit(c));
  c.slots[0].generator = PauliString::parse("Z0");
  EXPECT_THROW(validate_circuit(c), ArgumentError);
  auto d = build_z2_brickwork(4, 1);
  d.slots[1].param_index = 0;
  EXPECT_THROW(validate_circuit(d), ArgumentError);
}

TEST(Circuit, UnitaryMatchesProductOfExponentials) {
  std::mt19937_64 rng(31);
  for (const auto& c : {build_z2_brickwork(4, 2, GeneratorAssignment::Cycle),
                        build_z2_brickwork(5, 2, GeneratorAssignment::Composite), build_spt_layer(6)}) {
    const auto p = oracle::random_params(c.n_params, rng);
    EXPECT_LE((circuit_unitary(c, p) - oracle::circuit(c, p)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Circuit, InverseUndoesForward) {
  std::mt19937_64 rng(32);
  const auto c = build_z2_brickwork(6, 3, GeneratorAssignment::Composite);
  const auto p = oracle::random_params(c.n_params, rng);
  auto psi = oracle::random_state(6, rng);
  const auto start = oracle::vec(psi);
  apply_circuit(c, p, psi);
  apply_circuit_inverse(c, p, psi);
  EXPECT_LE(oracle::max_diff(psi, start), 1e-12);
}

TEST(Circuit, CommutesWithProtectedSymmetries) {
  std::mt19937_64 rng(33);
  for (const auto& c : {build_z2_brickwork(6, 3, GeneratorAssignment::Cycle), build_spt_layer(6, 2)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto u = circuit_unitary(c, oracle::random_params(c.n_params, rng));
      for (const auto& s : c.protected_symmetries()) {
        const auto p = oracle::pauli(s, c.n_qubits);
        EXPECT_LE((u * p - p * u).norm(), 1e-10);
      }
    }
  }
}

TEST(Circuit, UnitaryCeiling) {
  const auto c = build_z2_brickwork(kMaxUnitaryQubits + 1, 1);
  EXPECT_THROW(circuit_unitary(c, std::vector<double>(static_cast<std::size_t>(c.n_params))), CapacityError);
}
