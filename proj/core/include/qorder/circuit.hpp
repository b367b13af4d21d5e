#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qorder/pauli.hpp"
#include "qorder/state_vector.hpp"

namespace qorder {

enum class Symmetry { Z2, Z2xZ2 };

std::string_view to_string(Symmetry s) noexcept;

// How the parity-even generators are distributed over the bricks of the
// Z2 circuit.
//  - Cycle: one generator per brick, cycling through {XX, YY, YZ, ZY, ZZ}
//    by global brick index; (N-1) d parameters.
//  - Composite: every brick is the product of all five rotations, each with
//    its own parameter; 5 (N-1) d parameters.
//  - Explicit: one generator per brick taken from a user list.
enum class GeneratorAssignment { Cycle, Composite, Explicit };

std::string_view to_string(GeneratorAssignment a) noexcept;
GeneratorAssignment parse_generator_assignment(std::string_view label);

// The five two-site parity-even generators, in cycling order.
inline constexpr std::string_view kZ2Generators[5] = {"XX", "YY", "YZ", "ZY", "ZZ"};

// One rotation exp(-i theta/2 generator) with theta = params[param_index].
struct GateSlot {
  PauliString generator;
  std::vector<int> sites;
  int param_index;
};

struct CircuitSpec {
  int n_qubits = 0;
  int depth = 0;
  Symmetry symmetry = Symmetry::Z2;
  GeneratorAssignment assignment = GeneratorAssignment::Cycle;
  std::vector<GateSlot> slots;
  int n_params = 0;

  // X-type operators the circuit must commute with: {prod_i X_i} for Z2;
  // {prod_even X, prod_odd X} for Z2xZ2.
  std::vector<PauliString> protected_symmetries() const;
};

// d brickwork layers; inside a layer bricks on bonds (0,1),(2,3),... come
// before (1,2),(3,4),.... `explicit_generators` is read only for
// GeneratorAssignment::Explicit and must hold (N-1) d two-letter words.
CircuitSpec build_z2_brickwork(int n_qubits, int depth, GeneratorAssignment assignment = GeneratorAssignment::Cycle,
                               std::span<const std::string> explicit_generators = {});

// Z2xZ2-symmetric layer(s): all Z_i X_{i+1} Z_{i+2} rotations in ascending i,
// then XX on even bonds, then XX on odd bonds. (N-2) + (N-1) parameters per
// layer.
CircuitSpec build_spt_layer(int n_qubits, int layers = 1);

// Structural checks: parameter indices cover 0..n_params-1 once each and every
// generator commutes with the protected symmetries. Throws ArgumentError.
void validate_circuit(const CircuitSpec& c);

// state <- U(params) state, slots applied in order.
void apply_circuit(const CircuitSpec& c, std::span<const double> params, StateVector& state);
StateVector apply_circuit(const CircuitSpec& c, std::span<const double> params, const StateVector& state);

// state <- U(params)^dagger state.
void apply_circuit_inverse(const CircuitSpec& c, std::span<const double> params, StateVector& state);

inline constexpr int kMaxUnitaryQubits = 12;

// Dense 2^N x 2^N unitary; column b is U|b>.
Eigen::MatrixXcd circuit_unitary(const CircuitSpec& c, std::span<const double> params);

}  // namespace qorder
