#include "qorder/circuit.hpp"

#include <string>

#include "qorder/error.hpp"

namespace qorder {

std::string_view to_string(Symmetry s) noexcept { return s == Symmetry::Z2 ? "Z2" : "Z2xZ2"; }

std::string_view to_string(GeneratorAssignment a) noexcept {
  switch (a) {
    case GeneratorAssignment::Cycle:
      return "cycle";
    case GeneratorAssignment::Composite:
      return "composite";
    case GeneratorAssignment::Explicit:
      return "explicit";
  }
  return "cycle";
}

GeneratorAssignment parse_generator_assignment(std::string_view label) {
  if (label == "cycle") return GeneratorAssignment::Cycle;
  if (label == "composite") return GeneratorAssignment::Composite;
  if (label == "explicit") return GeneratorAssignment::Explicit;
  throw ArgumentError("unknown generator assignment '" + std::string(label) + "'");
}

std::vector<PauliString> CircuitSpec::protected_symmetries() const {
  if (symmetry == Symmetry::Z2) {
    PauliString p;
    for (int q = 0; q < n_qubits; ++q) p.set(q, Pauli::X);
    return {p};
  }
  PauliString even;
  PauliString odd;
  for (int q = 0; q < n_qubits; ++q) (q % 2 == 0 ? even : odd).set(q, Pauli::X);
  return {even, odd};
}

namespace {

std::vector<int> brickwork_bonds(int n_qubits) {
  std::vector<int> bonds;
  for (int i = 0; i + 1 < n_qubits; i += 2) bonds.push_back(i);
  for (int i = 1; i + 1 < n_qubits; i += 2) bonds.push_back(i);
  return bonds;
}

bool is_z2_generator(std::string_view word) {
  for (auto g : kZ2Generators) {
    if (g == word) return true;
  }
  return false;
}

}  // namespace

CircuitSpec build_z2_brickwork(int n_qubits, int depth, GeneratorAssignment assignment,
                               std::span<const std::string> explicit_generators) {
  if (n_qubits < 2) throw SizeError("Z2 brickwork needs at least 2 qubits");
  check_qubit_count(n_qubits);
  if (depth < 1) throw SizeError("circuit depth must be at least 1");

  CircuitSpec c;
  c.n_qubits = n_qubits;
  c.depth = depth;
  c.symmetry = Symmetry::Z2;
  c.assignment = assignment;

  const auto bonds = brickwork_bonds(n_qubits);
  const std::size_t n_bricks = bonds.size() * static_cast<std::size_t>(depth);
  if (assignment == GeneratorAssignment::Explicit && explicit_generators.size() != n_bricks) {
    throw ArgumentError("explicit generator list has " + std::to_string(explicit_generators.size()) +
                        " entries, circuit has " + std::to_string(n_bricks) + " bricks");
  }

  int param = 0;
  std::size_t brick = 0;
  for (int layer = 0; layer < depth; ++layer) {
    for (int bond : bonds) {
      auto add = [&](std::string_view word) {
        c.slots.push_back({PauliString::from_word(word, bond), {bond, bond + 1}, param++});
      };
      switch (assignment) {
        case GeneratorAssignment::Cycle:
          add(kZ2Generators[brick % 5]);
          break;
        case GeneratorAssignment::Composite:
          for (auto g : kZ2Generators) add(g);
          break;
        case GeneratorAssignment::Explicit: {
          const std::string& word = explicit_generators[brick];
          if (!is_z2_generator(word)) throw ArgumentError("'" + word + "' is not a parity-even generator");
          add(word);
          break;
        }
      }
      ++brick;
    }
  }
  c.n_params = param;
  return c;
}

CircuitSpec build_spt_layer(int n_qubits, int layers) {
  if (n_qubits < 4) throw SizeError("SPT layer needs at least 4 qubits");
  check_qubit_count(n_qubits);
  if (layers < 1) throw SizeError("SPT circuit needs at least one layer");
  CircuitSpec c;
  c.n_qubits = n_qubits;
  c.depth = layers;
  c.symmetry = Symmetry::Z2xZ2;
  int param = 0;
  for (int layer = 0; layer < layers; ++layer) {
    for (int i = 0; i + 2 < n_qubits; ++i) {
      c.slots.push_back({PauliString::from_word("ZXZ", i), {i, i + 1, i + 2}, param++});
    }
    for (int bond : brickwork_bonds(n_qubits)) {
      c.slots.push_back({PauliString::from_word("XX", bond), {bond, bond + 1}, param++});
    }
  }
  c.n_params = param;
  return c;
}

void validate_circuit(const CircuitSpec& c) {
  std::vector<int> uses(static_cast<std::size_t>(c.n_params), 0);
  const auto symmetries = c.protected_symmetries();
  for (const auto& slot : c.slots) {
    if (slot.param_index < 0 || slot.param_index >= c.n_params) {
      throw ArgumentError("slot parameter index out of range");
    }
    ++uses[static_cast<std::size_t>(slot.param_index)];
    check_sites(slot.generator, c.n_qubits);
    for (const auto& s : symmetries) {
      if (!slot.generator.commutes_with(s)) {
        throw ArgumentError("generator " + slot.generator.to_string() + " breaks the circuit symmetry");
      }
    }
  }
  for (int u : uses) {
    if (u != 1) throw ArgumentError("every parameter must drive exactly one gate");
  }
}

namespace {

void check_params(const CircuitSpec& c, std::span<const double> params, const StateVector& state) {
  if (static_cast<int>(params.size()) != c.n_params) {
    throw ArgumentError("circuit expects " + std::to_string(c.n_params) + " parameters, got " +
                        std::to_string(params.size()));
  }
  if (state.n_qubits() != c.n_qubits) {
    throw SizeError("circuit on " + std::to_string(c.n_qubits) + " qubits applied to " +
                    std::to_string(state.n_qubits()) + "-qubit state");
  }
}

}  // namespace

void apply_circuit(const CircuitSpec& c, std::span<const double> params, StateVector& state) {
  check_params(c, params, state);
  for (const auto& slot : c.slots) apply_pauli_rotation(state, slot.generator, params[slot.param_index]);
}

StateVector apply_circuit(const CircuitSpec& c, std::span<const double> params, const StateVector& state) {
  StateVector out = state;
  apply_circuit(c, params, out);
  return out;
}

void apply_circuit_inverse(const CircuitSpec& c, std::span<const double> params, StateVector& state) {
  check_params(c, params, state);
  for (auto it = c.slots.rbegin(); it != c.slots.rend(); ++it) {
    apply_pauli_rotation(state, it->generator, -params[it->param_index]);
  }
}

Eigen::MatrixXcd circuit_unitary(const CircuitSpec& c, std::span<const double> params) {
  if (c.n_qubits > kMaxUnitaryQubits) {
    throw CapacityError("dense circuit unitary limited to " + std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    StateVector col = basis_state(c.n_qubits, static_cast<std::uint64_t>(b));
    apply_circuit(c, params, col);
    for (Eigen::Index r = 0; r < dim; ++r) u(r, b) = col[static_cast<std::size_t>(r)];
  }
  return u;
}

}  // namespace qorder
