#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "qorder/state_vector.hpp"

namespace qorder {

// tensor_i (cos(a_i/2)|0> + sin(a_i/2)|1>), one polar angle per qubit.
StateVector product_state(std::span<const double> polar_angles);

// Product state with polar angles drawn uniformly from (0, pi); a pure
// function of the seed.
StateVector random_product_state(int n_qubits, std::uint64_t seed);

// |+>^N followed by CZ on every nearest-neighbour pair of the open chain.
StateVector cluster_state(int n_qubits);

// (|0...0> + |1...1>)/sqrt(2).
StateVector ghz_state(int n_qubits);

StateVector plus_state(int n_qubits);

enum class InitialStateKind { RandomProduct, Cluster, Ghz, Zero, Plus };

std::string_view to_string(InitialStateKind kind) noexcept;
InitialStateKind parse_initial_state(std::string_view label);

// Initial state of the given kind. Only RandomProduct consumes the seed.
StateVector make_initial_state(InitialStateKind kind, int n_qubits, std::uint64_t seed);

}  // namespace qorder
