#include "qorder/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qorder/error.hpp"
#include "qorder/pauli.hpp"

namespace qorder {

StateVector product_state(std::span<const double> polar_angles) {
  const int n = static_cast<int>(polar_angles.size());
  check_qubit_count(n);
  std::vector<cplx> amps(std::size_t{1} << n, cplx{1.0, 0.0});
  for (int q = 0; q < n; ++q) {
    const double c = std::cos(0.5 * polar_angles[q]);
    const double s = std::sin(0.5 * polar_angles[q]);
    for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= ((b >> q) & 1u) ? s : c;
  }
  return StateVector(n, std::move(amps));
}

StateVector random_product_state(int n_qubits, std::uint64_t seed) {
  check_qubit_count(n_qubits);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::vector<double> alphas(static_cast<std::size_t>(n_qubits));
  for (double& a : alphas) {
    do {
      a = angle(rng);
    } while (a == 0.0);
  }
  return product_state(alphas);
}

StateVector plus_state(int n_qubits) {
  check_qubit_count(n_qubits);
  const double amp = std::pow(2.0, -0.5 * n_qubits);
  return StateVector(n_qubits, std::vector<cplx>(std::size_t{1} << n_qubits, cplx{amp, 0.0}));
}

StateVector cluster_state(int n_qubits) {
  if (n_qubits < 3) throw SizeError("cluster state needs at least 3 qubits");
  StateVector s = plus_state(n_qubits);
  for (int q = 0; q + 1 < n_qubits; ++q) apply_controlled_z(s, q, q + 1);
  return s;
}

StateVector ghz_state(int n_qubits) {
  if (n_qubits < 2) throw SizeError("GHZ state needs at least 2 qubits");
  StateVector s(n_qubits);
  s[0] = std::numbers::sqrt2 / 2.0;
  s[s.dim() - 1] = std::numbers::sqrt2 / 2.0;
  return s;
}

std::string_view to_string(InitialStateKind kind) noexcept {
  switch (kind) {
    case InitialStateKind::RandomProduct:
      return "random_product";
    case InitialStateKind::Cluster:
      return "cluster";
    case InitialStateKind::Ghz:
      return "ghz";
    case InitialStateKind::Zero:
      return "zero";
    case InitialStateKind::Plus:
      return "plus";
  }
  return "zero";
}

InitialStateKind parse_initial_state(std::string_view label) {
  if (label == "random_product") return InitialStateKind::RandomProduct;
  if (label == "cluster") return InitialStateKind::Cluster;
  if (label == "ghz") return InitialStateKind::Ghz;
  if (label == "zero") return InitialStateKind::Zero;
  if (label == "plus") return InitialStateKind::Plus;
  throw ArgumentError("unknown initial state '" + std::string(label) + "'");
}

StateVector make_initial_state(InitialStateKind kind, int n_qubits, std::uint64_t seed) {
  switch (kind) {
    case InitialStateKind::RandomProduct:
      return random_product_state(n_qubits, seed);
    case InitialStateKind::Cluster:
      return cluster_state(n_qubits);
    case InitialStateKind::Ghz:
      return ghz_state(n_qubits);
    case InitialStateKind::Zero:
      return zero_state(n_qubits);
    case InitialStateKind::Plus:
      return plus_state(n_qubits);
  }
  throw ArgumentError("unknown initial state kind");
}

}  // namespace qorder
