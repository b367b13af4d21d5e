#include "qorder/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qorder/error.hpp"

namespace qorder {

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::IsingAnnni:
      return "ising_annni";
    case ModelKind::ClusterIsing:
      return "cluster_ising";
    case ModelKind::Custom:
      return "custom";
  }
  return "custom";
}

std::string_view to_string(Boundary boundary) noexcept {
  return boundary == Boundary::Open ? "open" : "periodic";
}

ModelKind parse_model_kind(std::string_view label) {
  if (label == "ising_annni") return ModelKind::IsingAnnni;
  if (label == "cluster_ising") return ModelKind::ClusterIsing;
  throw ArgumentError("unknown model '" + std::string(label) + "'");
}

Boundary parse_boundary(std::string_view label) {
  if (label == "open") return Boundary::Open;
  if (label == "periodic") return Boundary::Periodic;
  throw ArgumentError("unknown boundary '" + std::string(label) + "'");
}

Hamiltonian::Hamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms, ModelKind kind, double field,
                         Boundary boundary)
    : n_qubits_(n_qubits), terms_(std::move(terms)), kind_(kind), field_(field), boundary_(boundary) {
  check_qubit_count(n_qubits);
  for (auto& t : terms_) {
    check_sites(t.op, n_qubits);
    if (t.op.coefficient() != cplx{1.0, 0.0}) {
      // Fold any real prefactor into the weight; complex ones break Hermiticity.
      if (!t.op.is_hermitian()) throw OperatorError("Hamiltonian term " + t.op.to_string() + " is not Hermitian");
      t.weight *= t.op.coefficient().real();
      t.op.set_coefficient(1.0);
    }
    if (!std::isfinite(t.weight)) throw ArgumentError("non-finite Hamiltonian weight");
  }
}

bool Hamiltonian::is_real() const noexcept {
  for (const auto& t : terms_) {
    if (t.op.y_count() % 2 != 0) return false;
  }
  return true;
}

double Hamiltonian::weight_norm() const noexcept {
  double acc = 0.0;
  for (const auto& t : terms_) acc += std::abs(t.weight);
  return acc;
}

Hamiltonian build_ising_annni(int n_qubits, double h, Boundary boundary) {
  if (n_qubits < 3) throw SizeError("ising_annni needs at least 3 qubits");
  check_qubit_count(n_qubits);
  std::vector<HamiltonianTerm> terms;
  const bool periodic = boundary == Boundary::Periodic;
  for (int i = 0; i < n_qubits; ++i) {
    if (periodic || i + 1 < n_qubits) {
      terms.push_back({PauliString().set(i, Pauli::Z).set((i + 1) % n_qubits, Pauli::Z), -1.0});
    }
  }
  for (int i = 0; i < n_qubits; ++i) {
    if (periodic || i + 2 < n_qubits) {
      terms.push_back({PauliString().set(i, Pauli::Z).set((i + 2) % n_qubits, Pauli::Z), -0.5});
    }
  }
  for (int i = 0; i < n_qubits; ++i) terms.push_back({PauliString().set(i, Pauli::X), -h});
  return Hamiltonian(n_qubits, std::move(terms), ModelKind::IsingAnnni, h, boundary);
}

Hamiltonian build_cluster_ising(int n_qubits, double gamma) {
  if (n_qubits < 3) throw SizeError("cluster_ising needs at least 3 qubits");
  check_qubit_count(n_qubits);
  std::vector<HamiltonianTerm> terms;
  for (int i = 1; i + 1 < n_qubits; ++i) terms.push_back({PauliString::from_word("ZXZ", i - 1), -1.0});
  for (int i = 0; i + 1 < n_qubits; ++i) terms.push_back({PauliString::from_word("XX", i), -gamma});
  for (int i = 0; i < n_qubits; ++i) terms.push_back({PauliString::from_word("X", i), -0.5 * gamma});
  return Hamiltonian(n_qubits, std::move(terms), ModelKind::ClusterIsing, gamma, Boundary::Open);
}

void apply_hamiltonian(const Hamiltonian& h, const StateVector& state, StateVector& out) {
  if (state.n_qubits() != h.n_qubits() || out.n_qubits() != h.n_qubits()) {
    throw SizeError("Hamiltonian on " + std::to_string(h.n_qubits()) + " qubits applied to " +
                    std::to_string(state.n_qubits()) + "-qubit state");
  }
  out.set_zero();
  const auto src = state.amplitudes();
  auto dst = out.amplitudes();
  for (const auto& t : h.terms()) {
    const std::uint64_t x = t.op.x_mask();
    const std::uint64_t z = t.op.z_mask();
    const cplx factor = t.weight * t.op.phase();
    for (std::uint64_t b = 0; b < src.size(); ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      dst[b ^ x] += (factor * sign) * src[b];
    }
  }
}

StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& state) {
  StateVector out(h.n_qubits());
  apply_hamiltonian(h, state, out);
  return out;
}

EnergyMoments energy_moments(const StateVector& state, const Hamiltonian& h) {
  const StateVector hpsi = apply_hamiltonian(h, state);
  return {inner_product(state, hpsi).real(), hpsi.norm_squared()};
}

namespace {

void check_dense(const Hamiltonian& h) {
  if (h.n_qubits() > kMaxDenseQubits) {
    throw CapacityError("dense Hamiltonian limited to " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(h.n_qubits()));
  }
}

}  // namespace

Eigen::MatrixXd dense_real_matrix(const Hamiltonian& h) {
  check_dense(h);
  if (!h.is_real()) throw MatrixError("Hamiltonian has complex matrix elements");
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    const std::uint64_t x = t.op.x_mask();
    const std::uint64_t z = t.op.z_mask();
    const double factor = t.weight * t.op.phase().real();
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) += factor * sign;
    }
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const Hamiltonian& h) {
  check_dense(h);
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    const std::uint64_t x = t.op.x_mask();
    const std::uint64_t z = t.op.z_mask();
    const cplx factor = t.weight * t.op.phase();
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) += factor * sign;
    }
  }
  return m;
}

}  // namespace qorder
