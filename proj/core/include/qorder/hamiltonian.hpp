#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qorder/pauli.hpp"
#include "qorder/state_vector.hpp"

namespace qorder {

enum class ModelKind { IsingAnnni, ClusterIsing, Custom };
enum class Boundary { Open, Periodic };

std::string_view to_string(ModelKind kind) noexcept;
std::string_view to_string(Boundary boundary) noexcept;
ModelKind parse_model_kind(std::string_view label);
Boundary parse_boundary(std::string_view label);

struct HamiltonianTerm {
  PauliString op;  // unit coefficient
  double weight;
};

// Real-weighted sum of Pauli strings. Immutable once built.
class Hamiltonian {
 public:
  Hamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms, ModelKind kind = ModelKind::Custom,
              double field = 0.0, Boundary boundary = Boundary::Open);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<HamiltonianTerm>& terms() const noexcept { return terms_; }
  ModelKind kind() const noexcept { return kind_; }
  // h for the Ising model, Gamma for the cluster-Ising model.
  double field() const noexcept { return field_; }
  Boundary boundary() const noexcept { return boundary_; }

  // True when every term has an even number of Y factors, so the matrix is
  // real symmetric in the computational basis.
  bool is_real() const noexcept;

  // Sum of |weights|; an upper bound on the operator norm.
  double weight_norm() const noexcept;

 private:
  int n_qubits_;
  std::vector<HamiltonianTerm> terms_;
  ModelKind kind_;
  double field_;
  Boundary boundary_;
};

// H = -sum_i Z_i Z_{i+1} - 1/2 sum_i Z_i Z_{i+2} - h sum_i X_i.
// Open boundaries drop bonds that leave the chain.
Hamiltonian build_ising_annni(int n_qubits, double h = 1.0, Boundary boundary = Boundary::Open);

// H = -sum_{i=1}^{N-2} Z_{i-1} X_i Z_{i+1} - gamma sum_{i=0}^{N-2} X_i X_{i+1}
//     - gamma/2 sum_i X_i, open chain (0-based sites).
Hamiltonian build_cluster_ising(int n_qubits, double gamma = 0.5);

// H|psi>, unnormalized.
StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& state);
// out = H|psi>; out must already have the right size.
void apply_hamiltonian(const Hamiltonian& h, const StateVector& state, StateVector& out);

struct EnergyMoments {
  double mean = 0.0;           // <H>
  double second_moment = 0.0;  // <H^2> = ||H psi||^2
  double variance() const noexcept { return second_moment - mean * mean; }
};

EnergyMoments energy_moments(const StateVector& state, const Hamiltonian& h);

// Dense matrices. The real variant requires is_real().
inline constexpr int kMaxDenseQubits = 14;
Eigen::MatrixXd dense_real_matrix(const Hamiltonian& h);
Eigen::MatrixXcd dense_matrix(const Hamiltonian& h);

}  // namespace qorder
