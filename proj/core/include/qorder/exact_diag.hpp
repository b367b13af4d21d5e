#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qorder/hamiltonian.hpp"
#include "qorder/state_vector.hpp"

namespace qorder {

// Full spectrum of a Hamiltonian: ascending energies and orthonormal
// eigenvectors as matrix columns. Real Hamiltonians keep real eigenvectors,
// which halves the memory at the N = 14 ceiling (2 x 2 GiB).
class EigenSystem {
 public:
  EigenSystem(int n_qubits, Eigen::VectorXd energies, Eigen::MatrixXd vectors);
  EigenSystem(int n_qubits, Eigen::VectorXd energies, Eigen::MatrixXcd vectors);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index size() const noexcept { return energies_.size(); }
  const Eigen::VectorXd& energies() const noexcept { return energies_; }
  bool is_real() const noexcept { return std::holds_alternative<Eigen::MatrixXd>(vectors_); }

  StateVector eigenvector(Eigen::Index n) const;

  // c_n = <E_n|psi> for every n.
  std::vector<cplx> overlaps(const StateVector& state) const;

  // max_n ||H v_n - E_n v_n||, evaluated matrix-free.
  double max_residual(const Hamiltonian& h) const;

 private:
  int n_qubits_;
  Eigen::VectorXd energies_;
  std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> vectors_;
};

// Dense diagonalization; throws CapacityError above kMaxDenseQubits.
EigenSystem exact_diagonalize(const Hamiltonian& h);

}  // namespace qorder
