#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qorder/state_vector.hpp"

namespace qorder {

// Dense density matrix on a subsystem. Rows/columns are indexed
// little-endian over the subsystem's sites in ascending order.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  cplx operator()(int row, int col) const { return entries_(row, col); }

  // Largest |rho - rho^dagger| entry.
  double hermiticity_residual() const;
  double trace() const;

 private:
  Eigen::MatrixXcd entries_;
};

// Tr_{complement} |psi><psi|. The subsystem must be a nonempty proper subset
// of the sites; order of `subsystem` is irrelevant.
DensityMatrix reduced_density_matrix(const StateVector& state, std::span<const int> subsystem);

// -Tr[rho ln rho] with the natural logarithm. Eigenvalues below 1e-14 are
// dropped (0 ln 0 := 0).
double entanglement_entropy(const DensityMatrix& rho);

// Sites [0, floor(N/2)).
std::vector<int> left_half(int n_qubits);

// Entanglement entropy across the cut at floor(N/2).
double half_chain_entropy(const StateVector& state);

}  // namespace qorder
