#include "qorder/density_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qorder/error.hpp"

namespace qorder {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw MatrixError("density matrix must be square and nonempty");
  }
}

double DensityMatrix::hermiticity_residual() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace() const { return entries_.trace().real(); }

DensityMatrix reduced_density_matrix(const StateVector& state, std::span<const int> subsystem) {
  const int n = state.n_qubits();
  std::vector<int> keep(subsystem.begin(), subsystem.end());
  std::sort(keep.begin(), keep.end());
  if (keep.empty()) throw ArgumentError("reduced density matrix of an empty subsystem");
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw ArgumentError("subsystem lists a site twice");
  }
  if (keep.front() < 0 || keep.back() >= n) throw ArgumentError("subsystem site out of range");
  if (static_cast<int>(keep.size()) == n) throw ArgumentError("subsystem must be a proper subset");

  std::vector<int> traced;
  for (int q = 0, k = 0; q < n; ++q) {
    if (k < static_cast<int>(keep.size()) && keep[k] == q) {
      ++k;
    } else {
      traced.push_back(q);
    }
  }

  // psi viewed as a dim_a x dim_b matrix M; rho_A = M M^dagger.
  const Eigen::Index dim_a = Eigen::Index{1} << keep.size();
  const Eigen::Index dim_b = Eigen::Index{1} << traced.size();
  Eigen::MatrixXcd m(dim_a, dim_b);
  for (std::uint64_t b = 0; b < state.dim(); ++b) {
    std::uint64_t ia = 0;
    std::uint64_t ib = 0;
    for (std::size_t k = 0; k < keep.size(); ++k) ia |= ((b >> keep[k]) & 1u) << k;
    for (std::size_t k = 0; k < traced.size(); ++k) ib |= ((b >> traced[k]) & 1u) << k;
    m(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) = state[b];
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  // Exact Hermiticity; the product is Hermitian up to rounding.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

double entanglement_entropy(const DensityMatrix& rho) {
  if (rho.hermiticity_residual() > 1e-10) throw MatrixError("entropy of a non-Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw MatrixError("eigensolver failed in entanglement_entropy");
  double s = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double p = solver.eigenvalues()[k];
    if (p > 1e-14) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

std::vector<int> left_half(int n_qubits) {
  std::vector<int> sites(static_cast<std::size_t>(n_qubits / 2));
  for (int q = 0; q < n_qubits / 2; ++q) sites[q] = q;
  return sites;
}

double half_chain_entropy(const StateVector& state) {
  if (state.n_qubits() < 2) throw ArgumentError("half-chain entropy needs at least two qubits");
  const auto sites = left_half(state.n_qubits());
  return entanglement_entropy(reduced_density_matrix(state, sites));
}

}  // namespace qorder
