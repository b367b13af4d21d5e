#include "qorder/exact_diag.hpp"

#include <algorithm>
#include <string>

#include "qorder/error.hpp"

namespace qorder {

EigenSystem::EigenSystem(int n_qubits, Eigen::VectorXd energies, Eigen::MatrixXd vectors)
    : n_qubits_(n_qubits), energies_(std::move(energies)), vectors_(std::move(vectors)) {}

EigenSystem::EigenSystem(int n_qubits, Eigen::VectorXd energies, Eigen::MatrixXcd vectors)
    : n_qubits_(n_qubits), energies_(std::move(energies)), vectors_(std::move(vectors)) {}

StateVector EigenSystem::eigenvector(Eigen::Index n) const {
  if (n < 0 || n >= size()) throw ArgumentError("eigenvector index out of range");
  std::vector<cplx> amps(static_cast<std::size_t>(size()));
  std::visit(
      [&](const auto& v) {
        for (Eigen::Index b = 0; b < size(); ++b) amps[static_cast<std::size_t>(b)] = v(b, n);
      },
      vectors_);
  return StateVector(n_qubits_, std::move(amps));
}

std::vector<cplx> EigenSystem::overlaps(const StateVector& state) const {
  if (state.n_qubits() != n_qubits_) throw SizeError("overlaps: qubit count mismatch");
  const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), size());
  Eigen::VectorXcd c = std::visit(
      [&](const auto& v) -> Eigen::VectorXcd {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Eigen::MatrixXd>) {
          Eigen::VectorXcd out(size());
          out.real() = v.transpose() * psi.real();
          out.imag() = v.transpose() * psi.imag();
          return out;
        } else {
          return v.adjoint() * psi;
        }
      },
      vectors_);
  return {c.data(), c.data() + c.size()};
}

double EigenSystem::max_residual(const Hamiltonian& h) const {
  double worst = 0.0;
  StateVector hv(n_qubits_);
  for (Eigen::Index n = 0; n < size(); ++n) {
    const StateVector v = eigenvector(n);
    apply_hamiltonian(h, v, hv);
    hv.axpy(-energies_[n], v);
    worst = std::max(worst, std::sqrt(hv.norm_squared()));
  }
  return worst;
}

EigenSystem exact_diagonalize(const Hamiltonian& h) {
  if (h.n_qubits() > kMaxDenseQubits) {
    throw CapacityError("exact diagonalization limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  if (h.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_real_matrix(h));
    if (solver.info() != Eigen::Success) throw MatrixError("eigensolver did not converge");
    return EigenSystem(h.n_qubits(), solver.eigenvalues(), Eigen::MatrixXd(solver.eigenvectors()));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(h));
  if (solver.info() != Eigen::Success) throw MatrixError("eigensolver did not converge");
  return EigenSystem(h.n_qubits(), solver.eigenvalues(), Eigen::MatrixXcd(solver.eigenvectors()));
}

}  // namespace qorder
