#include "qorder/state_vector.hpp"

#include <cmath>
#include <string>

#include "qorder/error.hpp"

namespace qorder {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw SizeError("amplitude array of length " + std::to_string(amps_.size()) +
                    " does not match 2^" + std::to_string(n_qubits));
  }
}

double StateVector::norm_squared() const noexcept {
  double acc = 0.0;
  for (const cplx& a : amps_) acc += std::norm(a);
  return acc;
}

void StateVector::normalize() {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw ArgumentError("cannot normalize a zero vector");
  scale(1.0 / std::sqrt(n2));
}

void StateVector::set_zero() noexcept {
  for (cplx& a : amps_) a = 0.0;
}

void StateVector::axpy(cplx scale, const StateVector& other) {
  if (other.dim() != dim()) throw SizeError("axpy on states of different size");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += scale * other.amps_[i];
}

void StateVector::scale(cplx factor) noexcept {
  for (cplx& a : amps_) a *= factor;
}

StateVector zero_state(int n_qubits) { return StateVector(n_qubits); }

StateVector basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw SizeError("basis index out of range");
  s[0] = 0.0;
  s[index] = 1.0;
  return s;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw SizeError("inner product of " + std::to_string(a.n_qubits()) + "- and " +
                    std::to_string(b.n_qubits()) + "-qubit states");
  }
  cplx acc = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace qorder
