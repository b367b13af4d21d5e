#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qorder {

using cplx = std::complex<double>;

// Practical ceiling for a dense statevector: 2^28 amplitudes is 4 GiB of
// complex<double>.
inline constexpr int kMaxQubits = 28;

// Dense statevector over n qubits.
//
// Qubit ordering is little-endian everywhere in this library: qubit q is bit
// q of the basis-state index, so qubit 0 is the least significant bit and
// |b_{n-1} ... b_1 b_0> has index sum_q b_q 2^q. Every kernel, Hamiltonian
// builder and diagnostic relies on this single convention.
//
// The container does not enforce normalization; results of operator
// applications (H|psi>) live in the same type. Gate kernels preserve the norm.
class StateVector {
 public:
  // |0...0> on n qubits.
  explicit StateVector(int n_qubits);

  // Takes ownership of a full amplitude array; size must be 2^n_qubits.
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  std::span<cplx> amplitudes() noexcept { return amps_; }

  cplx operator[](std::size_t index) const noexcept { return amps_[index]; }
  cplx& operator[](std::size_t index) noexcept { return amps_[index]; }

  double norm_squared() const noexcept;
  void normalize();
  void set_zero() noexcept;

  // this += scale * other
  void axpy(cplx scale, const StateVector& other);
  void scale(cplx factor) noexcept;

  bool operator==(const StateVector& other) const = default;

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

StateVector zero_state(int n_qubits);

// Computational basis state |index>.
StateVector basis_state(int n_qubits, std::uint64_t index);

// <a|b>, antilinear in the first argument.
cplx inner_product(const StateVector& a, const StateVector& b);

// Throws SizeError unless 1 <= n_qubits <= kMaxQubits.
void check_qubit_count(int n_qubits);

}  // namespace qorder
