#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qorder/state_vector.hpp"

namespace qorder {

enum class Pauli : std::uint8_t { X, Y, Z };

char pauli_char(Pauli p) noexcept;

// A tensor product of single-site Paulis with a complex prefactor.
//
// Stored in symplectic form: bit q of x_mask() is set for X or Y on qubit q,
// bit q of z_mask() for Z or Y. With Y = i X Z the action on a basis state is
//
//   P|b> = coefficient * i^{#Y} * (-1)^{popcount(b & z_mask)} |b ^ x_mask>.
//
// A site can carry at most one Pauli; the string is Hermitian iff the
// coefficient is real.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(cplx coefficient) : coefficient_(coefficient) {}

  // Parses a compact label such as "Z0 X1 Z2" or "X3X4". An empty label is
  // the identity.
  static PauliString parse(std::string_view label, cplx coefficient = 1.0);

  // Dense string placed at consecutive sites starting at first_site:
  // from_word("ZXZ", 4) == Z4 X5 Z6.
  static PauliString from_word(std::string_view word, int first_site, cplx coefficient = 1.0);

  // Adds op on site; throws OperatorError when the site is already occupied.
  PauliString& set(int site, Pauli op);

  std::optional<Pauli> at(int site) const noexcept;

  std::uint64_t x_mask() const noexcept { return x_mask_; }
  std::uint64_t z_mask() const noexcept { return z_mask_; }
  std::uint64_t support_mask() const noexcept { return x_mask_ | z_mask_; }
  int y_count() const noexcept;
  int weight() const noexcept;
  std::vector<int> sites() const;
  // -1 for the identity string.
  int max_site() const noexcept;

  cplx coefficient() const noexcept { return coefficient_; }
  void set_coefficient(cplx c) noexcept { coefficient_ = c; }

  bool is_hermitian() const noexcept { return coefficient_.imag() == 0.0; }
  bool commutes_with(const PauliString& other) const noexcept;

  // i^{#Y} times the coefficient: the scalar multiplying the sign in P|b>.
  cplx phase() const noexcept;

  // "Z0 X1 Z2", prefixed by the coefficient when it is not 1.
  std::string to_string() const;

  bool operator==(const PauliString& other) const = default;

 private:
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
  cplx coefficient_ = 1.0;
};

// Throws OperatorError unless every site of p lies in [0, n_qubits).
void check_sites(const PauliString& p, int n_qubits);

// out += scale * P|in>
void accumulate_pauli(const StateVector& in, const PauliString& p, cplx scale, StateVector& out);

// Returns P|state>.
StateVector apply_pauli(const StateVector& state, const PauliString& p);

// In place: state <- exp(-i angle/2 P) state
//                  = cos(angle/2) state - i sin(angle/2) P state.
// P must be Hermitian with unit coefficient.
void apply_pauli_rotation(StateVector& state, const PauliString& p, double angle);

// In place CZ: negates amplitudes whose bits site_a and site_b are both 1.
void apply_controlled_z(StateVector& state, int site_a, int site_b);

// <bra|P|ket> without materializing P|ket>.
cplx pauli_matrix_element(const StateVector& bra, const PauliString& p, const StateVector& ket);

// <psi|P|psi> for Hermitian P.
double pauli_expectation(const StateVector& state, const PauliString& p);

}  // namespace qorder
