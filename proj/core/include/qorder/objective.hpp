#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qorder/circuit.hpp"
#include "qorder/hamiltonian.hpp"
#include "qorder/pauli.hpp"
#include "qorder/state_vector.hpp"

namespace qorder {

// chi = N^-2 sum_{i,j} <Z_i Z_j> = N^-2 ||(sum_i Z_i)|psi>||^2. Diagonal
// terms are included: chi(|+>^N) = 1/N and chi(GHZ) = 1.
double susceptibility(const StateVector& state);

// O_ij = Z_i Y_{i+1} X_{i+2} ... X_{j-2} Y_{j-1} Z_j with 1-based endpoints
// 1 <= i, i + 3 <= j <= N. These are the only 1-based indices in the library;
// site k here is qubit k - 1.
PauliString string_order_operator(int n_qubits, int i, int j);
double string_order(const StateVector& state, int i, int j);

struct SusceptibilityOrder {};
struct StringOrderParameter {
  int i;  // 1-based endpoints
  int j;
};

// The order parameter maximized by the loss.
class OrderObservable {
 public:
  static OrderObservable susceptibility() { return OrderObservable(SusceptibilityOrder{}); }
  static OrderObservable string_order(int i, int j) { return OrderObservable(StringOrderParameter{i, j}); }
  // Endpoints (N/4, 3N/4); requires N divisible by 4.
  static OrderObservable default_string_order(int n_qubits);

  bool is_susceptibility() const noexcept { return std::holds_alternative<SusceptibilityOrder>(kind_); }
  const StringOrderParameter* string_endpoints() const noexcept { return std::get_if<StringOrderParameter>(&kind_); }
  std::string name() const;

  // Throws ArgumentError when the observable cannot act on n qubits.
  void check(int n_qubits) const;

  double expectation(const StateVector& state) const;
  // out += scale * O |in>
  void accumulate(const StateVector& in, double scale, StateVector& out) const;

 private:
  using Kind = std::variant<SusceptibilityOrder, StringOrderParameter>;
  explicit OrderObservable(Kind k) : kind_(k) {}
  Kind kind_;
};

struct LossConfig {
  double target_energy = 0.0;
  double sigma = 0.5;
  double beta = 0.25;
  OrderObservable observable = OrderObservable::susceptibility();

  void validate() const;
};

// The pieces of L = -<O> + sigma (<H> - E)^2 + beta (<H^2> - <H>^2).
struct LossTerms {
  double loss = 0.0;
  double order = 0.0;
  double energy_mean = 0.0;
  double energy_second_moment = 0.0;
  double variance() const noexcept { return energy_second_moment - energy_mean * energy_mean; }
};

double assemble_loss(const LossConfig& cfg, double order, double energy_mean, double energy_second_moment) noexcept;

// Evaluates the loss and its exact gradient for one (circuit, initial state,
// Hamiltonian, config) tuple. Holds preallocated scratch states, so one
// instance must not be shared across threads.
//
// The gradient is computed by an adjoint sweep: after the forward pass the
// loss is linearized as <psi|M|psi> with M = -O + c1 H + beta H^2 and
// c1 = 2 sigma (<H> - E) - 2 beta <H>. Walking the gates backwards with
// |psi_k> and |lambda_k> = U_{k+1}^dag ... M|psi>, each component is
// dL/dtheta_k = Im <lambda_k| P_k |psi_k>. States are rewound by inverse
// rotations, so memory stays at five statevectors regardless of depth.
class LossFunction {
 public:
  LossFunction(const CircuitSpec& circuit, const StateVector& initial_state, const Hamiltonian& hamiltonian,
               const LossConfig& cfg);

  const CircuitSpec& circuit() const noexcept { return circuit_; }
  const LossConfig& config() const noexcept { return cfg_; }
  const StateVector& initial_state() const noexcept { return initial_; }

  LossTerms evaluate(std::span<const double> params);
  LossTerms evaluate_with_gradient(std::span<const double> params, std::span<double> gradient);

  // State after the most recent evaluate call (forward pass output).
  const StateVector& last_state() const noexcept { return psi_; }

 private:
  LossTerms forward(std::span<const double> params);

  const CircuitSpec& circuit_;
  StateVector initial_;
  const Hamiltonian& hamiltonian_;
  LossConfig cfg_;
  StateVector psi_;
  StateVector hpsi_;
  StateVector lambda_;
  StateVector scratch_;
};

double loss(std::span<const double> params, const CircuitSpec& circuit, const StateVector& initial_state,
            const Hamiltonian& h, const LossConfig& cfg);

std::vector<double> loss_gradient(std::span<const double> params, const CircuitSpec& circuit,
                                  const StateVector& initial_state, const Hamiltonian& h, const LossConfig& cfg);

}  // namespace qorder
