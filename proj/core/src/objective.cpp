#include "qorder/objective.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "qorder/error.hpp"

namespace qorder {

double susceptibility(const StateVector& state) {
  const int n = state.n_qubits();
  const auto a = state.amplitudes();
  double acc = 0.0;
  for (std::uint64_t b = 0; b < a.size(); ++b) {
    const double m = n - 2 * std::popcount(b);
    acc += m * m * std::norm(a[b]);
  }
  return acc / (static_cast<double>(n) * n);
}

PauliString string_order_operator(int n_qubits, int i, int j) {
  if (i < 1 || j > n_qubits || i + 3 > j) {
    throw ArgumentError("string order endpoints (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") need 1 <= i, i + 3 <= j <= " + std::to_string(n_qubits));
  }
  PauliString p;
  p.set(i - 1, Pauli::Z).set(i, Pauli::Y);
  for (int k = i + 2; k <= j - 2; ++k) p.set(k - 1, Pauli::X);
  p.set(j - 2, Pauli::Y).set(j - 1, Pauli::Z);
  return p;
}

double string_order(const StateVector& state, int i, int j) {
  return pauli_expectation(state, string_order_operator(state.n_qubits(), i, j));
}

OrderObservable OrderObservable::default_string_order(int n_qubits) {
  if (n_qubits % 4 != 0) {
    throw ArgumentError("default string-order endpoints need N divisible by 4; pass endpoints explicitly");
  }
  return string_order(n_qubits / 4, 3 * n_qubits / 4);
}

std::string OrderObservable::name() const {
  if (const auto* s = string_endpoints()) {
    return "string_order(" + std::to_string(s->i) + "," + std::to_string(s->j) + ")";
  }
  return "susceptibility";
}

void OrderObservable::check(int n_qubits) const {
  if (const auto* s = string_endpoints()) string_order_operator(n_qubits, s->i, s->j);
}

double OrderObservable::expectation(const StateVector& state) const {
  if (const auto* s = string_endpoints()) return qorder::string_order(state, s->i, s->j);
  return qorder::susceptibility(state);
}

void OrderObservable::accumulate(const StateVector& in, double scale, StateVector& out) const {
  if (in.dim() != out.dim()) throw SizeError("observable application size mismatch");
  if (const auto* s = string_endpoints()) {
    accumulate_pauli(in, string_order_operator(in.n_qubits(), s->i, s->j), scale, out);
    return;
  }
  const int n = in.n_qubits();
  const double norm = scale / (static_cast<double>(n) * n);
  const auto src = in.amplitudes();
  auto dst = out.amplitudes();
  for (std::uint64_t b = 0; b < src.size(); ++b) {
    const double m = n - 2 * std::popcount(b);
    dst[b] += (norm * m * m) * src[b];
  }
}

void LossConfig::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ArgumentError("sigma must be a finite value >= 0");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ArgumentError("beta must be a finite value >= 0");
  if (!std::isfinite(target_energy)) throw ArgumentError("target energy must be finite");
}

double assemble_loss(const LossConfig& cfg, double order, double energy_mean, double energy_second_moment) noexcept {
  const double dev = energy_mean - cfg.target_energy;
  return -order + cfg.sigma * dev * dev + cfg.beta * (energy_second_moment - energy_mean * energy_mean);
}

LossFunction::LossFunction(const CircuitSpec& circuit, const StateVector& initial_state, const Hamiltonian& hamiltonian,
                           const LossConfig& cfg)
    : circuit_(circuit),
      initial_(initial_state),
      hamiltonian_(hamiltonian),
      cfg_(cfg),
      psi_(initial_state.n_qubits()),
      hpsi_(initial_state.n_qubits()),
      lambda_(initial_state.n_qubits()),
      scratch_(initial_state.n_qubits()) {
  cfg_.validate();
  if (circuit.n_qubits != initial_state.n_qubits() || hamiltonian.n_qubits() != initial_state.n_qubits()) {
    throw ArgumentError("circuit, initial state and Hamiltonian disagree on the qubit count");
  }
  cfg_.observable.check(initial_state.n_qubits());
}

LossTerms LossFunction::forward(std::span<const double> params) {
  psi_ = initial_;
  apply_circuit(circuit_, params, psi_);
  apply_hamiltonian(hamiltonian_, psi_, hpsi_);
  LossTerms t;
  t.order = cfg_.observable.expectation(psi_);
  t.energy_mean = inner_product(psi_, hpsi_).real();
  t.energy_second_moment = hpsi_.norm_squared();
  t.loss = assemble_loss(cfg_, t.order, t.energy_mean, t.energy_second_moment);
  return t;
}

LossTerms LossFunction::evaluate(std::span<const double> params) { return forward(params); }

LossTerms LossFunction::evaluate_with_gradient(std::span<const double> params, std::span<double> gradient) {
  if (static_cast<int>(gradient.size()) != circuit_.n_params) throw ArgumentError("gradient buffer has wrong length");
  const LossTerms t = forward(params);

  // lambda = M psi
  const double c1 = 2.0 * cfg_.sigma * (t.energy_mean - cfg_.target_energy) - 2.0 * cfg_.beta * t.energy_mean;
  lambda_.set_zero();
  cfg_.observable.accumulate(psi_, -1.0, lambda_);
  lambda_.axpy(c1, hpsi_);
  if (cfg_.beta != 0.0) {
    apply_hamiltonian(hamiltonian_, hpsi_, scratch_);
    lambda_.axpy(cfg_.beta, scratch_);
  }

  for (double& g : gradient) g = 0.0;
  scratch_ = psi_;
  for (auto it = circuit_.slots.rbegin(); it != circuit_.slots.rend(); ++it) {
    gradient[static_cast<std::size_t>(it->param_index)] += pauli_matrix_element(lambda_, it->generator, psi_).imag();
    const double theta = params[static_cast<std::size_t>(it->param_index)];
    apply_pauli_rotation(psi_, it->generator, -theta);
    apply_pauli_rotation(lambda_, it->generator, -theta);
  }
  std::swap(psi_, scratch_);
  return t;
}

double loss(std::span<const double> params, const CircuitSpec& circuit, const StateVector& initial_state,
            const Hamiltonian& h, const LossConfig& cfg) {
  LossFunction f(circuit, initial_state, h, cfg);
  return f.evaluate(params).loss;
}

std::vector<double> loss_gradient(std::span<const double> params, const CircuitSpec& circuit,
                                  const StateVector& initial_state, const Hamiltonian& h, const LossConfig& cfg) {
  LossFunction f(circuit, initial_state, h, cfg);
  std::vector<double> g(static_cast<std::size_t>(circuit.n_params));
  f.evaluate_with_gradient(params, g);
  return g;
}

}  // namespace qorder
