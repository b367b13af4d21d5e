#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qorder/circuit.hpp"
#include "qorder/hamiltonian.hpp"
#include "qorder/objective.hpp"
#include "qorder/optimizer.hpp"
#include "qorder/states.hpp"

namespace qorder {

enum class RunStatus {
  Converged,      // relative loss change fell below tolerance
  MaxIterations,  // budget exhausted with loss below its initial value
  NoImprovement,  // final loss not below the initial loss
  NumericError,   // non-finite loss or gradient; trace truncated before it
  Error,          // any other exception, see message
};

std::string_view to_string(RunStatus s) noexcept;
RunStatus parse_run_status(std::string_view label);

// Trace entry t is the evaluation after t optimizer steps, so every trace has
// iterations + 1 entries and entry 0 is the initial point.
struct TrainingRecord {
  std::uint64_t seed = 0;
  std::vector<double> loss;
  std::vector<double> order;
  std::vector<double> energy;
  std::vector<double> variance;
  // symmetry[s][t]: expectation of the circuit's s-th protected operator.
  std::vector<std::vector<double>> symmetry;
  std::vector<double> initial_params;
  std::vector<double> final_params;
  int iterations = 0;
  RunStatus status = RunStatus::MaxIterations;
  std::string message;
  double wall_seconds = 0.0;  // not part of the persisted record

  bool succeeded() const noexcept { return status == RunStatus::Converged || status == RunStatus::MaxIterations; }
};

// Uniform in (-0.1, 0.1), a pure function of the seed.
std::vector<double> initial_parameters(int n_params, std::uint64_t seed);

// Optimizes from initial_parameters(n, derive_seed(seed, kParameterStream)).
TrainingRecord train(const CircuitSpec& circuit, const StateVector& initial_state, const Hamiltonian& h,
                     const LossConfig& loss_cfg, const OptimizerConfig& opt_cfg, std::uint64_t seed);

TrainingRecord train_from(const CircuitSpec& circuit, const StateVector& initial_state, const Hamiltonian& h,
                          const LossConfig& loss_cfg, const OptimizerConfig& opt_cfg, std::vector<double> params,
                          std::uint64_t seed = 0);

// Everything needed to launch one restart.
struct RunSpec {
  CircuitSpec circuit;
  Hamiltonian hamiltonian;
  LossConfig loss;
  OptimizerConfig optimizer;
  InitialStateKind initial_state = InitialStateKind::RandomProduct;
};

// Seed of restart r: derive_seed(base_seed, r).
std::uint64_t restart_seed(std::uint64_t base_seed, int restart) noexcept;

// Initial state from derive_seed(seed, kInitialStateStream).
StateVector restart_initial_state(const RunSpec& spec, std::uint64_t seed);

// One restart with the given seed; exceptions become status Error.
TrainingRecord run_restart(const RunSpec& spec, std::uint64_t seed);

struct TraceStats {
  std::vector<double> mean;
  std::vector<double> stderr_of_mean;
};

// Per-iteration statistics across restarts. Restarts that stopped early are
// padded with their last value; stderr uses the n-1 sample deviation and is 0
// for a single restart.
struct EnsembleSummary {
  int n_restarts = 0;
  int n_failed = 0;
  TraceStats loss;
  TraceStats order;
  TraceStats energy;
  TraceStats variance;
  std::vector<TrainingRecord> records;  // ordered by restart index
};

EnsembleSummary summarize(std::vector<TrainingRecord> records);

// Restarts run on up to `jobs` threads; the result does not depend on jobs.
EnsembleSummary multi_restart(const RunSpec& spec, int n_restarts, std::uint64_t base_seed, int jobs = 1);
EnsembleSummary multi_restart_with_seeds(const RunSpec& spec, std::span<const std::uint64_t> seeds, int jobs = 1);

}  // namespace qorder
