#include "qorder/train.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "qorder/error.hpp"
#include "qorder/seeding.hpp"

namespace qorder {

std::string_view to_string(RunStatus s) noexcept {
  switch (s) {
    case RunStatus::Converged:
      return "converged";
    case RunStatus::MaxIterations:
      return "max_iterations";
    case RunStatus::NoImprovement:
      return "no_improvement";
    case RunStatus::NumericError:
      return "numeric_error";
    case RunStatus::Error:
      return "error";
  }
  return "error";
}

RunStatus parse_run_status(std::string_view label) {
  for (RunStatus s : {RunStatus::Converged, RunStatus::MaxIterations, RunStatus::NoImprovement,
                      RunStatus::NumericError, RunStatus::Error}) {
    if (to_string(s) == label) return s;
  }
  throw ArgumentError("unknown run status '" + std::string(label) + "'");
}

std::vector<double> initial_parameters(int n_params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-0.1, 0.1);
  std::vector<double> p(static_cast<std::size_t>(n_params));
  for (double& v : p) {
    do {
      v = dist(rng);
    } while (v == -0.1);
  }
  return p;
}

TrainingRecord train(const CircuitSpec& circuit, const StateVector& initial_state, const Hamiltonian& h,
                     const LossConfig& loss_cfg, const OptimizerConfig& opt_cfg, std::uint64_t seed) {
  return train_from(circuit, initial_state, h, loss_cfg, opt_cfg,
                    initial_parameters(circuit.n_params, derive_seed(seed, kParameterStream)), seed);
}

TrainingRecord train_from(const CircuitSpec& circuit, const StateVector& initial_state, const Hamiltonian& h,
                          const LossConfig& loss_cfg, const OptimizerConfig& opt_cfg, std::vector<double> params,
                          std::uint64_t seed) {
  opt_cfg.validate();
  if (static_cast<int>(params.size()) != circuit.n_params) throw ArgumentError("initial parameter count mismatch");
  const auto start = std::chrono::steady_clock::now();

  LossFunction f(circuit, initial_state, h, loss_cfg);
  Optimizer opt(opt_cfg, params.size());
  const auto symmetries = circuit.protected_symmetries();

  TrainingRecord rec;
  rec.seed = seed;
  rec.initial_params = params;
  rec.symmetry.resize(symmetries.size());
  std::vector<double> grad(params.size());
  std::vector<double> previous = params;

  const int window = opt_cfg.convergence_window;
  bool converged = false;
  bool numeric_failure = false;
  for (int t = 0;; ++t) {
    const LossTerms terms = f.evaluate_with_gradient(params, grad);
    const bool finite = std::isfinite(terms.loss) &&
                        std::all_of(grad.begin(), grad.end(), [](double g) { return std::isfinite(g); });
    if (!finite) {
      numeric_failure = true;
      rec.message = "non-finite loss or gradient at iteration " + std::to_string(t);
      params = previous;
      break;
    }
    rec.loss.push_back(terms.loss);
    rec.order.push_back(terms.order);
    rec.energy.push_back(terms.energy_mean);
    rec.variance.push_back(terms.variance());
    for (std::size_t s = 0; s < symmetries.size(); ++s) {
      rec.symmetry[s].push_back(pauli_expectation(f.last_state(), symmetries[s]));
    }
    rec.iterations = t;

    if (t >= window) {
      const double ref = rec.loss[static_cast<std::size_t>(t - window)];
      if (std::abs(terms.loss - ref) <= opt_cfg.convergence_tol * std::max(std::abs(ref), 1e-12)) {
        converged = true;
        break;
      }
    }
    if (t >= opt_cfg.max_iters) break;
    previous = params;
    opt.step(params, grad);
  }

  rec.final_params = params;
  if (numeric_failure) {
    rec.status = RunStatus::NumericError;
  } else if (rec.iterations > 0 && !(rec.loss.back() < rec.loss.front())) {
    rec.status = RunStatus::NoImprovement;
  } else {
    rec.status = converged ? RunStatus::Converged : RunStatus::MaxIterations;
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::uint64_t restart_seed(std::uint64_t base_seed, int restart) noexcept {
  return derive_seed(base_seed, static_cast<std::uint64_t>(restart));
}

StateVector restart_initial_state(const RunSpec& spec, std::uint64_t seed) {
  return make_initial_state(spec.initial_state, spec.circuit.n_qubits, derive_seed(seed, kInitialStateStream));
}

TrainingRecord run_restart(const RunSpec& spec, std::uint64_t seed) {
  try {
    return train(spec.circuit, restart_initial_state(spec, seed), spec.hamiltonian, spec.loss, spec.optimizer, seed);
  } catch (const std::exception& e) {
    TrainingRecord rec;
    rec.seed = seed;
    rec.status = RunStatus::Error;
    rec.message = e.what();
    return rec;
  }
}

namespace {

TraceStats trace_stats(const std::vector<TrainingRecord>& records, std::vector<double> TrainingRecord::*trace,
                       std::size_t length) {
  TraceStats out;
  out.mean.assign(length, 0.0);
  out.stderr_of_mean.assign(length, 0.0);
  std::vector<const std::vector<double>*> usable;
  for (const auto& r : records) {
    if (!(r.*trace).empty()) usable.push_back(&(r.*trace));
  }
  const double n = static_cast<double>(usable.size());
  if (usable.empty()) return out;
  for (std::size_t t = 0; t < length; ++t) {
    double sum = 0.0;
    for (const auto* v : usable) sum += (*v)[std::min(t, v->size() - 1)];
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto* v : usable) {
      const double d = (*v)[std::min(t, v->size() - 1)] - mean;
      ss += d * d;
    }
    out.mean[t] = mean;
    out.stderr_of_mean[t] = usable.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  }
  return out;
}

}  // namespace

EnsembleSummary summarize(std::vector<TrainingRecord> records) {
  EnsembleSummary s;
  s.n_restarts = static_cast<int>(records.size());
  std::size_t length = 0;
  for (const auto& r : records) {
    length = std::max(length, r.loss.size());
    if (!r.succeeded()) ++s.n_failed;
  }
  s.loss = trace_stats(records, &TrainingRecord::loss, length);
  s.order = trace_stats(records, &TrainingRecord::order, length);
  s.energy = trace_stats(records, &TrainingRecord::energy, length);
  s.variance = trace_stats(records, &TrainingRecord::variance, length);
  s.records = std::move(records);
  return s;
}

EnsembleSummary multi_restart_with_seeds(const RunSpec& spec, std::span<const std::uint64_t> seeds, int jobs) {
  if (seeds.empty()) throw ArgumentError("multi_restart needs at least one restart");
  std::vector<TrainingRecord> records(seeds.size());
  const int workers = std::clamp(jobs, 1, static_cast<int>(seeds.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < seeds.size(); k = next++) records[k] = run_restart(spec, seeds[k]);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return summarize(std::move(records));
}

EnsembleSummary multi_restart(const RunSpec& spec, int n_restarts, std::uint64_t base_seed, int jobs) {
  if (n_restarts < 1) throw ArgumentError("n_restarts must be >= 1");
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(n_restarts));
  for (int r = 0; r < n_restarts; ++r) seeds[static_cast<std::size_t>(r)] = restart_seed(base_seed, r);
  return multi_restart_with_seeds(spec, seeds, jobs);
}

}  // namespace qorder
