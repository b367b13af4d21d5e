#include "qorder/measurement.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <iostream>
#include <numeric>
#include <thread>

#include "qorder/density_matrix.hpp"
#include "qorder/error.hpp"
#include "qorder/seeding.hpp"

namespace qorder {

double probability_of_one(const StateVector& state, int site) {
  if (site < 0 || site >= state.n_qubits()) throw ArgumentError("measurement site out of range");
  const std::uint64_t bit = std::uint64_t{1} << site;
  const auto a = state.amplitudes();
  double p1 = 0.0;
  for (std::uint64_t b = 0; b < a.size(); ++b) {
    if (b & bit) p1 += std::norm(a[b]);
  }
  return p1;
}

MeasurementResult projective_measure(const StateVector& state, int site, std::mt19937_64& rng) {
  const double p1 = probability_of_one(state, site);
  const double p0 = std::max(0.0, 1.0 - p1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double draw = u(rng);
  int outcome = draw < p1 ? 1 : 0;
  bool forced = false;
  if (outcome == 1 && p1 < kMinOutcomeProbability) {
    outcome = 0;
    forced = true;
  } else if (outcome == 0 && p0 < kMinOutcomeProbability) {
    outcome = 1;
    forced = true;
  }
  if (forced) std::clog << "qorder: forced measurement outcome " << outcome << " on site " << site << '\n';

  const std::uint64_t bit = std::uint64_t{1} << site;
  StateVector post = state;
  auto a = post.amplitudes();
  double kept = 0.0;
  for (std::uint64_t b = 0; b < a.size(); ++b) {
    if (static_cast<int>((b & bit) != 0) != outcome) {
      a[b] = 0.0;
    } else {
      kept += std::norm(a[b]);
    }
  }
  post.scale(1.0 / std::sqrt(kept));
  return {outcome, outcome == 1 ? p1 : p0, std::move(post), forced};
}

MeasurementRobustnessCurve measurement_robustness(std::span<const StateVector> states, int m_max, int samples_per_m,
                                                  std::uint64_t seed, int jobs) {
  if (states.empty()) throw ArgumentError("measurement robustness needs at least one state");
  const int n = states.front().n_qubits();
  for (const auto& s : states) {
    if (s.n_qubits() != n) throw ArgumentError("ensemble states have different qubit counts");
  }
  if (m_max < 0 || m_max >= n) throw ArgumentError("m_max must satisfy 0 <= m_max < N");
  if (samples_per_m < 1) throw ArgumentError("samples_per_m must be >= 1");

  std::vector<double> unmeasured(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) unmeasured[k] = half_chain_entropy(states[k]);

  const std::size_t per_m = states.size() * static_cast<std::size_t>(samples_per_m);
  MeasurementRobustnessCurve curve;
  for (int m = 0; m <= m_max; ++m) {
    std::vector<double> values(per_m);
    const std::uint64_t m_seed = derive_seed(seed, static_cast<std::uint64_t>(m));
    auto sample = [&](std::size_t idx) {
      const std::size_t k = idx / static_cast<std::size_t>(samples_per_m);
      if (m == 0) {
        values[idx] = unmeasured[k];
        return;
      }
      std::mt19937_64 rng(derive_seed(m_seed, idx));
      std::vector<int> sites(static_cast<std::size_t>(n));
      std::iota(sites.begin(), sites.end(), 0);
      // Partial Fisher-Yates: the first m entries are a uniform m-subset.
      for (int t = 0; t < m; ++t) {
        std::uniform_int_distribution<int> pick(t, n - 1);
        std::swap(sites[static_cast<std::size_t>(t)], sites[static_cast<std::size_t>(pick(rng))]);
      }
      StateVector psi = states[k];
      for (int t = 0; t < m; ++t) psi = projective_measure(psi, sites[static_cast<std::size_t>(t)], rng).post_state;
      values[idx] = half_chain_entropy(psi);
    };

    const int workers = std::clamp(jobs, 1, static_cast<int>(per_m));
    if (workers == 1) {
      for (std::size_t idx = 0; idx < per_m; ++idx) sample(idx);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t idx = next++; idx < per_m; idx = next++) sample(idx);
        });
      }
    }

    const double count = static_cast<double>(per_m);
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / count;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double se = per_m > 1 ? std::sqrt(ss / (count - 1.0) / count) : 0.0;
    curve.push_back({m, mean, se, per_m});
  }
  return curve;
}

double qfi_collective(const StateVector& state) {
  const int n = state.n_qubits();
  const auto a = state.amplitudes();
  double first = 0.0;
  double second = 0.0;
  for (std::uint64_t b = 0; b < a.size(); ++b) {
    const double m = n - 2 * std::popcount(b);
    const double p = std::norm(a[b]);
    first += m * p;
    second += m * m * p;
  }
  return std::max(0.0, second - first * first);
}

}  // namespace qorder
