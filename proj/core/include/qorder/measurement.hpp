#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qorder/state_vector.hpp"

namespace qorder {

// Below this Born probability an outcome is never selected.
inline constexpr double kMinOutcomeProbability = 1e-14;

struct MeasurementResult {
  int outcome;          // 0 or 1
  double probability;   // Born probability of `outcome`
  StateVector post_state;
  bool forced = false;  // the draw landed on an outcome with vanishing probability
};

// Projective Z measurement of one qubit, outcome sampled with Born's rule.
MeasurementResult projective_measure(const StateVector& state, int site, std::mt19937_64& rng);

// Probability of reading 1 on `site`.
double probability_of_one(const StateVector& state, int site);

struct RobustnessPoint {
  int m;
  double mean_entropy;
  double stderr_of_mean;
  std::size_t n_samples;
};

using MeasurementRobustnessCurve = std::vector<RobustnessPoint>;

// For m = 0..m_max: every state of the ensemble is sampled samples_per_m
// times; each sample measures m distinct uniformly chosen sites in sequence
// and records the half-chain entropy of the post-measurement state. Sample
// (m, state k, repeat s) draws from its own stream
// derive_seed(derive_seed(seed, m), k * samples_per_m + s), so the curve does
// not depend on `jobs`.
MeasurementRobustnessCurve measurement_robustness(std::span<const StateVector> states, int m_max, int samples_per_m,
                                                  std::uint64_t seed, int jobs = 1);

// Collective-generator quantum Fisher information of a pure state,
// F_Q = 4 Var(J_z) with J_z = (1/2) sum_i Z_i.
double qfi_collective(const StateVector& state);

}  // namespace qorder
