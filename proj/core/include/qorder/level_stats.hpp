#pragma once

#include <span>
#include <vector>

namespace qorder {

enum class LevelKind {
  Energies,  // open spectrum
  Phases,    // eigenphases on the circle; the wrap-around gap is included
};

struct LevelStatistics {
  double mean_r = 0.0;
  std::size_t n_levels = 0;    // after removing degenerate copies
  std::size_t n_ratios = 0;
  std::size_t n_degenerate = 0;  // levels dropped for a gap below 1e-12
  std::size_t n_sectors = 0;
};

inline constexpr double kDegenerateGap = 1e-12;
inline constexpr std::size_t kMinLevels = 10;

// Mean adjacent-gap ratio r_n = min(d_n, d_{n+1}) / max(d_n, d_{n+1}).
// With sector labels each sector is treated separately and the sector means
// are averaged with weights equal to their level counts. Levels closer than
// 1e-12 to their predecessor are counted once and reported in n_degenerate.
// Throws StatisticsError with fewer than kMinLevels levels.
LevelStatistics level_spacing_r(std::span<const double> levels, std::span<const int> sector_labels = {},
                                LevelKind kind = LevelKind::Energies);

// Histogram of circuit angles reduced mod 2 pi. Rotations exp(-i phi/2 P)
// are Clifford exactly at the multiples of pi/2 listed in clifford_angles.
struct AngleHistogram {
  std::vector<double> bin_edges;  // n_bins + 1 edges over [0, 2 pi]
  std::vector<int> counts;
  std::vector<double> clifford_angles;
  // Mean circular distance to the nearest Clifford angle, in [0, pi/4].
  double mean_clifford_distance = 0.0;
};

AngleHistogram clifford_angle_histogram(std::span<const double> params, int n_bins);

}  // namespace qorder
