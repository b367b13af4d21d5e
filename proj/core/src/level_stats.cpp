#include "qorder/level_stats.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <numbers>

#include "qorder/error.hpp"

namespace qorder {
namespace {

struct SectorResult {
  double sum_r = 0.0;
  std::size_t n_ratios = 0;
  std::size_t n_levels = 0;
  std::size_t n_degenerate = 0;
};

SectorResult sector_ratios(std::vector<double> levels, LevelKind kind) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  SectorResult out;
  if (kind == LevelKind::Phases) {
    for (double& p : levels) {
      p = std::remainder(p, two_pi);
      if (p <= -std::numbers::pi) p += two_pi;
    }
  }
  std::sort(levels.begin(), levels.end());
  std::vector<double> distinct;
  for (double e : levels) {
    if (!distinct.empty() && e - distinct.back() < kDegenerateGap) {
      ++out.n_degenerate;
    } else {
      distinct.push_back(e);
    }
  }
  if (kind == LevelKind::Phases && distinct.size() > 1 && distinct.front() + two_pi - distinct.back() < kDegenerateGap) {
    distinct.pop_back();
    ++out.n_degenerate;
  }
  out.n_levels = distinct.size();

  std::vector<double> gaps;
  for (std::size_t k = 1; k < distinct.size(); ++k) gaps.push_back(distinct[k] - distinct[k - 1]);
  const bool circular = kind == LevelKind::Phases && distinct.size() > 2;
  if (circular) gaps.push_back(distinct.front() + two_pi - distinct.back());
  if (gaps.size() < 2) return out;

  const std::size_t n_ratio = circular ? gaps.size() : gaps.size() - 1;
  for (std::size_t k = 0; k < n_ratio; ++k) {
    const double a = gaps[k];
    const double b = gaps[(k + 1) % gaps.size()];
    out.sum_r += std::min(a, b) / std::max(a, b);
    ++out.n_ratios;
  }
  return out;
}

}  // namespace

LevelStatistics level_spacing_r(std::span<const double> levels, std::span<const int> sector_labels, LevelKind kind) {
  if (!sector_labels.empty() && sector_labels.size() != levels.size()) {
    throw ArgumentError("one sector label per level required");
  }
  std::map<int, std::vector<double>> sectors;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    sectors[sector_labels.empty() ? 0 : sector_labels[k]].push_back(levels[k]);
  }

  LevelStatistics stats;
  double weighted = 0.0;
  std::size_t weight = 0;
  for (auto& [label, values] : sectors) {
    const SectorResult r = sector_ratios(std::move(values), kind);
    stats.n_levels += r.n_levels;
    stats.n_ratios += r.n_ratios;
    stats.n_degenerate += r.n_degenerate;
    if (r.n_ratios == 0) continue;
    weighted += static_cast<double>(r.n_levels) * (r.sum_r / static_cast<double>(r.n_ratios));
    weight += r.n_levels;
    ++stats.n_sectors;
  }
  if (stats.n_levels < kMinLevels || weight == 0) {
    throw StatisticsError("level statistics need at least " + std::to_string(kMinLevels) + " distinct levels, got " +
                          std::to_string(stats.n_levels));
  }
  if (stats.n_degenerate > 0) {
    std::clog << "qorder: excluded " << stats.n_degenerate << " degenerate levels from r statistics\n";
  }
  stats.mean_r = weighted / static_cast<double>(weight);
  return stats;
}

AngleHistogram clifford_angle_histogram(std::span<const double> params, int n_bins) {
  if (n_bins < 1) throw ArgumentError("histogram needs at least one bin");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  constexpr double quarter = 0.5 * std::numbers::pi;
  AngleHistogram h;
  h.clifford_angles = {0.0, quarter, std::numbers::pi, 3.0 * quarter};
  h.counts.assign(static_cast<std::size_t>(n_bins), 0);
  for (int k = 0; k <= n_bins; ++k) h.bin_edges.push_back(two_pi * k / n_bins);

  double distance = 0.0;
  for (double p : params) {
    double a = std::fmod(p, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;
    auto bin = static_cast<int>(a / two_pi * n_bins);
    h.counts[static_cast<std::size_t>(std::clamp(bin, 0, n_bins - 1))] += 1;
    distance += std::abs(a - std::round(a / quarter) * quarter);
  }
  if (!params.empty()) h.mean_clifford_distance = distance / static_cast<double>(params.size());
  return h;
}

}  // namespace qorder
