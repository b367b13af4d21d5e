#include "qorder/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "qorder/circuit.hpp"
#include "qorder/error.hpp"

namespace qorder {

double SpectralSupport::total_weight() const noexcept {
  double acc = 0.0;
  for (const auto& c : components) acc += c.weight;
  return acc;
}

double SpectralSupport::mean_energy() const noexcept {
  double acc = 0.0;
  for (const auto& c : components) acc += c.weight * c.energy;
  return acc;
}

double SpectralSupport::weight_in_window(double lo, double hi) const noexcept {
  double acc = 0.0;
  for (const auto& c : components) {
    if (c.energy >= lo && c.energy <= hi) acc += c.weight;
  }
  return acc;
}

std::vector<std::size_t> SpectralSupport::dominant_components(double fraction) const {
  std::vector<std::size_t> order(components.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return components[a].weight > components[b].weight; });
  std::vector<std::size_t> out;
  double acc = 0.0;
  for (std::size_t k : order) {
    if (acc >= fraction) break;
    out.push_back(k);
    acc += components[k].weight;
  }
  return out;
}

SpectralSupport spectral_support(const StateVector& state, const EigenSystem& eig, const OrderObservable& observable) {
  if (state.n_qubits() != eig.n_qubits()) throw SizeError("spectral support: qubit count mismatch");
  observable.check(state.n_qubits());
  const auto c = eig.overlaps(state);
  SpectralSupport s;
  s.components.reserve(c.size());
  for (Eigen::Index n = 0; n < eig.size(); ++n) {
    const StateVector v = eig.eigenvector(n);
    const auto k = static_cast<std::size_t>(n);
    s.components.push_back({eig.energies()[n], std::norm(c[k]), std::arg(c[k]), observable.expectation(v)});
  }
  return s;
}

int EigenphaseSpectrum::modal_multiplicity() const noexcept {
  std::map<int, int> levels_by_multiplicity;
  for (const auto& c : clusters) levels_by_multiplicity[c.multiplicity] += c.multiplicity;
  int best = 0;
  int best_levels = -1;
  for (const auto& [m, levels] : levels_by_multiplicity) {
    if (levels > best_levels) {
      best = m;
      best_levels = levels;
    }
  }
  return best;
}

double EigenphaseSpectrum::fraction_with_multiplicity(int multiplicity) const noexcept {
  if (phases.empty()) return 0.0;
  int levels = 0;
  for (const auto& c : clusters) {
    if (c.multiplicity == multiplicity) levels += c.multiplicity;
  }
  return static_cast<double>(levels) / static_cast<double>(phases.size());
}

EigenphaseSpectrum cluster_phases(std::vector<double> phases, double tol) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (double& p : phases) {
    // Map onto the principal branch (-pi, pi].
    p = std::remainder(p, two_pi);
    if (p <= -std::numbers::pi) p += two_pi;
  }
  std::sort(phases.begin(), phases.end());
  EigenphaseSpectrum out;
  out.phases = phases;
  if (phases.empty()) return out;

  std::vector<std::vector<double>> groups{{phases.front()}};
  for (std::size_t k = 1; k < phases.size(); ++k) {
    if (phases[k] - phases[k - 1] <= tol) {
      groups.back().push_back(phases[k]);
    } else {
      groups.push_back({phases[k]});
    }
  }
  if (groups.size() > 1 && phases.front() + two_pi - phases.back() <= tol) {
    // Wrap-around at +-pi: fold the last group into the first.
    for (double p : groups.back()) groups.front().push_back(p - two_pi);
    groups.pop_back();
  }
  for (const auto& g : groups) {
    double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
    if (mean <= -std::numbers::pi) mean += two_pi;
    out.clusters.push_back({mean, static_cast<int>(g.size())});
  }
  return out;
}

namespace {

void check_unitary(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) throw MatrixError("unitary must be square");
  if (u.rows() > (Eigen::Index{1} << kMaxUnitaryQubits)) throw CapacityError("eigenphase spectrum limited to 2^12 levels");
  const double residual =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (residual > 1e-8) throw MatrixError("matrix is not unitary (residual " + std::to_string(residual) + ")");
}

std::vector<double> phases_of(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw MatrixError("eigenvalue solver failed");
  std::vector<double> phases(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index k = 0; k < m.rows(); ++k) phases[static_cast<std::size_t>(k)] = std::arg(solver.eigenvalues()[k]);
  return phases;
}

std::vector<std::uint64_t> group_masks(std::span<const PauliString> symmetries, int n_qubits) {
  std::vector<std::uint64_t> gens;
  for (const auto& s : symmetries) {
    if (s.z_mask() != 0 || s.x_mask() == 0 || s.coefficient() != cplx{1.0, 0.0}) {
      throw ArgumentError("sector resolution needs nontrivial X-type symmetry strings, got " + s.to_string());
    }
    check_sites(s, n_qubits);
    gens.push_back(s.x_mask());
  }
  // All 2^k products; generators must be independent over GF(2).
  std::vector<std::uint64_t> elems{0};
  for (std::uint64_t g : gens) {
    const std::size_t size = elems.size();
    for (std::size_t k = 0; k < size; ++k) elems.push_back(elems[k] ^ g);
  }
  std::vector<std::uint64_t> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("symmetry generators are not independent");
  }
  return elems;
}

}  // namespace

EigenphaseSpectrum eigenphase_spectrum(const Eigen::MatrixXcd& u, double tol) {
  check_unitary(u);
  return cluster_phases(phases_of(u), tol);
}

Eigen::MatrixXcd symmetry_sector_basis(int n_qubits, std::span<const PauliString> symmetries,
                                       std::span<const int> charges) {
  if (charges.size() != symmetries.size()) throw ArgumentError("one charge per symmetry generator required");
  const auto elems = group_masks(symmetries, n_qubits);
  // Character of group element e (built as a product of generators in bit
  // order of its index).
  std::vector<double> character(elems.size(), 1.0);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    for (std::size_t g = 0; g < charges.size(); ++g) {
      if ((e >> g) & 1u) character[e] *= charges[g];
    }
  }
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  const double norm = 1.0 / std::sqrt(static_cast<double>(elems.size()));
  std::vector<std::uint64_t> reps;
  for (std::uint64_t b = 0; b < dim; ++b) {
    bool minimal = true;
    for (std::uint64_t m : elems) {
      if ((b ^ m) < b) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(b);
  }
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(reps.size()));
  for (std::size_t col = 0; col < reps.size(); ++col) {
    for (std::size_t e = 0; e < elems.size(); ++e) {
      basis(static_cast<Eigen::Index>(reps[col] ^ elems[e]), static_cast<Eigen::Index>(col)) = norm * character[e];
    }
  }
  return basis;
}

std::vector<SectorPhases> sector_eigenphases(const Eigen::MatrixXcd& u, std::span<const PauliString> symmetries) {
  check_unitary(u);
  int n_qubits = 0;
  while ((Eigen::Index{1} << n_qubits) < u.rows()) ++n_qubits;
  if ((Eigen::Index{1} << n_qubits) != u.rows()) throw SizeError("unitary dimension is not a power of two");

  std::vector<SectorPhases> out;
  const std::size_t n_sectors = std::size_t{1} << symmetries.size();
  for (std::size_t s = 0; s < n_sectors; ++s) {
    std::vector<int> charges(symmetries.size());
    for (std::size_t g = 0; g < symmetries.size(); ++g) charges[g] = ((s >> g) & 1u) ? -1 : 1;
    const Eigen::MatrixXcd basis = symmetry_sector_basis(n_qubits, symmetries, charges);
    const Eigen::MatrixXcd block = basis.adjoint() * u * basis;
    out.push_back({charges, phases_of(block)});
  }
  return out;
}

}  // namespace qorder
