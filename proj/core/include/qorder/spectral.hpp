#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qorder/exact_diag.hpp"
#include "qorder/objective.hpp"
#include "qorder/pauli.hpp"
#include "qorder/state_vector.hpp"

namespace qorder {

// Decomposition of a state in an energy eigenbasis, c_n = <E_n|psi>.
struct SpectralComponent {
  double energy;
  double weight;          // |c_n|^2
  double phase;           // arg c_n
  double diagonal_order;  // <E_n|O|E_n>
};

struct SpectralSupport {
  std::vector<SpectralComponent> components;  // ascending energy

  double total_weight() const noexcept;
  double mean_energy() const noexcept;
  // Weight carried by eigenstates with lo <= E_n <= hi.
  double weight_in_window(double lo, double hi) const noexcept;
  // Indices of the heaviest components whose cumulative weight first reaches
  // `fraction`, heaviest first.
  std::vector<std::size_t> dominant_components(double fraction) const;
};

SpectralSupport spectral_support(const StateVector& state, const EigenSystem& eig, const OrderObservable& observable);

// Eigenphases of a unitary, principal branch (-pi, pi], ascending, with
// degeneracy clusters.
struct PhaseCluster {
  double phase;
  int multiplicity;
};

struct EigenphaseSpectrum {
  std::vector<double> phases;
  std::vector<PhaseCluster> clusters;

  int modal_multiplicity() const noexcept;
  // Fraction of levels that sit in clusters of exactly `multiplicity`.
  double fraction_with_multiplicity(int multiplicity) const noexcept;
};

inline constexpr double kDefaultDegeneracyTolerance = 1e-6;

// Groups phases whose circular distance to a neighbour is <= tol. The result
// depends only on the multiset of phases, not their order.
EigenphaseSpectrum cluster_phases(std::vector<double> phases, double tol = kDefaultDegeneracyTolerance);

// Throws MatrixError unless ||U^dag U - 1||_max <= 1e-8, CapacityError above
// 2^12 rows.
EigenphaseSpectrum eigenphase_spectrum(const Eigen::MatrixXcd& u, double tol = kDefaultDegeneracyTolerance);

// Eigenphases of U restricted to each joint eigenspace of a set of commuting
// X-type symmetry strings (e.g. prod_i X_i, or the two sublattice parities).
struct SectorPhases {
  std::vector<int> charges;  // +1/-1 per symmetry generator
  std::vector<double> phases;
};

std::vector<SectorPhases> sector_eigenphases(const Eigen::MatrixXcd& u, std::span<const PauliString> symmetries);

// Orthonormal basis (columns) of the joint eigenspace with the given charges.
Eigen::MatrixXcd symmetry_sector_basis(int n_qubits, std::span<const PauliString> symmetries,
                                       std::span<const int> charges);

}  // namespace qorder
