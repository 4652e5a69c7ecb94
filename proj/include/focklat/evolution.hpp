#pragma once

#include "focklat/spectral.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace focklat {

/**
 Normalized amplitude vector over a pseudo-energy-ordered basis.

 Immutable; factories normalize on construction and warn on stderr when a
 hand-entered superposition misses unit norm by more than 1e-9.
 */
class StateVector {
public:
    static StateVector fock(const Basis& basis, const FockState& state);
    static StateVector superposition(const Basis& basis, Eigen::VectorXcd amplitudes);

    const Basis& basis() const { return basis_; }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    Eigen::VectorXd probabilities() const;
    double norm() const { return amplitudes_.norm(); }

    /// <this|other>
    std::complex<double> overlap(const StateVector& other) const;

private:
    StateVector(Basis basis, Eigen::VectorXcd amplitudes);

    // Evolution is exactly unitary and must not renormalize, so norm drift
    // stays observable.
    friend StateVector evolve(const StateVector&, double, const MultiPhotonEigensystem&);

    Basis basis_;
    Eigen::VectorXcd amplitudes_;
};

/// Exact evolution psi(z) = sum_nu e^{-i lambda_nu z} <K~_nu|psi0> |K~_nu>
/// through the eigendecomposition; z is the normalized coordinate kappa * Z.
StateVector evolve(const StateVector& psi0, double z, const MultiPhotonEigensystem& eigensystem);

struct ProbabilityTrace {
    Basis basis;
    std::vector<double> z;
    Eigen::MatrixXd probabilities;  ///< row r = |psi(z_r)|^2 in basis order
};

/// Row r of the result holds |<K_nu | U(z_r) | psi0>|^2; the grid must be
/// non-empty and ascending.
ProbabilityTrace probability_trace(const StateVector& psi0, const std::vector<double>& z_grid,
                                   const MultiPhotonEigensystem& eigensystem);

/// The balanced trimer that hosts the two-photon dark state:
/// M = 3, beta = 0, kappa_1 = kappa_2 = 1/sqrt(2).
LatticeSpec dark_state_spec();

/// The stationary-amplitude superposition (|K~_3> + |K~_5>)/sqrt(2) of the
/// balanced trimer, in the Fock basis. Rejects any other spec.
StateVector dark_state(const LatticeSpec& spec);

/// Convenience trace of the dark state under its own spec.
ProbabilityTrace dark_state_trace(const std::vector<double>& z_grid);

enum class MixtureKind { coherent, two_mode_squeezed };

struct MixtureSector {
    int photons = 0;
    double weight = 0.0;
    std::optional<FockState> initial;  ///< nullopt for the vacuum sector
};

/**
 Photon-number-sector decomposition of a coherent or two-mode-squeezed-vacuum
 input, truncated at the smallest sector count whose tail mass is at or below
 the requested threshold. The vacuum sector carries weight but no dynamics.
 */
struct SectorMixture {
    MixtureKind kind = MixtureKind::coherent;
    std::complex<double> parameter;
    double tail = 0.0;
    std::vector<MixtureSector> sectors;  ///< ascending photon number, from 0
};

/// `injection` lists 1-based waveguides receiving the photons: one mode for
/// coherent input (default {1}), two distinct modes for squeezed input
/// (default {1, 2}). Squeezed input requires |xi| < 1.
SectorMixture sector_mixture(MixtureKind kind, std::complex<double> parameter,
                             double tail_threshold, int modes,
                             std::vector<int> injection = {});

struct SectorTrace {
    int photons = 0;
    double weight = 0.0;
    ProbabilityTrace trace;
};

/// Evolves every photon-carrying sector independently under the same array;
/// photon number is conserved, so sectors never mix. Ordered by sector N.
std::vector<SectorTrace> parallel_walk(const SectorMixture& mixture, const LatticeSpec& spec,
                                       const std::vector<double>& z_grid,
                                       std::uint64_t basis_cap = kDefaultBasisCap);

} // namespace focklat
