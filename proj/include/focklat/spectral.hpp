#pragma once

#include "focklat/hamiltonian.hpp"

#include <cstdint>
#include <vector>

namespace focklat {

/// Eigenvalues ascending; column n of `vectors` is the n-th eigenvector with
/// the sign fixed so its first nonzero component is positive.
struct SingleParticleEigensystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

SingleParticleEigensystem single_particle_eigensystem(const LatticeSpec& spec);

/// Expands the product state prod_m (sum_k u^(m)_k a_k^dagger)^{n_m} |0>
/// over the pseudo-energy-ordered Fock basis and normalizes it to unit norm.
/// `mode_occupations` counts photons per single-particle mode and must total
/// the basis photon number.
Eigen::VectorXd expand_product(const FockState& mode_occupations,
                               const SingleParticleEigensystem& eigensystem,
                               const Basis& basis);

struct ProductEigenstate {
    std::uint64_t K = 0;      ///< pseudo-energy of the mode-occupation pattern
    FockState mode_occupations;
    double value = 0.0;       ///< eigenvalue: occupation-weighted sum of single-particle values
};

/**
 The N-photon eigensystem assembled from products of single-particle modes,
 one eigenstate per mode-occupation pattern, ordered by the pattern's
 pseudo-energy. Column nu of `coefficients` holds the nu-th eigenvector over
 the Fock basis.
 */
class MultiPhotonEigensystem {
public:
    MultiPhotonEigensystem(Basis basis, std::vector<ProductEigenstate> states,
                           Eigen::VectorXd values, Eigen::MatrixXd coefficients);

    const Basis& basis() const { return basis_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<ProductEigenstate>& states() const { return states_; }
    const Eigen::VectorXd& values() const { return values_; }
    const Eigen::MatrixXd& coefficients() const { return coefficients_; }

    Eigen::VectorXd coefficient_vector(std::size_t nu) const;  ///< 1-based

private:
    Basis basis_;
    std::vector<ProductEigenstate> states_;
    Eigen::VectorXd values_;
    Eigen::MatrixXd coefficients_;
};

MultiPhotonEigensystem multi_photon_eigensystem(int photons, const LatticeSpec& spec,
                                                std::uint64_t basis_cap = kDefaultBasisCap);

/// Same construction from a precomputed single-particle eigensystem and basis.
MultiPhotonEigensystem multi_photon_eigensystem(const SingleParticleEigensystem& eigensystem,
                                                const Basis& basis);

struct Eigensystem {
    Eigen::VectorXd values;   ///< ascending
    Eigen::MatrixXd vectors;  ///< orthonormal columns, sign-fixed
};

/// Dense symmetric eigensolve of the full matrix representation; the oracle
/// the product construction is benchmarked against.
Eigensystem direct_diagonalize(const EffectiveHamiltonian& hamiltonian,
                               std::size_t dense_cap = kDefaultDenseCap);

struct BenchmarkReport {
    int photons = 0;
    int modes = 0;
    std::size_t dimension = 0;
    int repeats = 0;
    double product_seconds = 0.0;         ///< min over repeats
    double direct_seconds = 0.0;          ///< min over repeats
    double product_seconds_median = 0.0;
    double direct_seconds_median = 0.0;
    double spectrum_max_abs_diff = 0.0;   ///< sorted-spectrum disagreement
};

/// Times the product construction (given the single-particle eigensystem and
/// the basis) against dense direct diagonalization of the prebuilt matrix,
/// and reports how far the two sorted spectra disagree.
BenchmarkReport benchmark_eigensystems(int photons, const LatticeSpec& spec, int repeats,
                                       std::uint64_t basis_cap = kDefaultBasisCap);

} // namespace focklat
