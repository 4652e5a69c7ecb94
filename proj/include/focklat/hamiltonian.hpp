#pragma once

#include "focklat/basis.hpp"
#include "focklat/lattice.hpp"

#include <cstdint>
#include <vector>

namespace focklat {

/// Dense views and adjacency matrices are refused above this dimension
/// unless the caller raises the limit explicitly.
inline constexpr std::size_t kDefaultDenseCap = 4096;

/// <bra| H |ket> for the array Hamiltonian: sum_m beta_m n_m on the diagonal,
/// kappa_ij * sqrt((n_i + 1) n_j) when exactly one photon moves from mode j
/// to mode i, zero otherwise. Both states must share (N, M).
double matrix_element(const FockState& bra, const FockState& ket, const LatticeSpec& spec);

struct HamiltonianEntry {
    std::size_t mu = 0;  ///< row, 1-based
    std::size_t nu = 0;  ///< column, 1-based
    double value = 0.0;
};

struct Transition {
    std::size_t mu = 0;        ///< partner index, 1-based
    std::int64_t delta_K = 0;  ///< K_mu - K_nu
    double amplitude = 0.0;
};

/**
 Real symmetric N_F x N_F matrix H_mu_nu over the pseudo-energy-ordered basis.

 Stored as the sorted list of nonzero entries; row degree is O(M^2) while N_F
 grows combinatorially, so the sparse list is primary and the dense view is
 built on demand.
 */
class EffectiveHamiltonian {
public:
    EffectiveHamiltonian(int photons, LatticeSpec spec, Basis basis,
                         std::vector<HamiltonianEntry> entries);

    int photons() const { return photons_; }
    const LatticeSpec& spec() const { return spec_; }
    const Basis& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }

    /// Nonzero entries sorted by (mu, nu).
    const std::vector<HamiltonianEntry>& entries() const { return entries_; }

    double max_abs() const;

    Eigen::MatrixXd dense(std::size_t dense_cap = kDefaultDenseCap) const;

    /// All partners mu != nu with H_mu_nu != 0, ascending mu, each annotated
    /// with the signed pseudo-energy change K_mu - K_nu.
    std::vector<Transition> allowed_transitions(std::size_t nu) const;

private:
    int photons_;
    LatticeSpec spec_;
    Basis basis_;
    std::vector<HamiltonianEntry> entries_;
};

EffectiveHamiltonian build_hamiltonian(int photons, const LatticeSpec& spec,
                                       std::uint64_t basis_cap = kDefaultBasisCap);

/**
 Level/transition data behind a pseudo-energy term diagram: one level per
 Fock state in ascending K, one transition per unordered coupled pair
 labelled with the pseudo-exchange energy |Delta K| that drives it.
 */
struct TermDiagram {
    struct Level {
        std::size_t nu = 0;
        std::uint64_t K = 0;
        FockState state;
    };
    struct Pair {
        std::size_t nu = 0;        ///< lower index of the pair
        std::size_t mu = 0;        ///< higher index of the pair
        std::int64_t delta_K = 0;  ///< |K_mu - K_nu|
        double amplitude = 0.0;
    };

    std::vector<Level> levels;
    std::vector<Pair> transitions;
};

TermDiagram term_diagram(const EffectiveHamiltonian& hamiltonian);

} // namespace focklat
