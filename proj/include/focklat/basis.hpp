#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace focklat {

/// Default guardrail on the number of basis states a single build may allocate.
inline constexpr std::uint64_t kDefaultBasisCap = 1'000'000;

/// Largest pseudo-energy that is guaranteed exact: constructions reject any
/// (N, M) whose top state N*(N+1)^(M-1) would reach 2^63, so signed
/// pseudo-energy differences never overflow.
inline constexpr std::uint64_t kMaxPseudoEnergy = (std::uint64_t{1} << 63) - 1;

/// Number of N-photon-M-mode Fock states, binomial(N+M-1, N).
/// Throws std::invalid_argument for N < 1 or M < 1 and std::length_error
/// when the count exceeds `basis_cap`.
std::uint64_t dimension(int photons, int modes, std::uint64_t basis_cap = kDefaultBasisCap);

/**
 Occupation-number list (n_1, ..., n_M) of a photon-number basis state.

 Valid states have at least one mode and at least one photon; the photon
 number N is the occupation sum.
 */
class FockState {
public:
    FockState() = default;
    explicit FockState(std::vector<int> occupations);

    int modes() const { return static_cast<int>(occupations_.size()); }
    int photons() const;
    int occupation(int mode) const;       ///< 1-based mode index
    const std::vector<int>& occupations() const { return occupations_; }

    /// "n1-n2-...-nM"
    std::string label(char separator = '-') const;

    friend bool operator==(const FockState&, const FockState&) = default;
    friend auto operator<=>(const FockState&, const FockState&) = default;

private:
    std::vector<int> occupations_;
};

/// The occupation list read as a base-(N+1) numeral with n_1 least
/// significant: K = sum_m (N+1)^(m-1) n_m.
std::uint64_t pseudo_energy(const FockState& state);

/// Inverse digit expansion: n_m = (K / (N+1)^(m-1)) mod (N+1).
/// Throws if K is out of range or its digits do not sum to `photons`.
FockState decode(std::uint64_t K, int photons, int modes);

/// Signed pseudo-energy change when one photon tunnels from mode j to mode i:
/// (N+1)^(i-1) - (N+1)^(j-1). Mode indices are 1-based; i == j is rejected.
std::int64_t exchange_energy(int mode_i, int mode_j, int photons);

struct BasisEntry {
    std::uint64_t K = 0;
    FockState state;
};

/**
 The N-photon-M-mode Fock basis sorted by ascending pseudo-energy.

 Positions define the basis index nu = 1..N_F used throughout the library;
 all index-valued interfaces are 1-based.
 */
class Basis {
public:
    Basis(int photons, int modes, std::uint64_t basis_cap = kDefaultBasisCap);

    int photons() const { return photons_; }
    int modes() const { return modes_; }
    std::size_t size() const { return entries_.size(); }

    const std::vector<BasisEntry>& entries() const { return entries_; }
    const BasisEntry& entry(std::size_t nu) const;   ///< 1-based
    const FockState& state(std::size_t nu) const { return entry(nu).state; }
    std::uint64_t pseudo_energy(std::size_t nu) const { return entry(nu).K; }

    /// 1-based position of K in the ordering; throws if K labels no state.
    std::size_t index_of(std::uint64_t K) const;
    std::size_t index_of(const FockState& state) const;

    /// Bases agree iff they describe the same (N, M) space.
    friend bool operator==(const Basis& a, const Basis& b) {
        return a.photons_ == b.photons_ && a.modes_ == b.modes_;
    }

private:
    int photons_ = 0;
    int modes_ = 0;
    std::vector<BasisEntry> entries_;
};

} // namespace focklat
