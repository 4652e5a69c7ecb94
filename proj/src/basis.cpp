#include "focklat/basis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace focklat {

namespace {

// (photons+1)^exponent, or throws when the result (or photons*result) would
// leave the exact range.
std::uint64_t checked_base_power(int photons, int exponent) {
    const auto base = static_cast<std::uint64_t>(photons) + 1;
    std::uint64_t result = 1;
    for (int e = 0; e < exponent; ++e) {
        if (result > kMaxPseudoEnergy / base) {
            throw std::invalid_argument(
                "pseudo-energy out of exact integer range: (" + std::to_string(photons) +
                "+1)^" + std::to_string(exponent) + " >= 2^63");
        }
        result *= base;
    }
    return result;
}

void check_counts(int photons, int modes) {
    if (photons < 1) {
        throw std::invalid_argument("photon count must be >= 1, got " + std::to_string(photons));
    }
    if (modes < 1) {
        throw std::invalid_argument("mode count must be >= 1, got " + std::to_string(modes));
    }
}

// Rejects (N, M) whose largest pseudo-energy N*(N+1)^(M-1) reaches 2^63.
void check_encoding_range(int photons, int modes) {
    const std::uint64_t top_power = checked_base_power(photons, modes - 1);
    if (top_power > kMaxPseudoEnergy / static_cast<std::uint64_t>(photons)) {
        throw std::invalid_argument(
            "pseudo-energy out of exact integer range for N=" + std::to_string(photons) +
            ", M=" + std::to_string(modes));
    }
}

} // namespace

std::uint64_t dimension(int photons, int modes, std::uint64_t basis_cap) {
    check_counts(photons, modes);
    // binomial(N+M-1, k) with k = min(N, M-1); the running product is exact
    // because each prefix is itself a binomial coefficient.
    const std::uint64_t n = static_cast<std::uint64_t>(photons) + modes - 1;
    const std::uint64_t k = std::min<std::uint64_t>(photons, modes - 1);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const unsigned __int128 wide = static_cast<unsigned __int128>(result) * (n - k + i);
        result = static_cast<std::uint64_t>(wide / i);
        if (wide / i > basis_cap) {
            throw std::length_error(
                "basis size for N=" + std::to_string(photons) + ", M=" + std::to_string(modes) +
                " exceeds the cap of " + std::to_string(basis_cap) + " states");
        }
    }
    return result;
}

FockState::FockState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
    if (occupations_.empty()) {
        throw std::invalid_argument("Fock state needs at least one mode");
    }
    long long total = 0;
    for (int n : occupations_) {
        if (n < 0) {
            throw std::invalid_argument("occupation numbers must be non-negative");
        }
        total += n;
    }
    if (total < 1) {
        throw std::invalid_argument("Fock state needs at least one photon");
    }
}

int FockState::photons() const {
    return std::accumulate(occupations_.begin(), occupations_.end(), 0);
}

int FockState::occupation(int mode) const {
    if (mode < 1 || mode > modes()) {
        throw std::invalid_argument("mode index " + std::to_string(mode) + " out of range 1.." +
                                    std::to_string(modes()));
    }
    return occupations_[static_cast<std::size_t>(mode) - 1];
}

std::string FockState::label(char separator) const {
    std::ostringstream out;
    for (std::size_t m = 0; m < occupations_.size(); ++m) {
        if (m != 0) out << separator;
        out << occupations_[m];
    }
    return out.str();
}

std::uint64_t pseudo_energy(const FockState& state) {
    const int photons = state.photons();
    check_encoding_range(photons, state.modes());
    const auto base = static_cast<std::uint64_t>(photons) + 1;
    std::uint64_t K = 0;
    std::uint64_t weight = 1;
    for (int m = 0; m < state.modes(); ++m) {
        K += weight * static_cast<std::uint64_t>(state.occupations()[static_cast<std::size_t>(m)]);
        if (m + 1 < state.modes()) weight *= base;
    }
    return K;
}

FockState decode(std::uint64_t K, int photons, int modes) {
    check_counts(photons, modes);
    check_encoding_range(photons, modes);
    const auto base = static_cast<std::uint64_t>(photons) + 1;
    const std::uint64_t k_max =
        static_cast<std::uint64_t>(photons) * checked_base_power(photons, modes - 1);
    if (K < static_cast<std::uint64_t>(photons) || K > k_max) {
        throw std::invalid_argument("pseudo-energy " + std::to_string(K) + " outside [" +
                                    std::to_string(photons) + ", " + std::to_string(k_max) + "]");
    }
    std::vector<int> occupations(static_cast<std::size_t>(modes));
    std::uint64_t rest = K;
    long long digit_sum = 0;
    for (int m = 0; m < modes; ++m) {
        const auto digit = static_cast<int>(rest % base);
        occupations[static_cast<std::size_t>(m)] = digit;
        digit_sum += digit;
        rest /= base;
    }
    if (rest != 0 || digit_sum != photons) {
        throw std::invalid_argument("pseudo-energy " + std::to_string(K) + " does not label an N=" +
                                    std::to_string(photons) + " state (digit sum " +
                                    std::to_string(digit_sum) + ")");
    }
    return FockState(std::move(occupations));
}

std::int64_t exchange_energy(int mode_i, int mode_j, int photons) {
    if (photons < 1) {
        throw std::invalid_argument("photon count must be >= 1, got " + std::to_string(photons));
    }
    if (mode_i < 1 || mode_j < 1) {
        throw std::invalid_argument("mode indices are 1-based");
    }
    if (mode_i == mode_j) {
        throw std::invalid_argument("exchange energy needs two distinct modes");
    }
    const std::uint64_t wi = checked_base_power(photons, mode_i - 1);
    const std::uint64_t wj = checked_base_power(photons, mode_j - 1);
    return static_cast<std::int64_t>(wi) - static_cast<std::int64_t>(wj);
}

Basis::Basis(int photons, int modes, std::uint64_t basis_cap)
    : photons_(photons), modes_(modes) {
    const std::uint64_t count = dimension(photons, modes, basis_cap);
    check_encoding_range(photons, modes);

    entries_.reserve(static_cast<std::size_t>(count));
    // Compositions of N over M slots in lexicographic occupation order,
    // starting from (N, 0, ..., 0).
    std::vector<int> occ(static_cast<std::size_t>(modes), 0);
    occ[0] = photons;
    while (true) {
        FockState state(occ);
        entries_.push_back({focklat::pseudo_energy(state), std::move(state)});
        // Find the rightmost slot before the last that still holds photons,
        // move one photon right, and flush everything after it back.
        int pivot = modes - 2;
        while (pivot >= 0 && occ[static_cast<std::size_t>(pivot)] == 0) --pivot;
        if (pivot < 0) break;
        const int tail = occ[static_cast<std::size_t>(modes) - 1];
        occ[static_cast<std::size_t>(pivot)] -= 1;
        occ[static_cast<std::size_t>(modes) - 1] = 0;
        occ[static_cast<std::size_t>(pivot) + 1] = tail + 1;
        for (int m = pivot + 2; m < modes; ++m) occ[static_cast<std::size_t>(m)] = 0;
    }

    std::sort(entries_.begin(), entries_.end(),
              [](const BasisEntry& a, const BasisEntry& b) { return a.K < b.K; });

    if (entries_.size() != count) {
        throw std::runtime_error("basis enumeration mismatch: got " +
                                 std::to_string(entries_.size()) + " states, expected " +
                                 std::to_string(count));
    }
}

const BasisEntry& Basis::entry(std::size_t nu) const {
    if (nu < 1 || nu > entries_.size()) {
        throw std::invalid_argument("basis index " + std::to_string(nu) + " out of range 1.." +
                                    std::to_string(entries_.size()));
    }
    return entries_[nu - 1];
}

std::size_t Basis::index_of(std::uint64_t K) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), K,
                                     [](const BasisEntry& e, std::uint64_t k) { return e.K < k; });
    if (it == entries_.end() || it->K != K) {
        throw std::invalid_argument("pseudo-energy " + std::to_string(K) +
                                    " not present in the basis");
    }
    return static_cast<std::size_t>(it - entries_.begin()) + 1;
}

std::size_t Basis::index_of(const FockState& state) const {
    if (state.modes() != modes_ || state.photons() != photons_) {
        throw std::invalid_argument("state |" + state.label() + "> does not belong to the (N=" +
                                    std::to_string(photons_) + ", M=" + std::to_string(modes_) +
                                    ") basis");
    }
    return index_of(focklat::pseudo_energy(state));
}

} // namespace focklat
