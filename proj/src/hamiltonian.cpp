#include "focklat/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace focklat {

double matrix_element(const FockState& bra, const FockState& ket, const LatticeSpec& spec) {
    if (bra.modes() != spec.modes() || ket.modes() != spec.modes()) {
        throw std::invalid_argument("states and lattice disagree on the mode count");
    }
    if (bra.photons() != ket.photons()) {
        throw std::invalid_argument("matrix element between different photon numbers");
    }
    if (bra == ket) {
        double diagonal = 0.0;
        for (int m = 1; m <= ket.modes(); ++m) {
            diagonal += spec.beta()[static_cast<std::size_t>(m) - 1] * ket.occupation(m);
        }
        return diagonal;
    }
    // A nonzero off-diagonal element needs bra = ket with exactly one photon
    // moved: one mode up by one, one mode down by one.
    int up = 0, down = 0;
    for (int m = 1; m <= ket.modes(); ++m) {
        const int diff = bra.occupation(m) - ket.occupation(m);
        if (diff == 0) continue;
        if (diff == 1 && up == 0) {
            up = m;
        } else if (diff == -1 && down == 0) {
            down = m;
        } else {
            return 0.0;
        }
    }
    if (up == 0 || down == 0) return 0.0;
    const double coupling = spec.kappa()(up - 1, down - 1);
    if (coupling == 0.0) return 0.0;
    const auto product = static_cast<double>(
        static_cast<long long>(ket.occupation(up) + 1) * ket.occupation(down));
    return coupling * std::sqrt(product);
}

EffectiveHamiltonian::EffectiveHamiltonian(int photons, LatticeSpec spec, Basis basis,
                                           std::vector<HamiltonianEntry> entries)
    : photons_(photons), spec_(std::move(spec)), basis_(std::move(basis)),
      entries_(std::move(entries)) {}

double EffectiveHamiltonian::max_abs() const {
    double result = 0.0;
    for (const auto& e : entries_) result = std::max(result, std::abs(e.value));
    return result;
}

Eigen::MatrixXd EffectiveHamiltonian::dense(std::size_t dense_cap) const {
    const std::size_t n = dimension();
    if (n > dense_cap) {
        throw std::length_error("dense view of a " + std::to_string(n) + "x" + std::to_string(n) +
                                " Hamiltonian refused (cap " + std::to_string(dense_cap) + ")");
    }
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    for (const auto& e : entries_) {
        h(static_cast<Eigen::Index>(e.mu) - 1, static_cast<Eigen::Index>(e.nu) - 1) = e.value;
    }
    return h;
}

std::vector<Transition> EffectiveHamiltonian::allowed_transitions(std::size_t nu) const {
    if (nu < 1 || nu > dimension()) {
        throw std::invalid_argument("basis index " + std::to_string(nu) + " out of range 1.." +
                                    std::to_string(dimension()));
    }
    const std::int64_t k_nu = static_cast<std::int64_t>(basis_.pseudo_energy(nu));
    std::vector<Transition> result;
    for (const auto& e : entries_) {
        if (e.nu != nu || e.mu == nu) continue;
        const std::int64_t k_mu = static_cast<std::int64_t>(basis_.pseudo_energy(e.mu));
        result.push_back({e.mu, k_mu - k_nu, e.value});
    }
    std::sort(result.begin(), result.end(),
              [](const Transition& a, const Transition& b) { return a.mu < b.mu; });
    return result;
}

EffectiveHamiltonian build_hamiltonian(int photons, const LatticeSpec& spec,
                                       std::uint64_t basis_cap) {
    Basis basis(photons, spec.modes(), basis_cap);
    const int modes = spec.modes();

    std::vector<HamiltonianEntry> entries;
    for (std::size_t nu = 1; nu <= basis.size(); ++nu) {
        const FockState& ket = basis.state(nu);

        double diagonal = 0.0;
        for (int m = 1; m <= modes; ++m) {
            diagonal += spec.beta()[static_cast<std::size_t>(m) - 1] * ket.occupation(m);
        }
        if (diagonal != 0.0) entries.push_back({nu, nu, diagonal});

        for (int i = 1; i <= modes; ++i) {
            for (int j = 1; j <= modes; ++j) {
                if (i == j) continue;
                const double coupling = spec.kappa()(i - 1, j - 1);
                if (coupling == 0.0 || ket.occupation(j) == 0) continue;
                const std::uint64_t k_mu = static_cast<std::uint64_t>(
                    static_cast<std::int64_t>(basis.pseudo_energy(nu)) +
                    exchange_energy(i, j, photons));
                const std::size_t mu = basis.index_of(k_mu);
                const auto product = static_cast<double>(
                    static_cast<long long>(ket.occupation(i) + 1) * ket.occupation(j));
                entries.push_back({mu, nu, coupling * std::sqrt(product)});
            }
        }
    }

    std::sort(entries.begin(), entries.end(), [](const HamiltonianEntry& a, const HamiltonianEntry& b) {
        return a.mu != b.mu ? a.mu < b.mu : a.nu < b.nu;
    });

    return EffectiveHamiltonian(photons, spec, std::move(basis), std::move(entries));
}

TermDiagram term_diagram(const EffectiveHamiltonian& hamiltonian) {
    TermDiagram diagram;
    const Basis& basis = hamiltonian.basis();
    diagram.levels.reserve(basis.size());
    for (std::size_t nu = 1; nu <= basis.size(); ++nu) {
        diagram.levels.push_back({nu, basis.pseudo_energy(nu), basis.state(nu)});
    }
    for (const auto& e : hamiltonian.entries()) {
        if (e.nu >= e.mu) continue;  // keep each unordered pair once
        const auto delta = static_cast<std::int64_t>(basis.pseudo_energy(e.mu) -
                                                     basis.pseudo_energy(e.nu));
        diagram.transitions.push_back({e.nu, e.mu, delta, e.value});
    }
    std::sort(diagram.transitions.begin(), diagram.transitions.end(),
              [](const TermDiagram::Pair& a, const TermDiagram::Pair& b) {
                  return a.nu != b.nu ? a.nu < b.nu : a.mu < b.mu;
              });
    return diagram;
}

} // namespace focklat
