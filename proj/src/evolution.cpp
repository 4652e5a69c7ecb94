#include "focklat/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace focklat {

namespace {

void check_same_space(const Basis& a, const Basis& b, const char* what) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(what) + ": basis mismatch, (N=" +
                                    std::to_string(a.photons()) + ", M=" +
                                    std::to_string(a.modes()) + ") vs (N=" +
                                    std::to_string(b.photons()) + ", M=" +
                                    std::to_string(b.modes()) + ")");
    }
}

void check_grid(const std::vector<double>& z_grid) {
    if (z_grid.empty()) {
        throw std::invalid_argument("z grid must not be empty");
    }
    for (std::size_t r = 0; r + 1 < z_grid.size(); ++r) {
        if (!(z_grid[r] < z_grid[r + 1])) {
            throw std::invalid_argument("z grid must be strictly ascending");
        }
    }
}

} // namespace

StateVector::StateVector(Basis basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::fock(const Basis& basis, const FockState& state) {
    Eigen::VectorXcd amplitudes =
        Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    amplitudes(static_cast<Eigen::Index>(basis.index_of(state)) - 1) = 1.0;
    return StateVector(basis, std::move(amplitudes));
}

StateVector StateVector::superposition(const Basis& basis, Eigen::VectorXcd amplitudes) {
    if (amplitudes.size() != static_cast<Eigen::Index>(basis.size())) {
        throw std::invalid_argument("amplitude vector length " + std::to_string(amplitudes.size()) +
                                    " does not match the basis size " +
                                    std::to_string(basis.size()));
    }
    const double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw std::invalid_argument("cannot normalize a zero amplitude vector");
    }
    if (std::abs(norm - 1.0) > 1e-9) {
        std::cerr << "focklat: warning: renormalizing an initial state of norm " << norm << "\n";
    }
    return StateVector(basis, amplitudes / norm);
}

Eigen::VectorXd StateVector::probabilities() const {
    return amplitudes_.cwiseAbs2();
}

std::complex<double> StateVector::overlap(const StateVector& other) const {
    check_same_space(basis_, other.basis_, "overlap");
    return amplitudes_.dot(other.amplitudes_);
}

StateVector evolve(const StateVector& psi0, double z, const MultiPhotonEigensystem& eigensystem) {
    check_same_space(psi0.basis(), eigensystem.basis(), "evolve");
    const Eigen::MatrixXd& c = eigensystem.coefficients();

    // Project onto the eigenbasis, attach the phases, and map back. The
    // coefficient matrix is real, so the complex work splits into two real
    // products per direction.
    const Eigen::VectorXd re = c.transpose() * psi0.amplitudes().real();
    const Eigen::VectorXd im = c.transpose() * psi0.amplitudes().imag();
    Eigen::VectorXcd projected(re.size());
    for (Eigen::Index k = 0; k < re.size(); ++k) {
        const std::complex<double> phase = std::polar(1.0, -eigensystem.values()(k) * z);
        projected(k) = phase * std::complex<double>(re(k), im(k));
    }
    const Eigen::VectorXd out_re = c * projected.real();
    const Eigen::VectorXd out_im = c * projected.imag();
    Eigen::VectorXcd amplitudes(out_re.size());
    amplitudes.real() = out_re;
    amplitudes.imag() = out_im;
    return StateVector(psi0.basis(), std::move(amplitudes));
}

ProbabilityTrace probability_trace(const StateVector& psi0, const std::vector<double>& z_grid,
                                   const MultiPhotonEigensystem& eigensystem) {
    check_same_space(psi0.basis(), eigensystem.basis(), "probability_trace");
    check_grid(z_grid);
    ProbabilityTrace trace{psi0.basis(), z_grid,
                           Eigen::MatrixXd(static_cast<Eigen::Index>(z_grid.size()),
                                           static_cast<Eigen::Index>(psi0.basis().size()))};
    for (std::size_t r = 0; r < z_grid.size(); ++r) {
        trace.probabilities.row(static_cast<Eigen::Index>(r)) =
            evolve(psi0, z_grid[r], eigensystem).probabilities().transpose();
    }
    return trace;
}

LatticeSpec dark_state_spec() {
    const double k = 1.0 / std::numbers::sqrt2;
    return LatticeSpec::chain({0.0, 0.0, 0.0}, {k, k});
}

StateVector dark_state(const LatticeSpec& spec) {
    const double k = 1.0 / std::numbers::sqrt2;
    const bool matches = spec.modes() == 3 && spec.all_beta_zero() &&
                         std::abs(spec.kappa()(0, 1) - k) <= 1e-12 &&
                         std::abs(spec.kappa()(1, 2) - k) <= 1e-12 &&
                         spec.kappa()(0, 2) == 0.0;
    if (!matches) {
        throw std::invalid_argument(
            "dark state lives in the balanced trimer: M=3, beta=0, kappa=1/sqrt(2)");
    }
    const MultiPhotonEigensystem eigensystem = multi_photon_eigensystem(2, spec);
    // Equal superposition of the K~=6 and K~=12 eigenstates (indices 3 and 5).
    Eigen::VectorXcd amplitudes =
        ((eigensystem.coefficient_vector(3) + eigensystem.coefficient_vector(5)) /
         std::numbers::sqrt2)
            .cast<std::complex<double>>();
    return StateVector::superposition(eigensystem.basis(), std::move(amplitudes));
}

ProbabilityTrace dark_state_trace(const std::vector<double>& z_grid) {
    const LatticeSpec spec = dark_state_spec();
    const MultiPhotonEigensystem eigensystem = multi_photon_eigensystem(2, spec);
    return probability_trace(dark_state(spec), z_grid, eigensystem);
}

SectorMixture sector_mixture(MixtureKind kind, std::complex<double> parameter,
                             double tail_threshold, int modes, std::vector<int> injection) {
    if (!(tail_threshold > 0.0 && tail_threshold < 1.0)) {
        throw std::invalid_argument("tail threshold must lie in (0, 1)");
    }
    if (modes < 1) {
        throw std::invalid_argument("mixture needs at least one waveguide");
    }

    SectorMixture mixture;
    mixture.kind = kind;
    mixture.parameter = parameter;

    const auto occupations_for = [&](int photons) -> FockState {
        std::vector<int> occ(static_cast<std::size_t>(modes), 0);
        if (kind == MixtureKind::coherent) {
            occ[static_cast<std::size_t>(injection[0]) - 1] = photons;
        } else {
            occ[static_cast<std::size_t>(injection[0]) - 1] = photons / 2;
            occ[static_cast<std::size_t>(injection[1]) - 1] = photons / 2;
        }
        return FockState(std::move(occ));
    };

    if (kind == MixtureKind::coherent) {
        if (injection.empty()) injection = {1};
        if (injection.size() != 1 || injection[0] < 1 || injection[0] > modes) {
            throw std::invalid_argument("coherent injection takes one mode in 1..M");
        }
        const double mean = std::norm(parameter);  // |alpha|^2
        double weight = std::exp(-mean);           // Poisson, N = 0
        double cumulative = 0.0;
        for (int n = 0;; ++n) {
            cumulative += weight;
            mixture.sectors.push_back(
                {n, weight, n == 0 ? std::nullopt : std::optional<FockState>(occupations_for(n))});
            if (1.0 - cumulative <= tail_threshold) break;
            if (n > 100000) {
                throw std::runtime_error("coherent sector expansion failed to converge");
            }
            weight *= mean / (n + 1);
        }
        mixture.tail = std::max(0.0, 1.0 - cumulative);
    } else {
        if (injection.empty()) injection = {1, 2};
        if (injection.size() != 2 || injection[0] < 1 || injection[0] > modes || injection[1] < 1 ||
            injection[1] > modes || injection[0] == injection[1]) {
            throw std::invalid_argument("squeezed injection takes two distinct modes in 1..M");
        }
        const double xi2 = std::norm(parameter);  // |xi|^2
        if (xi2 >= 1.0) {
            throw std::invalid_argument("two-mode squeezing requires |xi| < 1");
        }
        // Sector 2n carries (1 - |xi|^2) |xi|^(2n); the geometric tail past n
        // is |xi|^(2(n+1)).
        double weight = 1.0 - xi2;
        double tail = 1.0;
        for (int n = 0;; ++n) {
            tail *= xi2;
            mixture.sectors.push_back(
                {2 * n, weight,
                 n == 0 ? std::nullopt : std::optional<FockState>(occupations_for(2 * n))});
            if (tail <= tail_threshold) break;
            weight *= xi2;
        }
        mixture.tail = tail;
    }
    return mixture;
}

std::vector<SectorTrace> parallel_walk(const SectorMixture& mixture, const LatticeSpec& spec,
                                       const std::vector<double>& z_grid,
                                       std::uint64_t basis_cap) {
    check_grid(z_grid);
    std::vector<SectorTrace> result;
    for (const MixtureSector& sector : mixture.sectors) {
        if (!sector.initial.has_value()) continue;  // vacuum carries weight only
        if (sector.initial->modes() != spec.modes()) {
            throw std::invalid_argument("mixture and lattice disagree on the mode count");
        }
        try {
            const MultiPhotonEigensystem eigensystem =
                multi_photon_eigensystem(sector.photons, spec, basis_cap);
            const StateVector psi0 = StateVector::fock(eigensystem.basis(), *sector.initial);
            result.push_back({sector.photons, sector.weight,
                              probability_trace(psi0, z_grid, eigensystem)});
        } catch (const std::length_error& e) {
            throw std::length_error("sector N=" + std::to_string(sector.photons) + ": " + e.what());
        }
    }
    return result;
}

} // namespace focklat
