#include "focklat/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <utility>
#include <stdexcept>

namespace focklat {

namespace {

// Reproducible eigenvector orientation: first component larger than
// 1e-12 in magnitude decides the sign.
void fix_column_signs(Eigen::MatrixXd& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            const double x = vectors(r, c);
            if (std::abs(x) > 1e-12) {
                if (x < 0.0) vectors.col(c) = -vectors.col(c);
                break;
            }
        }
    }
}

Eigensystem diagonalize_dense(const Eigen::MatrixXd& matrix) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver failed to converge on a " +
                                 std::to_string(matrix.rows()) + "x" +
                                 std::to_string(matrix.cols()) + " matrix");
    }
    Eigensystem result{solver.eigenvalues(), solver.eigenvectors()};
    fix_column_signs(result.vectors);
    return result;
}

double median_of(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    return n % 2 == 1 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

} // namespace

SingleParticleEigensystem single_particle_eigensystem(const LatticeSpec& spec) {
    Eigensystem eig = diagonalize_dense(spec.single_particle_matrix());
    return {std::move(eig.values), std::move(eig.vectors)};
}

Eigen::VectorXd expand_product(const FockState& mode_occupations,
                               const SingleParticleEigensystem& eigensystem,
                               const Basis& basis) {
    const int modes = basis.modes();
    if (mode_occupations.modes() != modes) {
        throw std::invalid_argument("mode-occupation pattern and basis disagree on the mode count");
    }
    if (mode_occupations.photons() != basis.photons()) {
        throw std::invalid_argument("mode occupations total " +
                                    std::to_string(mode_occupations.photons()) +
                                    " photons, basis holds " + std::to_string(basis.photons()));
    }
    if (eigensystem.vectors.rows() != modes || eigensystem.vectors.cols() != modes) {
        throw std::invalid_argument("single-particle eigensystem does not match the mode count");
    }

    // Amplitude map over intermediate states keyed by pseudo-energy (digits
    // stay <= N throughout, so the encoding remains injective below N
    // photons). Applying a creation operator on mode k multiplies by
    // sqrt(n_k + 1) and adds the k-th digit weight; a sorted flat array keeps
    // the accumulation order deterministic and allocation-free.
    const auto base = static_cast<std::uint64_t>(basis.photons()) + 1;
    std::vector<std::uint64_t> weight(static_cast<std::size_t>(modes));
    weight[0] = 1;
    for (int k = 1; k < modes; ++k) weight[static_cast<std::size_t>(k)] = weight[k - 1] * base;

    std::vector<std::pair<std::uint64_t, double>> amplitudes{{0, 1.0}}, next;
    for (int mode = 1; mode <= modes; ++mode) {
        const int repeats = mode_occupations.occupation(mode);
        for (int r = 0; r < repeats; ++r) {
            next.clear();
            next.reserve(amplitudes.size() * static_cast<std::size_t>(modes));
            for (const auto& [key, amp] : amplitudes) {
                for (int k = 0; k < modes; ++k) {
                    const double u = eigensystem.vectors(k, mode - 1);
                    if (u == 0.0) continue;
                    const auto w = weight[static_cast<std::size_t>(k)];
                    const auto occupied = static_cast<double>((key / w) % base);
                    next.emplace_back(key + w, amp * u * std::sqrt(occupied + 1.0));
                }
            }
            std::sort(next.begin(), next.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            amplitudes.clear();
            for (const auto& [key, amp] : next) {
                if (!amplitudes.empty() && amplitudes.back().first == key) {
                    amplitudes.back().second += amp;
                } else {
                    amplitudes.emplace_back(key, amp);
                }
            }
        }
    }

    Eigen::VectorXd coefficients = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& [key, amp] : amplitudes) {
        coefficients(static_cast<Eigen::Index>(basis.index_of(key)) - 1) = amp;
    }
    const double norm = coefficients.norm();
    if (norm == 0.0) {
        throw std::runtime_error("product expansion collapsed to the zero vector");
    }
    return coefficients / norm;
}

MultiPhotonEigensystem::MultiPhotonEigensystem(Basis basis, std::vector<ProductEigenstate> states,
                                               Eigen::VectorXd values, Eigen::MatrixXd coefficients)
    : basis_(std::move(basis)), states_(std::move(states)), values_(std::move(values)),
      coefficients_(std::move(coefficients)) {}

Eigen::VectorXd MultiPhotonEigensystem::coefficient_vector(std::size_t nu) const {
    if (nu < 1 || nu > size()) {
        throw std::invalid_argument("eigenstate index " + std::to_string(nu) + " out of range 1.." +
                                    std::to_string(size()));
    }
    return coefficients_.col(static_cast<Eigen::Index>(nu) - 1);
}

MultiPhotonEigensystem multi_photon_eigensystem(const SingleParticleEigensystem& eigensystem,
                                                const Basis& basis) {
    // Mode-occupation patterns are themselves compositions of N over M slots,
    // so the Fock basis enumeration doubles as the K~-ordered pattern list.
    const auto n = static_cast<Eigen::Index>(basis.size());
    std::vector<ProductEigenstate> states;
    states.reserve(basis.size());
    Eigen::VectorXd values(n);
    Eigen::MatrixXd coefficients(n, n);

    for (std::size_t nu = 1; nu <= basis.size(); ++nu) {
        const BasisEntry& pattern = basis.entry(nu);
        double value = 0.0;
        for (int m = 1; m <= basis.modes(); ++m) {
            value += pattern.state.occupation(m) * eigensystem.values(m - 1);
        }
        coefficients.col(static_cast<Eigen::Index>(nu) - 1) =
            expand_product(pattern.state, eigensystem, basis);
        values(static_cast<Eigen::Index>(nu) - 1) = value;
        states.push_back({pattern.K, pattern.state, value});
    }

    return MultiPhotonEigensystem(basis, std::move(states), std::move(values),
                                  std::move(coefficients));
}

MultiPhotonEigensystem multi_photon_eigensystem(int photons, const LatticeSpec& spec,
                                                std::uint64_t basis_cap) {
    return multi_photon_eigensystem(single_particle_eigensystem(spec),
                                    Basis(photons, spec.modes(), basis_cap));
}

Eigensystem direct_diagonalize(const EffectiveHamiltonian& hamiltonian, std::size_t dense_cap) {
    return diagonalize_dense(hamiltonian.dense(dense_cap));
}

BenchmarkReport benchmark_eigensystems(int photons, const LatticeSpec& spec, int repeats,
                                       std::uint64_t basis_cap) {
    if (repeats < 1) {
        throw std::invalid_argument("benchmark needs at least one repeat");
    }
    using clock = std::chrono::steady_clock;

    const SingleParticleEigensystem single = single_particle_eigensystem(spec);
    const Basis basis(photons, spec.modes(), basis_cap);
    const EffectiveHamiltonian hamiltonian = build_hamiltonian(photons, spec, basis_cap);
    const Eigen::MatrixXd dense = hamiltonian.dense(std::max<std::size_t>(basis.size(),
                                                                          kDefaultDenseCap));

    std::vector<double> product_times, direct_times;
    Eigen::VectorXd product_values, direct_values;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock::now();
        const MultiPhotonEigensystem product = multi_photon_eigensystem(single, basis);
        const auto t1 = clock::now();
        const Eigensystem direct = diagonalize_dense(dense);
        const auto t2 = clock::now();
        product_times.push_back(std::chrono::duration<double>(t1 - t0).count());
        direct_times.push_back(std::chrono::duration<double>(t2 - t1).count());
        product_values = product.values();
        direct_values = direct.values;
    }

    std::sort(product_values.begin(), product_values.end());
    double max_diff = 0.0;
    for (Eigen::Index i = 0; i < product_values.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(product_values(i) - direct_values(i)));
    }

    BenchmarkReport report;
    report.photons = photons;
    report.modes = spec.modes();
    report.dimension = basis.size();
    report.repeats = repeats;
    report.product_seconds = *std::min_element(product_times.begin(), product_times.end());
    report.direct_seconds = *std::min_element(direct_times.begin(), direct_times.end());
    report.product_seconds_median = median_of(product_times);
    report.direct_seconds_median = median_of(direct_times);
    report.spectrum_max_abs_diff = max_diff;
    return report;
}

} // namespace focklat
