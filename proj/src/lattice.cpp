#include "focklat/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace focklat {

LatticeSpec::LatticeSpec(std::vector<double> beta, Eigen::MatrixXd kappa)
    : beta_(std::move(beta)), kappa_(std::move(kappa)) {
    const auto m = static_cast<Eigen::Index>(beta_.size());
    if (m < 1) {
        throw std::invalid_argument("lattice needs at least one waveguide");
    }
    if (kappa_.rows() != m || kappa_.cols() != m) {
        throw std::invalid_argument("coupling matrix must be " + std::to_string(m) + "x" +
                                    std::to_string(m));
    }
    for (double b : beta_) {
        if (!std::isfinite(b)) throw std::invalid_argument("propagation constants must be finite");
    }
    for (Eigen::Index i = 0; i < m; ++i) {
        if (kappa_(i, i) != 0.0) {
            throw std::invalid_argument("coupling matrix diagonal must be exactly zero");
        }
        for (Eigen::Index j = 0; j < m; ++j) {
            if (!std::isfinite(kappa_(i, j))) {
                throw std::invalid_argument("coupling coefficients must be finite");
            }
            if (kappa_(i, j) != kappa_(j, i)) {
                throw std::invalid_argument("coupling matrix must be exactly symmetric");
            }
        }
    }
}

LatticeSpec LatticeSpec::chain(std::vector<double> beta, const std::vector<double>& couplings) {
    const auto m = beta.size();
    if (m < 1) {
        throw std::invalid_argument("lattice needs at least one waveguide");
    }
    if (couplings.size() + 1 != m) {
        throw std::invalid_argument("a chain over " + std::to_string(m) + " waveguides takes " +
                                    std::to_string(m - 1) + " couplings, got " +
                                    std::to_string(couplings.size()));
    }
    Eigen::MatrixXd kappa = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                                  static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const auto a = static_cast<Eigen::Index>(i);
        kappa(a, a + 1) = kappa(a + 1, a) = couplings[i];
    }
    return LatticeSpec(std::move(beta), std::move(kappa));
}

LatticeSpec LatticeSpec::uniform_chain(int modes, double coupling, double beta) {
    if (modes < 1) {
        throw std::invalid_argument("lattice needs at least one waveguide");
    }
    return chain(std::vector<double>(static_cast<std::size_t>(modes), beta),
                 std::vector<double>(static_cast<std::size_t>(modes) - 1, coupling));
}

Eigen::MatrixXd LatticeSpec::single_particle_matrix() const {
    Eigen::MatrixXd h = kappa_;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        h(i, i) = beta_[static_cast<std::size_t>(i)];
    }
    return h;
}

bool LatticeSpec::all_beta_zero() const {
    for (double b : beta_) {
        if (b != 0.0) return false;
    }
    return true;
}

} // namespace focklat
