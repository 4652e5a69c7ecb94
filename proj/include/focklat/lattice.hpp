#pragma once

#include <Eigen/Dense>

#include <vector>

namespace focklat {

/**
 Waveguide-array description: per-guide propagation constants beta_m and a
 symmetric coupling matrix kappa with zero diagonal, both in units of the
 inverse normalized propagation distance z.
 */
class LatticeSpec {
public:
    /// General geometry; kappa must be M x M, exactly symmetric, zero diagonal.
    LatticeSpec(std::vector<double> beta, Eigen::MatrixXd kappa);

    /// Nearest-neighbor chain from M-1 couplings kappa_1..kappa_{M-1}.
    static LatticeSpec chain(std::vector<double> beta, const std::vector<double>& couplings);

    /// Identical-waveguide chain with a single coupling value.
    static LatticeSpec uniform_chain(int modes, double coupling, double beta = 0.0);

    int modes() const { return static_cast<int>(beta_.size()); }
    const std::vector<double>& beta() const { return beta_; }
    const Eigen::MatrixXd& kappa() const { return kappa_; }

    /// M x M single-photon matrix: beta on the diagonal, kappa off it.
    Eigen::MatrixXd single_particle_matrix() const;

    bool all_beta_zero() const;

private:
    std::vector<double> beta_;
    Eigen::MatrixXd kappa_;
};

} // namespace focklat
