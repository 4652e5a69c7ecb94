#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "focklat/spectral.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace focklat;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("single-particle eigensystem of small chains") {
    SUBCASE("symmetric beamsplitter: lambda = -1, +1") {
        const auto eig = single_particle_eigensystem(LatticeSpec::uniform_chain(2, 1.0));
        CHECK(eig.values(0) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(eig.values(1) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("balanced trimer: lambda = -1, 0, 1") {
        const auto eig = single_particle_eigensystem(LatticeSpec::uniform_chain(3, 1.0 / kSqrt2));
        CHECK(eig.values(0) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(std::abs(eig.values(1)) <= 1e-12);
        CHECK(eig.values(2) == doctest::Approx(1.0).epsilon(1e-12));
        // sign convention pins the zero mode to (1/sqrt2, 0, -1/sqrt2)
        CHECK(eig.vectors(0, 1) == doctest::Approx(1.0 / kSqrt2).epsilon(1e-12));
        CHECK(eig.vectors(2, 1) == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-12));
    }
    SUBCASE("unit trimer: lambda = -sqrt2, 0, sqrt2") {
        const auto eig = single_particle_eigensystem(LatticeSpec::uniform_chain(3, 1.0));
        CHECK(eig.values(0) == doctest::Approx(-kSqrt2).epsilon(1e-12));
        CHECK(std::abs(eig.values(1)) <= 1e-12);
        CHECK(eig.values(2) == doctest::Approx(kSqrt2).epsilon(1e-12));
    }
}

TEST_CASE("single-particle eigensystem meets the residual and orthonormality contracts") {
    std::mt19937_64 rng(81);
    for (int m = 1; m <= 8; ++m) {
        const LatticeSpec spec = oracles::random_full(m, rng);
        const Eigen::MatrixXd h = spec.single_particle_matrix();
        const auto eig = single_particle_eigensystem(spec);
        const double scale = h.norm();
        for (int n = 0; n < m; ++n) {
            const double residual = (h * eig.vectors.col(n) - eig.values(n) * eig.vectors.col(n)).norm();
            CHECK(residual <= 1e-10 * std::max(scale, 1.0));
        }
        const Eigen::MatrixXd gram = eig.vectors.transpose() * eig.vectors;
        CHECK((gram - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() <= 1e-10);
        for (int n = 1; n < m; ++n) CHECK(eig.values(n - 1) <= eig.values(n) + 1e-15);
    }
}

TEST_CASE("expand_product on a single photon returns the mode vector itself") {
    const LatticeSpec spec = LatticeSpec::chain({0.2, -0.1, 0.4}, {0.9, 1.1});
    const Basis basis(1, 3);
    const auto eig = single_particle_eigensystem(spec);
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> pattern(3, 0);
        pattern[static_cast<std::size_t>(n) - 1] = 1;
        const Eigen::VectorXd c = expand_product(FockState(pattern), eig, basis);
        CHECK((c - eig.vectors.col(n - 1)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("expand_product of (1,1) on the beamsplitter avoids |11>") {
    const Basis basis(2, 2);
    const auto eig = single_particle_eigensystem(LatticeSpec::uniform_chain(2, 1.0));
    const Eigen::VectorXd c = expand_product(FockState({1, 1}), eig, basis);
    // (a1^dag^2 - a2^dag^2)/2 |0> = (|20> - |02>)/sqrt2
    CHECK(c(0) == doctest::Approx(1.0 / kSqrt2).epsilon(1e-12));
    CHECK(std::abs(c(1)) <= 1e-14);
    CHECK(c(2) == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-12));
}

TEST_CASE("expand_product of the doubly occupied trimer zero mode") {
    const Basis basis(2, 3);
    const auto eig = single_particle_eigensystem(LatticeSpec::uniform_chain(3, 1.0 / kSqrt2));
    const Eigen::VectorXd c = expand_product(FockState({0, 2, 0}), eig, basis);
    // (phi_2^dag)^2 |0> with u = (1/sqrt2, 0, -1/sqrt2):
    // amplitudes (1/2, 0, 0, -1/sqrt2, 0, 1/2) over K = 2,4,6,10,12,18
    CHECK(c(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(c(1)) <= 1e-14);
    CHECK(std::abs(c(2)) <= 1e-14);
    CHECK(c(3) == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-12));
    CHECK(std::abs(c(4)) <= 1e-14);
    CHECK(c(5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("expand_product validation") {
    const Basis basis(2, 3);
    const auto eig = single_particle_eigensystem(LatticeSpec::uniform_chain(3, 1.0));
    CHECK_THROWS_AS(expand_product(FockState({1, 1, 1}), eig, basis), std::invalid_argument);
    CHECK_THROWS_AS(expand_product(FockState({2, 0}), eig, basis), std::invalid_argument);
}

TEST_CASE("multi-photon eigensystem of the beamsplitter: lambda = -2, 0, 2") {
    const auto eig = multi_photon_eigensystem(2, LatticeSpec::uniform_chain(2, 1.0));
    REQUIRE(eig.size() == 3);
    CHECK(eig.values()(0) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(eig.values()(1)) <= 1e-12);
    CHECK(eig.values()(2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("multi-photon eigensystem of the balanced trimer matches the integer spectrum") {
    const LatticeSpec spec = LatticeSpec::uniform_chain(3, 1.0 / kSqrt2);
    const auto eig = multi_photon_eigensystem(2, spec);
    REQUIRE(eig.size() == 6);
    Eigen::VectorXd sorted = eig.values();
    std::sort(sorted.begin(), sorted.end());
    const std::vector<double> expected = {-2.0, -1.0, 0.0, 0.0, 1.0, 2.0};
    for (int i = 0; i < 6; ++i) {
        CHECK(sorted(i) == doctest::Approx(expected[static_cast<std::size_t>(i)]).epsilon(1e-9));
    }

    SUBCASE("the K~ = 6 eigenstate is the printed zero mode") {
        const Eigen::VectorXd c3 = eig.coefficient_vector(3);
        CHECK(c3(0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(c3(1)) <= 1e-12);
        CHECK(std::abs(c3(2)) <= 1e-12);
        CHECK(c3(3) == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-12));
        CHECK(std::abs(c3(4)) <= 1e-12);
        CHECK(c3(5) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("the K~ = 12 eigenstate is the half-weight ladder state") {
        const Eigen::VectorXd c5 = eig.coefficient_vector(5);
        CHECK(c5(0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(c5(1) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(c5(2)) <= 1e-12);
        CHECK(std::abs(c5(3)) <= 1e-12);
        CHECK(c5(4) == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(c5(5) == doctest::Approx(-0.5).epsilon(1e-12));
    }
}

TEST_CASE("single photon multi-photon eigensystem reduces to the single-particle one") {
    std::mt19937_64 rng(82);
    const LatticeSpec spec = oracles::random_chain(5, rng);
    const auto single = single_particle_eigensystem(spec);
    const auto multi = multi_photon_eigensystem(1, spec);
    CHECK((multi.values() - single.values).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((multi.coefficients() - single.vectors).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("direct diagonalization oracle") {
    SUBCASE("balanced trimer spectrum") {
        const auto h = build_hamiltonian(2, LatticeSpec::uniform_chain(3, 1.0 / kSqrt2));
        const Eigensystem eig = direct_diagonalize(h);
        const std::vector<double> expected = {-2.0, -1.0, 0.0, 0.0, 1.0, 2.0};
        for (int i = 0; i < 6; ++i) {
            CHECK(eig.values(i) == doctest::Approx(expected[static_cast<std::size_t>(i)]).epsilon(1e-9));
        }
    }
    SUBCASE("single-photon chain") {
        const auto h = build_hamiltonian(1, LatticeSpec::uniform_chain(3, 1.0));
        const Eigensystem eig = direct_diagonalize(h);
        CHECK(eig.values(0) == doctest::Approx(-kSqrt2).epsilon(1e-12));
        CHECK(std::abs(eig.values(1)) <= 1e-12);
        CHECK(eig.values(2) == doctest::Approx(kSqrt2).epsilon(1e-12));
    }
    SUBCASE("decoupled waveguides: eigenvalues are the sorted diagonal") {
        const LatticeSpec spec = LatticeSpec::chain({0.3, -0.7, 0.1}, {0.0, 0.0});
        const auto h = build_hamiltonian(2, spec);
        const Eigensystem eig = direct_diagonalize(h);
        Eigen::VectorXd diag = h.dense().diagonal();
        std::sort(diag.begin(), diag.end());
        CHECK((eig.values - diag).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("product and direct spectra agree across random specs for N+M <= 9") {
    std::mt19937_64 rng(83);
    for (int n = 1; n <= 7; ++n) {
        for (int m = 2; n + m <= 9; ++m) {
            for (int trial = 0; trial < 10; ++trial) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(trial);
                const LatticeSpec spec =
                    trial % 2 == 0 ? oracles::random_chain(m, rng) : oracles::random_full(m, rng);
                const auto h = build_hamiltonian(n, spec);
                const auto product = multi_photon_eigensystem(n, spec);
                const auto direct = direct_diagonalize(h);

                Eigen::VectorXd sorted = product.values();
                std::sort(sorted.begin(), sorted.end());
                CHECK((sorted - direct.values).cwiseAbs().maxCoeff() <= 1e-8);

                const Eigen::MatrixXd dense = h.dense();
                const double scale = std::max(dense.norm(), 1.0);
                const Eigen::MatrixXd residual =
                    dense * product.coefficients() -
                    product.coefficients() * product.values().asDiagonal();
                CHECK(residual.colwise().norm().maxCoeff() <= 1e-8 * scale);
            }
        }
    }
}

TEST_CASE("product eigenvectors are orthonormal and complete") {
    std::mt19937_64 rng(84);
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}, {4, 2}}) {
        const LatticeSpec spec = oracles::random_chain(m, rng);
        const auto eig = multi_photon_eigensystem(n, spec);
        const auto size = static_cast<Eigen::Index>(eig.size());
        const Eigen::MatrixXd gram = eig.coefficients().transpose() * eig.coefficients();
        CHECK((gram - Eigen::MatrixXd::Identity(size, size)).cwiseAbs().maxCoeff() <= 1e-8);
        const Eigen::MatrixXd completeness = eig.coefficients() * eig.coefficients().transpose();
        CHECK((completeness - Eigen::MatrixXd::Identity(size, size)).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("eigenvalues are occupation-weighted sums of single-particle values") {
    std::mt19937_64 rng(85);
    const LatticeSpec spec = oracles::random_full(4, rng);
    const auto single = single_particle_eigensystem(spec);
    const auto multi = multi_photon_eigensystem(3, spec);
    for (const ProductEigenstate& state : multi.states()) {
        double expected = 0.0;
        for (int m = 1; m <= 4; ++m) {
            expected += state.mode_occupations.occupation(m) * single.values(m - 1);
        }
        CHECK(state.value == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("benchmark report carries timings and a tight spectrum check") {
    const BenchmarkReport report =
        benchmark_eigensystems(2, LatticeSpec::uniform_chain(3, 1.0), 3);
    CHECK(report.photons == 2);
    CHECK(report.modes == 3);
    CHECK(report.dimension == 6);
    CHECK(report.repeats == 3);
    CHECK(report.product_seconds > 0.0);
    CHECK(report.direct_seconds > 0.0);
    CHECK(report.product_seconds_median >= report.product_seconds);
    CHECK(report.spectrum_max_abs_diff <= 1e-8);
    CHECK_THROWS_AS(benchmark_eigensystems(2, LatticeSpec::uniform_chain(3, 1.0), 0),
                    std::invalid_argument);
}

TEST_CASE("benchmark at (4, 6) and (5, 6)") {
    const BenchmarkReport a = benchmark_eigensystems(4, LatticeSpec::uniform_chain(6, 1.0), 2);
    CHECK(a.dimension == 126);
    CHECK(a.spectrum_max_abs_diff <= 1e-8);
    const BenchmarkReport b = benchmark_eigensystems(5, LatticeSpec::uniform_chain(6, 1.0), 2);
    CHECK(b.dimension == 252);
    CHECK(b.product_seconds > 0.0);
    CHECK(b.direct_seconds > 0.0);
}
