#pragma once

#include "focklat/evolution.hpp"

#include "json.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace focklat::cli {

/**
 One JSON document describes a run: the array, the launch state, and the z
 grid. `coupling` is either the M-1 nearest-neighbor list or a full M x M
 matrix; `initial_state` is either an occupation list or a superposition of
 weighted occupation terms.
 */
struct ScenarioConfig {
    struct Term {
        std::vector<int> occupations;
        std::complex<double> amplitude;

        friend bool operator==(const Term&, const Term&) = default;
    };
    struct Output {
        std::string trace;
        std::string manifest;

        friend bool operator==(const Output&, const Output&) = default;
    };

    int modes = 0;
    std::vector<double> beta;
    bool coupling_is_matrix = false;
    std::vector<double> chain_couplings;       // when coupling_is_matrix is false
    std::vector<std::vector<double>> coupling_matrix;
    std::optional<std::vector<int>> initial_occupations;
    std::vector<Term> initial_terms;           // used when occupations are absent
    std::optional<std::vector<int>> injection; // mixture injection modes, 1-based
    double z_max = 0.0;
    int steps = 0;
    std::optional<Output> output;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;

    LatticeSpec lattice() const;
    bool has_initial_state() const;
    int initial_photons() const;               ///< throws without an initial state
    StateVector initial_state(const Basis& basis) const;
    std::vector<double> z_grid() const;        ///< steps+1 points over [0, z_max]
};

ScenarioConfig config_from_json(const nlohmann::json& doc);
nlohmann::ordered_json config_to_json(const ScenarioConfig& config);
ScenarioConfig load_config(const std::string& path);

/// Built-in scenario presets: fig2a, fig2b, fig3a, fig3b, fig7, hom.
ScenarioConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

} // namespace focklat::cli
