#include "config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace focklat::cli {

namespace {

[[noreturn]] void config_error(const std::string& field, const std::string& message) {
    throw std::invalid_argument("config field \"" + field + "\": " + message);
}

std::vector<int> int_list(const nlohmann::json& node, const std::string& field) {
    if (!node.is_array()) config_error(field, "expected an array of integers");
    std::vector<int> values;
    for (const auto& item : node) {
        if (!item.is_number_integer()) config_error(field, "expected an array of integers");
        values.push_back(item.get<int>());
    }
    return values;
}

std::vector<double> double_list(const nlohmann::json& node, const std::string& field) {
    if (!node.is_array()) config_error(field, "expected an array of numbers");
    std::vector<double> values;
    for (const auto& item : node) {
        if (!item.is_number()) config_error(field, "expected an array of numbers");
        values.push_back(item.get<double>());
    }
    return values;
}

} // namespace

LatticeSpec ScenarioConfig::lattice() const {
    if (coupling_is_matrix) {
        Eigen::MatrixXd kappa(modes, modes);
        for (int i = 0; i < modes; ++i) {
            for (int j = 0; j < modes; ++j) {
                kappa(i, j) = coupling_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        return LatticeSpec(beta, std::move(kappa));
    }
    return LatticeSpec::chain(beta, chain_couplings);
}

bool ScenarioConfig::has_initial_state() const {
    return initial_occupations.has_value() || !initial_terms.empty();
}

int ScenarioConfig::initial_photons() const {
    if (initial_occupations.has_value()) {
        return FockState(*initial_occupations).photons();
    }
    if (!initial_terms.empty()) {
        return FockState(initial_terms.front().occupations).photons();
    }
    throw std::invalid_argument("config has no initial_state");
}

StateVector ScenarioConfig::initial_state(const Basis& basis) const {
    if (initial_occupations.has_value()) {
        return StateVector::fock(basis, FockState(*initial_occupations));
    }
    if (initial_terms.empty()) {
        throw std::invalid_argument("config has no initial_state");
    }
    Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const Term& term : initial_terms) {
        const std::size_t nu = basis.index_of(FockState(term.occupations));
        amplitudes(static_cast<Eigen::Index>(nu) - 1) += term.amplitude;
    }
    return StateVector::superposition(basis, std::move(amplitudes));
}

std::vector<double> ScenarioConfig::z_grid() const {
    if (steps < 1) throw std::invalid_argument("config field \"steps\": must be >= 1");
    if (!(z_max > 0.0)) throw std::invalid_argument("config field \"z_max\": must be > 0");
    std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
    for (int r = 0; r <= steps; ++r) {
        grid[static_cast<std::size_t>(r)] = z_max * r / steps;
    }
    return grid;
}

ScenarioConfig config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    ScenarioConfig config;

    if (!doc.contains("modes") || !doc["modes"].is_number_integer()) {
        config_error("modes", "required integer");
    }
    config.modes = doc["modes"].get<int>();
    if (config.modes < 1) config_error("modes", "must be >= 1");

    if (!doc.contains("beta")) config_error("beta", "required array of numbers");
    config.beta = double_list(doc["beta"], "beta");
    if (config.beta.size() != static_cast<std::size_t>(config.modes)) {
        config_error("beta", "expected " + std::to_string(config.modes) + " entries");
    }

    if (!doc.contains("coupling")) config_error("coupling", "required");
    const auto& coupling = doc["coupling"];
    if (!coupling.is_array() || coupling.empty()) {
        if (config.modes == 1 && coupling.is_array()) {
            config.coupling_is_matrix = false;  // one waveguide: empty chain list
        } else {
            config_error("coupling", "expected a list of couplings or a full matrix");
        }
    }
    if (coupling.is_array() && !coupling.empty() && coupling.front().is_array()) {
        config.coupling_is_matrix = true;
        for (const auto& row : coupling) {
            config.coupling_matrix.push_back(double_list(row, "coupling"));
            if (config.coupling_matrix.back().size() != static_cast<std::size_t>(config.modes)) {
                config_error("coupling", "matrix rows must have " + std::to_string(config.modes) +
                                             " entries");
            }
        }
        if (config.coupling_matrix.size() != static_cast<std::size_t>(config.modes)) {
            config_error("coupling", "matrix must have " + std::to_string(config.modes) + " rows");
        }
    } else if (coupling.is_array()) {
        config.chain_couplings = double_list(coupling, "coupling");
        if (config.chain_couplings.size() + 1 != static_cast<std::size_t>(config.modes)) {
            config_error("coupling", "chain over " + std::to_string(config.modes) +
                                         " waveguides takes " + std::to_string(config.modes - 1) +
                                         " couplings");
        }
    }

    if (doc.contains("initial_state")) {
        const auto& initial = doc["initial_state"];
        if (initial.is_array()) {
            config.initial_occupations = int_list(initial, "initial_state");
        } else if (initial.is_object() && initial.contains("terms")) {
            for (const auto& term : initial["terms"]) {
                if (!term.is_object() || !term.contains("occupations") ||
                    !term.contains("amplitude")) {
                    config_error("initial_state", "terms need occupations and amplitude");
                }
                const auto amplitude = double_list(term["amplitude"], "initial_state.amplitude");
                if (amplitude.size() != 2) {
                    config_error("initial_state", "amplitude is [re, im]");
                }
                config.initial_terms.push_back({int_list(term["occupations"], "initial_state"),
                                                {amplitude[0], amplitude[1]}});
            }
            if (config.initial_terms.empty()) {
                config_error("initial_state", "terms must not be empty");
            }
        } else {
            config_error("initial_state", "expected an occupation list or {\"terms\": [...]}");
        }
    }

    if (doc.contains("injection")) {
        config.injection = int_list(doc["injection"], "injection");
    }

    if (!doc.contains("z_max") || !doc["z_max"].is_number()) config_error("z_max", "required number");
    config.z_max = doc["z_max"].get<double>();
    if (!doc.contains("steps") || !doc["steps"].is_number_integer()) {
        config_error("steps", "required integer");
    }
    config.steps = doc["steps"].get<int>();

    if (doc.contains("output")) {
        const auto& output = doc["output"];
        if (!output.is_object()) config_error("output", "expected an object");
        ScenarioConfig::Output paths;
        if (output.contains("trace")) paths.trace = output["trace"].get<std::string>();
        if (output.contains("manifest")) paths.manifest = output["manifest"].get<std::string>();
        config.output = paths;
    }

    return config;
}

nlohmann::ordered_json config_to_json(const ScenarioConfig& config) {
    nlohmann::ordered_json doc;
    doc["modes"] = config.modes;
    doc["beta"] = config.beta;
    if (config.coupling_is_matrix) {
        doc["coupling"] = config.coupling_matrix;
    } else {
        doc["coupling"] = config.chain_couplings;
    }
    if (config.initial_occupations.has_value()) {
        doc["initial_state"] = *config.initial_occupations;
    } else if (!config.initial_terms.empty()) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& term : config.initial_terms) {
            terms.push_back({{"occupations", term.occupations},
                             {"amplitude", {term.amplitude.real(), term.amplitude.imag()}}});
        }
        doc["initial_state"] = {{"terms", terms}};
    }
    if (config.injection.has_value()) {
        doc["injection"] = *config.injection;
    }
    doc["z_max"] = config.z_max;
    doc["steps"] = config.steps;
    if (config.output.has_value()) {
        nlohmann::ordered_json output;
        if (!config.output->trace.empty()) output["trace"] = config.output->trace;
        if (!config.output->manifest.empty()) output["manifest"] = config.output->manifest;
        doc["output"] = output;
    }
    return doc;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config " + path + ": " + e.what());
    }
    return config_from_json(doc);
}

ScenarioConfig preset_config(const std::string& name) {
    ScenarioConfig config;
    config.steps = 400;
    if (name == "fig2a") {
        config.modes = 2;
        config.beta = {1.0, 1.0};
        config.chain_couplings = {1.0};
        config.initial_occupations = std::vector<int>{5, 5};
        config.z_max = 10.0;
    } else if (name == "fig2b") {
        config.modes = 2;
        config.beta = {0.0, 4.0};
        config.chain_couplings = {1.0};
        config.initial_occupations = std::vector<int>{5, 5};
        config.z_max = 6.0;
    } else if (name == "fig3a") {
        config.modes = 3;
        config.beta = {0.0, 0.0, 0.0};
        config.chain_couplings = {1.0, 1.0};
        config.initial_occupations = std::vector<int>{1, 0, 1};
        config.z_max = 10.0;
    } else if (name == "fig3b") {
        config.modes = 3;
        config.beta = {0.0, 2.0, 0.0};
        config.chain_couplings = {1.0, 1.0};
        config.initial_occupations = std::vector<int>{1, 0, 1};
        config.z_max = 12.0;
    } else if (name == "fig7") {
        config.modes = 3;
        config.beta = {0.0, 0.0, 0.0};
        const double k = 1.0 / std::numbers::sqrt2;
        config.chain_couplings = {k, k};
        // the stationary superposition of the balanced trimer, spelled out so
        // the echoed config is self-contained
        const StateVector psi = dark_state(dark_state_spec());
        const Basis& basis = psi.basis();
        for (std::size_t nu = 1; nu <= basis.size(); ++nu) {
            const std::complex<double> a = psi.amplitudes()(static_cast<Eigen::Index>(nu) - 1);
            if (std::abs(a) <= 1e-14) continue;
            config.initial_terms.push_back({basis.state(nu).occupations(), a});
        }
        config.z_max = 4.0 * std::numbers::pi;
    } else if (name == "hom") {
        config.modes = 2;
        config.beta = {0.0, 0.0};
        config.chain_couplings = {1.0};
        config.initial_occupations = std::vector<int>{1, 1};
        config.z_max = std::numbers::pi / 2.0;
        config.steps = 200;
    } else {
        throw std::invalid_argument("unknown preset \"" + name +
                                    "\" (known: fig2a fig2b fig3a fig3b fig7 hom)");
    }
    return config;
}

std::vector<std::string> preset_names() {
    return {"fig2a", "fig2b", "fig3a", "fig3b", "fig7", "hom"};
}

} // namespace focklat::cli
