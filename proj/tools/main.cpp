#include "focklat/evolution.hpp"
#include "focklat/graph.hpp"
#include "focklat/version.hpp"

#include "config.hpp"
#include "io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fc = focklat::cli;
using namespace focklat;
using focklat::cli::ScenarioConfig;

namespace {

struct GlobalOptions {
    std::string out;
    std::string format;  // resolved per subcommand when empty
    std::uint64_t cap = kDefaultBasisCap;
};

std::string resolve_format(const GlobalOptions& global, const std::string& fallback,
                           std::initializer_list<std::string> accepted) {
    const std::string format = global.format.empty() ? fallback : global.format;
    for (const auto& ok : accepted) {
        if (format == ok) return format;
    }
    throw std::invalid_argument("format \"" + format + "\" not supported here");
}

// Loads --config or --preset, whichever was given.
ScenarioConfig resolve_config(const std::string& config_path, const std::string& preset) {
    if (!config_path.empty() && !preset.empty()) {
        throw std::invalid_argument("--config and --preset are mutually exclusive");
    }
    if (!config_path.empty()) return fc::load_config(config_path);
    if (!preset.empty()) return fc::preset_config(preset);
    throw std::invalid_argument("either --config or --preset is required");
}

std::string trace_csv(const ProbabilityTrace& trace) {
    std::ostringstream out;
    out << "z";
    for (const BasisEntry& entry : trace.basis.entries()) {
        out << ",P_" << entry.state.label();
    }
    out << "\n";
    for (std::size_t r = 0; r < trace.z.size(); ++r) {
        out << fc::format_double(trace.z[r]);
        for (Eigen::Index c = 0; c < trace.probabilities.cols(); ++c) {
            out << ',' << fc::format_double(trace.probabilities(static_cast<Eigen::Index>(r), c));
        }
        out << "\n";
    }
    return out.str();
}

void cmd_basis(const GlobalOptions& global, int photons, int modes) {
    const std::string format = resolve_format(global, "csv", {"csv", "json"});
    const Basis basis(photons, modes, global.cap);
    if (format == "csv") {
        std::ostringstream out;
        out << "nu,K,state\n";
        for (std::size_t nu = 1; nu <= basis.size(); ++nu) {
            out << nu << ',' << basis.pseudo_energy(nu) << ',' << basis.state(nu).label() << "\n";
        }
        fc::emit(global.out, out.str());
        return;
    }
    nlohmann::ordered_json doc;
    doc["photons"] = photons;
    doc["modes"] = modes;
    doc["dimension"] = basis.size();
    doc["states"] = nlohmann::ordered_json::array();
    for (std::size_t nu = 1; nu <= basis.size(); ++nu) {
        doc["states"].push_back({{"nu", nu},
                                 {"K", basis.pseudo_energy(nu)},
                                 {"occupations", basis.state(nu).occupations()}});
    }
    fc::emit(global.out, doc.dump(2) + "\n");
}

void cmd_hamiltonian(const GlobalOptions& global, const std::string& config_path,
                     const std::string& preset, int photons_flag, bool dense) {
    const std::string format = resolve_format(global, "csv", {"csv", "json"});
    const ScenarioConfig config = resolve_config(config_path, preset);
    const int photons = photons_flag > 0 ? photons_flag : config.initial_photons();
    const EffectiveHamiltonian h = build_hamiltonian(photons, config.lattice(), global.cap);

    if (format == "csv") {
        std::ostringstream out;
        if (dense) {
            const Eigen::MatrixXd matrix = h.dense();
            for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
                for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
                    if (c != 0) out << ',';
                    out << fc::format_double(matrix(r, c));
                }
                out << "\n";
            }
        } else {
            out << "mu,nu,value\n";
            for (const HamiltonianEntry& e : h.entries()) {
                out << e.mu << ',' << e.nu << ',' << fc::format_double(e.value) << "\n";
            }
        }
        fc::emit(global.out, out.str());
        return;
    }

    nlohmann::ordered_json doc;
    doc["photons"] = photons;
    doc["modes"] = config.modes;
    doc["dimension"] = h.dimension();
    if (dense) {
        const Eigen::MatrixXd matrix = h.dense();
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (Eigen::Index c = 0; c < matrix.cols(); ++c) row.push_back(matrix(r, c));
            rows.push_back(row);
        }
        doc["matrix"] = rows;
    } else {
        doc["entries"] = nlohmann::ordered_json::array();
        for (const HamiltonianEntry& e : h.entries()) {
            doc["entries"].push_back({{"mu", e.mu}, {"nu", e.nu}, {"value", e.value}});
        }
    }
    fc::emit(global.out, doc.dump(2) + "\n");
}

void cmd_evolve(const GlobalOptions& global, const std::string& config_path,
                const std::string& preset, const std::string& command_name) {
    ScenarioConfig config = resolve_config(config_path, preset);
    if (!config.has_initial_state()) {
        throw std::invalid_argument("evolve needs an initial_state in the config");
    }
    const LatticeSpec spec = config.lattice();
    const MultiPhotonEigensystem eig =
        multi_photon_eigensystem(config.initial_photons(), spec, global.cap);
    const StateVector psi0 = config.initial_state(eig.basis());
    const ProbabilityTrace trace = probability_trace(psi0, config.z_grid(), eig);
    const std::string csv = trace_csv(trace);

    std::string trace_path = global.out;
    if (trace_path.empty() && config.output.has_value()) trace_path = config.output->trace;
    if (trace_path.empty()) {
        std::cout << csv;  // stdout mode skips the manifest
        return;
    }

    std::string manifest_path;
    if (config.output.has_value() && !config.output->manifest.empty()) {
        manifest_path = config.output->manifest;
    } else {
        manifest_path =
            std::filesystem::path(trace_path).replace_extension(".manifest.json").string();
    }
    config.output = ScenarioConfig::Output{trace_path, manifest_path};

    fc::write_file_atomic(trace_path, csv);

    nlohmann::ordered_json manifest;
    manifest["version"] = FOCKLAT_VERSION;
    manifest["command"] = command_name;
    if (!preset.empty()) manifest["preset"] = preset;
    manifest["config"] = fc::config_to_json(config);
    manifest["outputs"] = {{"trace",
                            {{"path", trace_path},
                             {"bytes", csv.size()},
                             {"fnv1a64", fc::fnv1a64_hex(csv)}}}};
    fc::write_file_atomic(manifest_path, manifest.dump(2) + "\n");
}

void cmd_graph(const GlobalOptions& global, int photons, int modes, bool check_isomorphism) {
    if (check_isomorphism) {
        if (!global.format.empty() && global.format != "json") {
            throw std::invalid_argument("--check-isomorphism reports are JSON only");
        }
        const FockGraph graph =
            build_graph(photons, LatticeSpec::uniform_chain(modes, 1.0), global.cap);
        const IsomorphismReport report = verify_isomorphism(photons, modes, global.cap);
        nlohmann::ordered_json doc =
            nlohmann::ordered_json::parse(export_graph(graph, GraphFormat::json));
        doc["isomorphism"] = {
            {"partner_photons", report.target_photons},
            {"partner_modes", report.target_modes},
            {"isomorphic", report.isomorphic},
            {"orientation",
             report.orientation == TransposeOrientation::reversed ? "reversed" : "direct"},
            {"permutation", report.bijection.mapping}};
        fc::emit(global.out, doc.dump(2) + "\n");
        return;
    }
    const std::string format = resolve_format(global, "dot", {"dot", "json"});
    const FockGraph graph =
        build_graph(photons, LatticeSpec::uniform_chain(modes, 1.0), global.cap);
    fc::emit(global.out,
             export_graph(graph, format == "dot" ? GraphFormat::dot : GraphFormat::json));
}

void cmd_eigen(const GlobalOptions& global, const std::string& config_path,
               const std::string& preset, int photons_flag, const std::string& method,
               bool compare, bool vectors) {
    const std::string format = resolve_format(global, "csv", {"csv", "json"});
    if (method != "product" && method != "direct") {
        throw std::invalid_argument("--method is product or direct");
    }
    const ScenarioConfig config = resolve_config(config_path, preset);
    const int photons = photons_flag > 0 ? photons_flag : config.initial_photons();
    const LatticeSpec spec = config.lattice();

    Eigen::VectorXd product_values, direct_values;
    Eigen::MatrixXd vector_columns;
    if (compare || method == "product") {
        const MultiPhotonEigensystem eig = multi_photon_eigensystem(photons, spec, global.cap);
        product_values = eig.values();
        std::sort(product_values.begin(), product_values.end());
        if (method == "product") vector_columns = eig.coefficients();
    }
    if (compare || method == "direct") {
        const Eigensystem eig = direct_diagonalize(build_hamiltonian(photons, spec, global.cap));
        direct_values = eig.values;
        if (method == "direct") vector_columns = eig.vectors;
    }
    const Eigen::VectorXd& values = method == "product" ? product_values : direct_values;

    double max_diff = 0.0;
    if (compare) {
        max_diff = (product_values - direct_values).cwiseAbs().maxCoeff();
    }

    if (format == "csv") {
        std::ostringstream out;
        if (compare) {
            out << "nu,product,direct,abs_diff\n";
            for (Eigen::Index i = 0; i < product_values.size(); ++i) {
                out << (i + 1) << ',' << fc::format_double(product_values(i)) << ','
                    << fc::format_double(direct_values(i)) << ','
                    << fc::format_double(std::abs(product_values(i) - direct_values(i))) << "\n";
            }
        } else {
            out << "nu,value\n";
            for (Eigen::Index i = 0; i < values.size(); ++i) {
                out << (i + 1) << ',' << fc::format_double(values(i)) << "\n";
            }
        }
        fc::emit(global.out, out.str());
        return;
    }

    nlohmann::ordered_json doc;
    doc["photons"] = photons;
    doc["modes"] = config.modes;
    doc["dimension"] = values.size();
    doc["method"] = compare ? "both" : method;
    if (compare) {
        doc["product_values"] = std::vector<double>(product_values.begin(), product_values.end());
        doc["direct_values"] = std::vector<double>(direct_values.begin(), direct_values.end());
        doc["spectrum_max_abs_diff"] = max_diff;
    } else {
        doc["values"] = std::vector<double>(values.begin(), values.end());
        if (vectors) {
            nlohmann::ordered_json columns = nlohmann::ordered_json::array();
            for (Eigen::Index c = 0; c < vector_columns.cols(); ++c) {
                columns.push_back(std::vector<double>(vector_columns.col(c).begin(),
                                                      vector_columns.col(c).end()));
            }
            doc["vectors"] = columns;
        }
    }
    fc::emit(global.out, doc.dump(2) + "\n");
}

void cmd_bench(const GlobalOptions& global, int photons, int modes, int repeats) {
    resolve_format(global, "json", {"json"});
    const BenchmarkReport report =
        benchmark_eigensystems(photons, LatticeSpec::uniform_chain(modes, 1.0), repeats,
                               global.cap);
    nlohmann::ordered_json doc;
    doc["photons"] = report.photons;
    doc["modes"] = report.modes;
    doc["dimension"] = report.dimension;
    doc["product_seconds"] = report.product_seconds;
    doc["direct_seconds"] = report.direct_seconds;
    doc["spectrum_max_abs_diff"] = report.spectrum_max_abs_diff;
    doc["repeats"] = report.repeats;
    fc::emit(global.out, doc.dump(2) + "\n");
}

void cmd_mixture(const GlobalOptions& global, const std::string& config_path,
                 const std::string& preset, const std::string& kind_name, double param_re,
                 double param_im, double threshold) {
    if (global.out.empty()) {
        throw std::invalid_argument("mixture writes one file per sector: --out DIR is required");
    }
    MixtureKind kind;
    if (kind_name == "coherent") {
        kind = MixtureKind::coherent;
    } else if (kind_name == "squeezed") {
        kind = MixtureKind::two_mode_squeezed;
    } else {
        throw std::invalid_argument("--kind is coherent or squeezed");
    }
    const ScenarioConfig config = resolve_config(config_path, preset);
    const LatticeSpec spec = config.lattice();
    const SectorMixture mixture =
        sector_mixture(kind, {param_re, param_im}, threshold, config.modes,
                       config.injection.value_or(std::vector<int>{}));
    const auto walks = parallel_walk(mixture, spec, config.z_grid(), global.cap);

    const std::filesystem::path dir(global.out);
    std::filesystem::create_directories(dir);

    const auto sector_file = [](int photons) {
        char name[32];
        std::snprintf(name, sizeof(name), "sector-%03d.csv", photons);
        return std::string(name);
    };

    for (const SectorTrace& walk : walks) {
        fc::write_file_atomic((dir / sector_file(walk.photons)).string(),
                              trace_csv(walk.trace));
    }

    nlohmann::ordered_json manifest;
    manifest["version"] = FOCKLAT_VERSION;
    manifest["command"] = "mixture";
    manifest["kind"] = kind_name;
    manifest["parameter"] = {param_re, param_im};
    manifest["threshold"] = threshold;
    manifest["tail"] = mixture.tail;
    manifest["config"] = fc::config_to_json(config);
    manifest["sectors"] = nlohmann::ordered_json::array();
    for (const MixtureSector& sector : mixture.sectors) {
        nlohmann::ordered_json entry;
        entry["photons"] = sector.photons;
        entry["weight"] = sector.weight;
        if (sector.initial.has_value()) {
            entry["initial"] = sector.initial->occupations();
            entry["trace"] = sector_file(sector.photons);
        } else {
            entry["initial"] = nullptr;
            entry["trace"] = nullptr;
        }
        manifest["sectors"].push_back(entry);
    }
    fc::write_file_atomic((dir / "weights.json").string(), manifest.dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-photon waveguide-array simulator in the pseudo-energy representation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("focklat ") + FOCKLAT_VERSION);

    GlobalOptions global;
    app.add_option("--out", global.out, "Output path (default: stdout)");
    app.add_option("--format", global.format, "Output format: csv, json or dot");
    app.add_option("--cap", global.cap, "Maximum number of basis states");

    int photons = 0, modes = 0, repeats = 5, photons_flag = 0;
    bool dense = false, check_isomorphism = false, compare = false, vectors = false;
    std::string config_path, preset, method = "product", kind, scenario_name;
    double param_re = 0.0, param_im = 0.0, threshold = 1e-6;

    auto* basis_cmd = app.add_subcommand("basis", "List the Fock basis in pseudo-energy order");
    basis_cmd->add_option("-N,--photons", photons, "Photon count")->required();
    basis_cmd->add_option("-M,--modes", modes, "Waveguide count")->required();
    basis_cmd->fallthrough();
    basis_cmd->callback([&] { cmd_basis(global, photons, modes); });

    auto* ham_cmd = app.add_subcommand("hamiltonian", "Build the effective Hamiltonian");
    ham_cmd->add_option("--config", config_path, "Scenario config JSON");
    ham_cmd->add_option("--preset", preset, "Built-in scenario preset");
    ham_cmd->add_option("-N,--photons", photons_flag, "Photon count (default: from initial_state)");
    ham_cmd->add_flag("--dense", dense, "Emit the dense matrix instead of triplets");
    ham_cmd->fallthrough();
    ham_cmd->callback(
        [&] { cmd_hamiltonian(global, config_path, preset, photons_flag, dense); });

    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve an initial state over a z grid");
    evolve_cmd->add_option("--config", config_path, "Scenario config JSON");
    evolve_cmd->add_option("--preset", preset, "Built-in scenario preset");
    evolve_cmd->fallthrough();
    evolve_cmd->callback([&] { cmd_evolve(global, config_path, preset, "evolve"); });

    auto* graph_cmd = app.add_subcommand("graph", "Export the Fock graph");
    graph_cmd->add_option("-N,--photons", photons, "Photon count")->required();
    graph_cmd->add_option("-M,--modes", modes, "Waveguide count")->required();
    graph_cmd->add_flag("--check-isomorphism", check_isomorphism,
                        "Verify the (M-1, N+1) partner-graph isomorphism");
    graph_cmd->fallthrough();
    graph_cmd->callback([&] { cmd_graph(global, photons, modes, check_isomorphism); });

    auto* eigen_cmd = app.add_subcommand("eigen", "Eigendecomposition of the N-photon system");
    eigen_cmd->add_option("--config", config_path, "Scenario config JSON");
    eigen_cmd->add_option("--preset", preset, "Built-in scenario preset");
    eigen_cmd->add_option("-N,--photons", photons_flag, "Photon count (default: from initial_state)");
    eigen_cmd->add_option("--method", method, "product (mode products) or direct (dense solve)");
    eigen_cmd->add_flag("--compare", compare, "Run both methods and report the max deviation");
    eigen_cmd->add_flag("--vectors", vectors, "Include eigenvector coefficients (JSON)");
    eigen_cmd->fallthrough();
    eigen_cmd->callback([&] {
        cmd_eigen(global, config_path, preset, photons_flag, method, compare, vectors);
    });

    auto* bench_cmd = app.add_subcommand("bench", "Benchmark product vs direct eigensystems");
    bench_cmd->add_option("-N,--photons", photons, "Photon count")->required();
    bench_cmd->add_option("-M,--modes", modes, "Waveguide count")->required();
    bench_cmd->add_option("--repeats", repeats, "Timing repetitions");
    bench_cmd->fallthrough();
    bench_cmd->callback([&] { cmd_bench(global, photons, modes, repeats); });

    auto* mixture_cmd =
        app.add_subcommand("mixture", "Evolve the photon-number sectors of a mixture input");
    mixture_cmd->add_option("--kind", kind, "coherent or squeezed")->required();
    mixture_cmd->add_option("--param-re", param_re, "Re(alpha) or Re(xi)")->required();
    mixture_cmd->add_option("--param-im", param_im, "Im(alpha) or Im(xi)");
    mixture_cmd->add_option("--threshold", threshold, "Truncation tail threshold");
    mixture_cmd->add_option("--config", config_path, "Scenario config JSON");
    mixture_cmd->add_option("--preset", preset, "Built-in scenario preset");
    mixture_cmd->fallthrough();
    mixture_cmd->callback([&] {
        cmd_mixture(global, config_path, preset, kind, param_re, param_im, threshold);
    });

    auto* scenario_cmd = app.add_subcommand("scenario", "Run a built-in preset end to end");
    scenario_cmd->add_option("name", scenario_name, "Preset name")->required();
    scenario_cmd->fallthrough();
    scenario_cmd->callback([&] { cmd_evolve(global, "", scenario_name, "scenario"); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "focklat: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {  // validation: bad input, caps, ranges
        std::cerr << "focklat: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {  // computational or I/O failure
        std::cerr << "focklat: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
