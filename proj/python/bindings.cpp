#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "focklat/evolution.hpp"
#include "focklat/graph.hpp"
#include "focklat/version.hpp"

namespace py = pybind11;
using namespace focklat;

PYBIND11_MODULE(_focklat, m) {
    m.doc() = "Multi-photon waveguide-array simulator in the pseudo-energy representation";
    m.attr("__version__") = FOCKLAT_VERSION;

    py::class_<FockState>(m, "FockState")
        .def(py::init<std::vector<int>>(), py::arg("occupations"))
        .def_property_readonly("occupations", &FockState::occupations)
        .def_property_readonly("photons", &FockState::photons)
        .def_property_readonly("modes", &FockState::modes)
        .def("occupation", &FockState::occupation, py::arg("mode"))
        .def("label", &FockState::label, py::arg("separator") = '-')
        .def("__eq__", [](const FockState& a, const FockState& b) { return a == b; })
        .def("__repr__",
             [](const FockState& s) { return "FockState([" + s.label(',') + "])"; });
    py::implicitly_convertible<std::vector<int>, FockState>();

    py::class_<BasisEntry>(m, "BasisEntry")
        .def_readonly("K", &BasisEntry::K)
        .def_readonly("state", &BasisEntry::state);

    py::class_<Basis>(m, "Basis")
        .def(py::init<int, int, std::uint64_t>(), py::arg("photons"), py::arg("modes"),
             py::arg("basis_cap") = kDefaultBasisCap)
        .def_property_readonly("photons", &Basis::photons)
        .def_property_readonly("modes", &Basis::modes)
        .def("__len__", &Basis::size)
        .def("entries", &Basis::entries)
        .def("state", &Basis::state, py::arg("nu"))
        .def("pseudo_energy", &Basis::pseudo_energy, py::arg("nu"))
        .def("index_of",
             py::overload_cast<std::uint64_t>(&Basis::index_of, py::const_), py::arg("K"))
        .def("index_of",
             py::overload_cast<const FockState&>(&Basis::index_of, py::const_),
             py::arg("state"));

    m.def("dimension", &dimension, py::arg("photons"), py::arg("modes"),
          py::arg("basis_cap") = kDefaultBasisCap,
          "Number of Fock states: binomial(N+M-1, N)");
    m.def("pseudo_energy", py::overload_cast<const FockState&>(&pseudo_energy),
          py::arg("state"), "Occupations read as a base-(N+1) numeral");
    m.def("decode", &decode, py::arg("K"), py::arg("photons"), py::arg("modes"),
          "Inverse of pseudo_energy");
    m.def("exchange_energy", &exchange_energy, py::arg("mode_i"), py::arg("mode_j"),
          py::arg("photons"), "Pseudo-energy change of a j -> i tunneling event");

    py::class_<LatticeSpec>(m, "LatticeSpec")
        .def(py::init<std::vector<double>, Eigen::MatrixXd>(), py::arg("beta"), py::arg("kappa"))
        .def_static("chain", &LatticeSpec::chain, py::arg("beta"), py::arg("couplings"))
        .def_static("uniform_chain", &LatticeSpec::uniform_chain, py::arg("modes"),
                    py::arg("coupling"), py::arg("beta") = 0.0)
        .def_property_readonly("modes", &LatticeSpec::modes)
        .def_property_readonly("beta", &LatticeSpec::beta)
        .def_property_readonly("kappa", &LatticeSpec::kappa)
        .def("single_particle_matrix", &LatticeSpec::single_particle_matrix);

    py::class_<HamiltonianEntry>(m, "HamiltonianEntry")
        .def_readonly("mu", &HamiltonianEntry::mu)
        .def_readonly("nu", &HamiltonianEntry::nu)
        .def_readonly("value", &HamiltonianEntry::value);

    py::class_<Transition>(m, "Transition")
        .def_readonly("mu", &Transition::mu)
        .def_readonly("delta_K", &Transition::delta_K)
        .def_readonly("amplitude", &Transition::amplitude);

    py::class_<EffectiveHamiltonian>(m, "EffectiveHamiltonian")
        .def_property_readonly("photons", &EffectiveHamiltonian::photons)
        .def_property_readonly("basis", &EffectiveHamiltonian::basis)
        .def_property_readonly("spec", &EffectiveHamiltonian::spec)
        .def("__len__", &EffectiveHamiltonian::dimension)
        .def("entries", &EffectiveHamiltonian::entries)
        .def("dense", &EffectiveHamiltonian::dense, py::arg("dense_cap") = kDefaultDenseCap)
        .def("allowed_transitions", &EffectiveHamiltonian::allowed_transitions, py::arg("nu"));

    m.def("matrix_element", &matrix_element, py::arg("bra"), py::arg("ket"), py::arg("spec"));
    m.def("build_hamiltonian", &build_hamiltonian, py::arg("photons"), py::arg("spec"),
          py::arg("basis_cap") = kDefaultBasisCap);

    py::class_<TermDiagram::Level>(m, "TermLevel")
        .def_readonly("nu", &TermDiagram::Level::nu)
        .def_readonly("K", &TermDiagram::Level::K)
        .def_readonly("state", &TermDiagram::Level::state);
    py::class_<TermDiagram::Pair>(m, "TermTransition")
        .def_readonly("nu", &TermDiagram::Pair::nu)
        .def_readonly("mu", &TermDiagram::Pair::mu)
        .def_readonly("delta_K", &TermDiagram::Pair::delta_K)
        .def_readonly("amplitude", &TermDiagram::Pair::amplitude);
    py::class_<TermDiagram>(m, "TermDiagram")
        .def_readonly("levels", &TermDiagram::levels)
        .def_readonly("transitions", &TermDiagram::transitions);
    m.def("term_diagram", &term_diagram, py::arg("hamiltonian"));

    py::class_<SingleParticleEigensystem>(m, "SingleParticleEigensystem")
        .def_readonly("values", &SingleParticleEigensystem::values)
        .def_readonly("vectors", &SingleParticleEigensystem::vectors);
    m.def("single_particle_eigensystem", &single_particle_eigensystem, py::arg("spec"));
    m.def("expand_product", &expand_product, py::arg("mode_occupations"), py::arg("eigensystem"),
          py::arg("basis"));

    py::class_<ProductEigenstate>(m, "ProductEigenstate")
        .def_readonly("K", &ProductEigenstate::K)
        .def_readonly("mode_occupations", &ProductEigenstate::mode_occupations)
        .def_readonly("value", &ProductEigenstate::value);

    py::class_<MultiPhotonEigensystem>(m, "MultiPhotonEigensystem")
        .def_property_readonly("basis", &MultiPhotonEigensystem::basis)
        .def("__len__", &MultiPhotonEigensystem::size)
        .def("states", &MultiPhotonEigensystem::states)
        .def_property_readonly("values", &MultiPhotonEigensystem::values)
        .def_property_readonly("coefficients", &MultiPhotonEigensystem::coefficients)
        .def("coefficient_vector", &MultiPhotonEigensystem::coefficient_vector, py::arg("nu"));
    m.def("multi_photon_eigensystem",
          py::overload_cast<int, const LatticeSpec&, std::uint64_t>(&multi_photon_eigensystem),
          py::arg("photons"), py::arg("spec"), py::arg("basis_cap") = kDefaultBasisCap);

    py::class_<Eigensystem>(m, "Eigensystem")
        .def_readonly("values", &Eigensystem::values)
        .def_readonly("vectors", &Eigensystem::vectors);
    m.def("direct_diagonalize", &direct_diagonalize, py::arg("hamiltonian"),
          py::arg("dense_cap") = kDefaultDenseCap);

    py::class_<BenchmarkReport>(m, "BenchmarkReport")
        .def_readonly("photons", &BenchmarkReport::photons)
        .def_readonly("modes", &BenchmarkReport::modes)
        .def_readonly("dimension", &BenchmarkReport::dimension)
        .def_readonly("repeats", &BenchmarkReport::repeats)
        .def_readonly("product_seconds", &BenchmarkReport::product_seconds)
        .def_readonly("direct_seconds", &BenchmarkReport::direct_seconds)
        .def_readonly("product_seconds_median", &BenchmarkReport::product_seconds_median)
        .def_readonly("direct_seconds_median", &BenchmarkReport::direct_seconds_median)
        .def_readonly("spectrum_max_abs_diff", &BenchmarkReport::spectrum_max_abs_diff);
    m.def("benchmark_eigensystems", &benchmark_eigensystems, py::arg("photons"), py::arg("spec"),
          py::arg("repeats"), py::arg("basis_cap") = kDefaultBasisCap);

    py::class_<StateVector>(m, "StateVector")
        .def_static("fock", &StateVector::fock, py::arg("basis"), py::arg("state"))
        .def_static("superposition", &StateVector::superposition, py::arg("basis"),
                    py::arg("amplitudes"))
        .def_property_readonly("basis", &StateVector::basis)
        .def_property_readonly("amplitudes", &StateVector::amplitudes)
        .def("probabilities", &StateVector::probabilities)
        .def("norm", &StateVector::norm)
        .def("overlap", &StateVector::overlap, py::arg("other"));

    m.def("evolve", &evolve, py::arg("psi0"), py::arg("z"), py::arg("eigensystem"));

    py::class_<ProbabilityTrace>(m, "ProbabilityTrace")
        .def_readonly("basis", &ProbabilityTrace::basis)
        .def_readonly("z", &ProbabilityTrace::z)
        .def_readonly("probabilities", &ProbabilityTrace::probabilities);
    m.def("probability_trace", &probability_trace, py::arg("psi0"), py::arg("z_grid"),
          py::arg("eigensystem"));

    m.def("dark_state_spec", &dark_state_spec);
    m.def("dark_state", &dark_state, py::arg("spec"));
    m.def("dark_state_trace", &dark_state_trace, py::arg("z_grid"));

    py::enum_<MixtureKind>(m, "MixtureKind")
        .value("coherent", MixtureKind::coherent)
        .value("two_mode_squeezed", MixtureKind::two_mode_squeezed);

    py::class_<MixtureSector>(m, "MixtureSector")
        .def_readonly("photons", &MixtureSector::photons)
        .def_readonly("weight", &MixtureSector::weight)
        .def_readonly("initial", &MixtureSector::initial);

    py::class_<SectorMixture>(m, "SectorMixture")
        .def_readonly("kind", &SectorMixture::kind)
        .def_readonly("parameter", &SectorMixture::parameter)
        .def_readonly("tail", &SectorMixture::tail)
        .def_readonly("sectors", &SectorMixture::sectors);
    m.def("sector_mixture", &sector_mixture, py::arg("kind"), py::arg("parameter"),
          py::arg("tail_threshold"), py::arg("modes"),
          py::arg("injection") = std::vector<int>{});

    py::class_<SectorTrace>(m, "SectorTrace")
        .def_readonly("photons", &SectorTrace::photons)
        .def_readonly("weight", &SectorTrace::weight)
        .def_readonly("trace", &SectorTrace::trace);
    m.def("parallel_walk", &parallel_walk, py::arg("mixture"), py::arg("spec"), py::arg("z_grid"),
          py::arg("basis_cap") = kDefaultBasisCap);

    py::class_<GraphNode>(m, "GraphNode")
        .def_readonly("nu", &GraphNode::nu)
        .def_readonly("K", &GraphNode::K)
        .def_readonly("state", &GraphNode::state)
        .def_readonly("layer", &GraphNode::layer);
    py::class_<GraphEdge>(m, "GraphEdge")
        .def_readonly("u", &GraphEdge::u)
        .def_readonly("v", &GraphEdge::v)
        .def_readonly("weight", &GraphEdge::weight);

    py::class_<FockGraph>(m, "FockGraph")
        .def_property_readonly("photons", &FockGraph::photons)
        .def_property_readonly("modes", &FockGraph::modes)
        .def("__len__", &FockGraph::size)
        .def("nodes", &FockGraph::nodes)
        .def("edges", &FockGraph::edges)
        .def("adjacent", &FockGraph::adjacent, py::arg("u"), py::arg("v"))
        .def("degree", &FockGraph::degree, py::arg("nu"));
    m.def("build_graph", &build_graph, py::arg("photons"), py::arg("spec"),
          py::arg("basis_cap") = kDefaultBasisCap, py::arg("dense_cap") = kDefaultDenseCap);

    py::enum_<TransposeOrientation>(m, "TransposeOrientation")
        .value("reversed", TransposeOrientation::reversed)
        .value("direct", TransposeOrientation::direct);

    py::class_<StateBijection>(m, "StateBijection")
        .def_readonly("source_photons", &StateBijection::source_photons)
        .def_readonly("source_modes", &StateBijection::source_modes)
        .def_readonly("target_photons", &StateBijection::target_photons)
        .def_readonly("target_modes", &StateBijection::target_modes)
        .def_readonly("orientation", &StateBijection::orientation)
        .def_readonly("mapping", &StateBijection::mapping);
    m.def("conjugate_bijection", &conjugate_bijection, py::arg("photons"), py::arg("modes"),
          py::arg("orientation") = TransposeOrientation::reversed,
          py::arg("basis_cap") = kDefaultBasisCap);

    py::class_<IsomorphismReport>(m, "IsomorphismReport")
        .def_readonly("source_photons", &IsomorphismReport::source_photons)
        .def_readonly("source_modes", &IsomorphismReport::source_modes)
        .def_readonly("target_photons", &IsomorphismReport::target_photons)
        .def_readonly("target_modes", &IsomorphismReport::target_modes)
        .def_readonly("isomorphic", &IsomorphismReport::isomorphic)
        .def_readonly("orientation", &IsomorphismReport::orientation)
        .def_readonly("bijection", &IsomorphismReport::bijection);
    m.def("verify_isomorphism", &verify_isomorphism, py::arg("photons"), py::arg("modes"),
          py::arg("basis_cap") = kDefaultBasisCap, py::arg("dense_cap") = kDefaultDenseCap);

    m.def("graph_distance", &graph_distance, py::arg("graph"), py::arg("from_state"),
          py::arg("to_state"));

    py::enum_<GraphFormat>(m, "GraphFormat")
        .value("dot", GraphFormat::dot)
        .value("json", GraphFormat::json);
    m.def("export_graph", &export_graph, py::arg("graph"), py::arg("format"));
}
