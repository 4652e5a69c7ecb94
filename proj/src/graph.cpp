#include "focklat/graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace focklat {

namespace {

std::string format_weight(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

// Stars-and-bars word of an occupation list: n_1 stars, bar, n_2 stars, ...
// Encoded as bools, true = star.
std::vector<bool> star_bar_word(const FockState& state) {
    std::vector<bool> word;
    word.reserve(static_cast<std::size_t>(state.photons() + state.modes() - 1));
    for (int m = 1; m <= state.modes(); ++m) {
        word.insert(word.end(), static_cast<std::size_t>(state.occupation(m)), true);
        if (m != state.modes()) word.push_back(false);
    }
    return word;
}

FockState parse_star_bar_word(const std::vector<bool>& word) {
    std::vector<int> occupations(1, 0);
    for (bool star : word) {
        if (star) {
            ++occupations.back();
        } else {
            occupations.push_back(0);
        }
    }
    return FockState(std::move(occupations));
}

} // namespace

FockGraph::FockGraph(int photons, int modes, std::vector<GraphNode> nodes,
                     std::vector<GraphEdge> edges)
    : photons_(photons), modes_(modes), nodes_(std::move(nodes)), edges_(std::move(edges)),
      adjacency_(nodes_.size() * nodes_.size(), 0) {
    const std::size_t n = nodes_.size();
    for (const GraphEdge& e : edges_) {
        if (e.u < 1 || e.v < 1 || e.u > n || e.v > n || e.u >= e.v) {
            throw std::invalid_argument("graph edge indices must satisfy 1 <= u < v <= size");
        }
        adjacency_[(e.u - 1) * n + (e.v - 1)] = 1;
        adjacency_[(e.v - 1) * n + (e.u - 1)] = 1;
    }
}

bool FockGraph::adjacent(std::size_t u, std::size_t v) const {
    const std::size_t n = nodes_.size();
    if (u < 1 || v < 1 || u > n || v > n) {
        throw std::invalid_argument("node index out of range");
    }
    return adjacency_[(u - 1) * n + (v - 1)] != 0;
}

std::size_t FockGraph::degree(std::size_t nu) const {
    const std::size_t n = nodes_.size();
    if (nu < 1 || nu > n) {
        throw std::invalid_argument("node index out of range");
    }
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v) count += adjacency_[(nu - 1) * n + v];
    return count;
}

FockGraph build_graph(int photons, const LatticeSpec& spec, std::uint64_t basis_cap,
                      std::size_t dense_cap) {
    if (!spec.all_beta_zero()) {
        throw std::invalid_argument("Fock graphs are built with beta = 0 (no self-loops)");
    }
    const EffectiveHamiltonian hamiltonian = build_hamiltonian(photons, spec, basis_cap);
    const Basis& basis = hamiltonian.basis();
    if (basis.size() > dense_cap) {
        throw std::length_error("adjacency matrix of " + std::to_string(basis.size()) +
                                " nodes refused (cap " + std::to_string(dense_cap) + ")");
    }

    std::vector<GraphNode> nodes;
    nodes.reserve(basis.size());
    for (std::size_t nu = 1; nu <= basis.size(); ++nu) {
        const BasisEntry& entry = basis.entry(nu);
        nodes.push_back({nu, entry.K, entry.state, entry.state.occupation(basis.modes())});
    }

    const double epsilon = 1e-12 * hamiltonian.max_abs();
    std::vector<GraphEdge> edges;
    for (const HamiltonianEntry& e : hamiltonian.entries()) {
        if (e.mu >= e.nu) continue;
        if (std::abs(e.value) > epsilon) {
            edges.push_back({e.mu, e.nu, std::abs(e.value)});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });

    return FockGraph(photons, spec.modes(), std::move(nodes), std::move(edges));
}

StateBijection conjugate_bijection(int photons, int modes, TransposeOrientation orientation,
                                   std::uint64_t basis_cap) {
    if (modes < 2) {
        throw std::invalid_argument("the conjugate space needs M >= 2 (target photons M-1 >= 1)");
    }
    const Basis source(photons, modes, basis_cap);
    const Basis target(modes - 1, photons + 1, basis_cap);

    StateBijection bijection;
    bijection.source_photons = photons;
    bijection.source_modes = modes;
    bijection.target_photons = modes - 1;
    bijection.target_modes = photons + 1;
    bijection.orientation = orientation;
    bijection.mapping.reserve(source.size());

    for (const BasisEntry& entry : source.entries()) {
        std::vector<bool> word = star_bar_word(entry.state);
        if (orientation == TransposeOrientation::reversed) {
            std::reverse(word.begin(), word.end());
        }
        word.flip();  // stars <-> bars
        bijection.mapping.push_back(target.index_of(parse_star_bar_word(word)));
    }
    return bijection;
}

IsomorphismReport verify_isomorphism(int photons, int modes, std::uint64_t basis_cap,
                                     std::size_t dense_cap) {
    // Topology only: both graphs use unit couplings.
    const FockGraph source =
        build_graph(photons, LatticeSpec::uniform_chain(modes, 1.0), basis_cap, dense_cap);
    const FockGraph target =
        build_graph(modes - 1, LatticeSpec::uniform_chain(photons + 1, 1.0), basis_cap, dense_cap);

    IsomorphismReport report;
    report.source_photons = photons;
    report.source_modes = modes;
    report.target_photons = modes - 1;
    report.target_modes = photons + 1;

    const std::size_t n = source.size();
    for (TransposeOrientation orientation :
         {TransposeOrientation::reversed, TransposeOrientation::direct}) {
        StateBijection bijection = conjugate_bijection(photons, modes, orientation, basis_cap);
        bool matches = target.size() == n;
        for (std::size_t mu = 1; matches && mu <= n; ++mu) {
            for (std::size_t nu = mu + 1; nu <= n; ++nu) {
                if (source.adjacent(mu, nu) !=
                    target.adjacent(bijection.mapping[mu - 1], bijection.mapping[nu - 1])) {
                    matches = false;
                    break;
                }
            }
        }
        if (matches) {
            report.isomorphic = true;
            report.orientation = orientation;
            report.bijection = std::move(bijection);
            return report;
        }
        if (orientation == TransposeOrientation::reversed) {
            report.bijection = std::move(bijection);  // keep one mapping for diagnostics
        }
    }
    report.isomorphic = false;
    return report;
}

std::optional<int> graph_distance(const FockGraph& graph, const FockState& from,
                                  const FockState& to) {
    const auto find_node = [&](const FockState& state) -> std::size_t {
        for (const GraphNode& node : graph.nodes()) {
            if (node.state == state) return node.nu;
        }
        throw std::invalid_argument("state |" + state.label() + "> is not a node of the graph");
    };
    const std::size_t start = find_node(from);
    const std::size_t goal = find_node(to);
    if (start == goal) return 0;

    std::vector<int> distance(graph.size() + 1, -1);
    distance[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v = 1; v <= graph.size(); ++v) {
            if (distance[v] >= 0 || !graph.adjacent(u, v)) continue;
            distance[v] = distance[u] + 1;
            if (v == goal) return distance[v];
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

std::string export_graph(const FockGraph& graph, GraphFormat format) {
    if (format == GraphFormat::dot) {
        std::ostringstream out;
        out << "graph fock {\n";
        for (const GraphNode& node : graph.nodes()) {
            out << "  \"K" << node.K << "\" [label=\"" << node.state.label() << "\", nu="
                << node.nu << ", layer=" << node.layer << "];\n";
        }
        for (const GraphEdge& edge : graph.edges()) {
            out << "  \"K" << graph.nodes()[edge.u - 1].K << "\" -- \"K"
                << graph.nodes()[edge.v - 1].K << "\" [weight=" << format_weight(edge.weight)
                << "];\n";
        }
        out << "}\n";
        return out.str();
    }

    nlohmann::ordered_json doc;
    doc["photons"] = graph.photons();
    doc["modes"] = graph.modes();
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const GraphNode& node : graph.nodes()) {
        doc["nodes"].push_back({{"nu", node.nu},
                                {"K", node.K},
                                {"occupations", node.state.occupations()},
                                {"layer", node.layer}});
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const GraphEdge& edge : graph.edges()) {
        doc["edges"].push_back({{"u", edge.u}, {"v", edge.v}, {"weight", edge.weight}});
    }
    return doc.dump(2) + "\n";
}

} // namespace focklat
