#pragma once

#include "focklat/hamiltonian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace focklat {

struct GraphNode {
    std::size_t nu = 0;   ///< basis index, 1-based
    std::uint64_t K = 0;
    FockState state;
    int layer = 0;        ///< last-mode occupation n_M
};

struct GraphEdge {
    std::size_t u = 0;    ///< 1-based, u < v
    std::size_t v = 0;
    double weight = 0.0;  ///< |H_uv|
};

/**
 The Fock graph of an array: vertices are Fock states in pseudo-energy order,
 edges are the allowed transitions (nonzero off-diagonal entries of the
 effective Hamiltonian). Built with all beta = 0 so the graph has no
 self-loops.
 */
class FockGraph {
public:
    FockGraph(int photons, int modes, std::vector<GraphNode> nodes, std::vector<GraphEdge> edges);

    int photons() const { return photons_; }
    int modes() const { return modes_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<GraphNode>& nodes() const { return nodes_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    bool adjacent(std::size_t u, std::size_t v) const;  ///< 1-based
    std::size_t degree(std::size_t nu) const;

private:
    int photons_;
    int modes_;
    std::vector<GraphNode> nodes_;
    std::vector<GraphEdge> edges_;
    std::vector<std::uint8_t> adjacency_;  // row-major size() x size()
};

/// Adjacency is |H_mu_nu| > eps with eps = 1e-12 * max|H|, off-diagonal only,
/// so exact zeros never create edges and coupling signs do not matter.
/// Rejects specs with any nonzero beta.
FockGraph build_graph(int photons, const LatticeSpec& spec,
                      std::uint64_t basis_cap = kDefaultBasisCap,
                      std::size_t dense_cap = kDefaultDenseCap);

/// The stars-and-bars word of a state can be transposed as written (`direct`)
/// or reversed first (`reversed`); the reversed form is the usual partition
/// conjugation and maps self-dual spaces to the identity.
enum class TransposeOrientation { reversed, direct };

/**
 Pairing of the (N, M) basis with the (M-1, N+1) basis induced by transposing
 each state's stars-and-bars word. `mapping[nu - 1]` is the 1-based target
 index of source state nu; the pairing is a bijection by construction.
 */
struct StateBijection {
    int source_photons = 0;
    int source_modes = 0;
    int target_photons = 0;
    int target_modes = 0;
    TransposeOrientation orientation = TransposeOrientation::reversed;
    std::vector<std::size_t> mapping;
};

StateBijection conjugate_bijection(int photons, int modes,
                                   TransposeOrientation orientation = TransposeOrientation::reversed,
                                   std::uint64_t basis_cap = kDefaultBasisCap);

struct IsomorphismReport {
    int source_photons = 0;
    int source_modes = 0;
    int target_photons = 0;
    int target_modes = 0;
    bool isomorphic = false;
    TransposeOrientation orientation = TransposeOrientation::reversed;  ///< the matching orientation
    StateBijection bijection;
};

/// Checks that the conjugate bijection carries the unit-coupling Fock graph
/// of (N, M) onto the one of (M-1, N+1) exactly, trying the reversed
/// orientation first and falling back to the direct one.
IsomorphismReport verify_isomorphism(int photons, int modes,
                                     std::uint64_t basis_cap = kDefaultBasisCap,
                                     std::size_t dense_cap = kDefaultDenseCap);

/// Shortest-path hop count between two states by breadth-first search;
/// nullopt when the states are disconnected.
std::optional<int> graph_distance(const FockGraph& graph, const FockState& from,
                                  const FockState& to);

enum class GraphFormat { dot, json };

/// Deterministic serialization: nodes in K order, edges lexicographic.
/// DOT node ids are "K<value>" with the occupation label and layer attached;
/// JSON mirrors {photons, modes, nodes, edges}.
std::string export_graph(const FockGraph& graph, GraphFormat format);

} // namespace focklat
