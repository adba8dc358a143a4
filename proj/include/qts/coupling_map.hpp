#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qts {

/// Directed coupling (control, target) between two physical qubits.
struct Edge {
    std::size_t control = 0;
    std::size_t target = 0;

    Edge reversed() const { return {target, control}; }

    friend auto operator<=>(Edge const&, Edge const&) = default;
};

/**
 * @brief Directed graph of the two-qubit interactions a device supports.
 *
 * An edge (a, b) permits `cx q[a],q[b]`. Edges keep their source order;
 * self-loops, duplicates and endpoints >= n_physical are rejected.
 */
class CouplingMap {
public:
    CouplingMap() = default;

    /// Throws FormatError if the edge list violates the invariants.
    CouplingMap(std::size_t n_physical, std::vector<Edge> edges);

    /// n_physical = 1 + largest endpoint (0 for an empty list).
    explicit CouplingMap(std::vector<Edge> edges);

    std::size_t n_physical() const { return _n_physical; }
    std::vector<Edge> const& edges() const { return _edges; }
    bool empty() const { return _edges.empty(); }

    bool has_edge(std::size_t control, std::size_t target) const;
    bool has_edge(Edge e) const { return has_edge(e.control, e.target); }

    /// Undirected neighbours of `qubit` in ascending order.
    std::vector<std::size_t> neighbours(std::size_t qubit) const;

    /// Pair-list notation, e.g. `[[0, 1], [1, 2]]`.
    std::string to_string() const;

    friend bool operator==(CouplingMap const&, CouplingMap const&) = default;

private:
    std::size_t _n_physical = 0;
    std::vector<Edge> _edges;
};

/// Parses `[[a, b], ...]`. `n_physical` overrides the inferred qubit count
/// and must cover every endpoint. Throws FormatError.
CouplingMap parse_coupling_map(std::string_view text, std::optional<std::size_t> n_physical = std::nullopt);

/// Parses a bare pair list into edges without the map invariants.
std::vector<Edge> parse_edge_list(std::string_view text);

}  // namespace qts
