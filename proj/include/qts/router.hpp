#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qts/coupling_map.hpp"
#include "qts/program.hpp"

namespace qts {

/// Tallies for one routing pass. Each source CX lands in exactly one of
/// direct_count or reversed_count according to how its final gate was
/// placed; swap_count counts inserted SWAPs. inserted_gate_count is the
/// growth in instruction count: 3 CX per SWAP plus 4 H per reversed CX,
/// including reversals inside SWAP decompositions.
struct RoutingReport {
    std::size_t direct_count = 0;
    std::size_t reversed_count = 0;
    std::size_t swap_count = 0;
    std::size_t inserted_gate_count = 0;

    friend bool operator==(RoutingReport const&, RoutingReport const&) = default;
};

struct RoutedProgram {
    Program program;
    RoutingReport report;
    /// layout[logical] = physical qubit holding it after the last instruction.
    std::vector<std::size_t> layout;
};

/**
 * @brief Rewrites `program` so every CX lies on a directed edge of `map`.
 *
 * Greedy per gate: a CX whose endpoints are adjacent is emitted directly or
 * reversed with Hadamards. Otherwise the control walks along the BFS
 * shortest undirected path (lowest-index intermediates first) by SWAPs
 * until it neighbours the target. Later gates and measurements follow the
 * updated logical-to-physical layout. Without a map the program is returned
 * unchanged.
 *
 * @throws RoutingError if the map has fewer qubits than the program or a
 *         CX joins qubits in different components
 */
RoutedProgram route(Program const& program, std::optional<CouplingMap> const& map);

struct SupportCount {
    std::size_t direct = 0;
    std::size_t reversed = 0;
    std::size_t unsupported = 0;

    friend bool operator==(SupportCount const&, SupportCount const&) = default;
};

/// Classifies every CX under the identity layout: on an edge, only on the
/// reverse edge, or neither.
SupportCount direct_support_count(Program const& program, CouplingMap const& map);

}  // namespace qts
