#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qts/coupling_map.hpp"
#include "qts/knapsack.hpp"
#include "qts/program.hpp"
#include "qts/router.hpp"
#include "qts/tabu_search.hpp"

namespace qts {

/// Coupling-map selection framed as a knapsack: one item per candidate edge.
struct MapSearchProblem {
    Program circuit;
    std::vector<Edge> candidate_edges;
    std::size_t edge_budget = 6;

    /// Physical qubits spanned by the circuit and the candidates.
    std::size_t n_physical() const;

    /// Throws FormatError on duplicate or self-loop candidates and SizeError
    /// when there are more than 20 of them.
    void validate() const;
};

struct ScoredMap {
    CouplingMap map;
    CandidateSolution selection;
    double score = 0.0;
    /// Unset when the map cannot route the circuit (e.g. an empty map).
    std::optional<RoutingReport> routing;
    SupportCount support;
    std::size_t best_iteration = 0;
    std::size_t iterations_run = 0;
};

/// Every ordered pair (a, b), a != b, over `n_qubits`, row-major.
std::vector<Edge> all_directed_pairs(std::size_t n_qubits);

/**
 * @brief Knapsack view of a map-search problem.
 *
 * Item i is candidate edge i with unit weight; capacity is the edge budget.
 * Its profit counts the circuit CXs running exactly along it, plus 0.5 for
 * each CX running against it whose own direction is not itself a candidate.
 * A CX therefore earns at most 1 no matter how many edges are chosen, and
 * a reverse edge only pays when it is the only way to host that CX.
 */
KnapsackInstance derive_knapsack(MapSearchProblem const& problem);

/// Selected candidate edges, in candidate order.
CouplingMap decode(CandidateSolution const& bits, MapSearchProblem const& problem);

/// Selection bits for `map`; throws FormatError if it uses a non-candidate edge.
CandidateSolution encode(CouplingMap const& map, MapSearchProblem const& problem);

/// Score, routing and support figures for an explicit selection.
ScoredMap score_selection(CandidateSolution const& bits, MapSearchProblem const& problem);

/// Drops selected edges, in candidate order, whenever doing so does not
/// lower the fitness. The result scores at least as well as `bits`.
CandidateSolution prune_selection(CandidateSolution bits, KnapsackInstance const& instance);

/// One tabu run on the derived instance; the best selection is pruned,
/// decoded and scored.
ScoredMap search_best_map(MapSearchProblem const& problem, SearchConfig const& config);

}  // namespace qts
