#include "qts/map_search.hpp"

#include <algorithm>
#include <set>

#include <fmt/core.h>

#include "qts/errors.hpp"

namespace qts {

std::size_t MapSearchProblem::n_physical() const {
    std::size_t n = circuit.n_qubits;
    for (auto const& e : candidate_edges) n = std::max({n, e.control + 1, e.target + 1});
    return n;
}

void MapSearchProblem::validate() const {
    if (candidate_edges.size() > StateVector::max_qubits) {
        throw SizeError(fmt::format("{} candidate edges exceed the {}-item limit", candidate_edges.size(),
                                    StateVector::max_qubits));
    }
    CouplingMap(n_physical(), candidate_edges);  // invariant check only
    circuit.validate();
}

std::vector<Edge> all_directed_pairs(std::size_t n_qubits) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n_qubits; ++a) {
        for (std::size_t b = 0; b < n_qubits; ++b) {
            if (a != b) edges.push_back(Edge{a, b});
        }
    }
    return edges;
}

KnapsackInstance derive_knapsack(MapSearchProblem const& problem) {
    problem.validate();
    std::set<Edge> const candidates(problem.candidate_edges.begin(), problem.candidate_edges.end());

    KnapsackInstance instance;
    instance.max_capacity = static_cast<double>(problem.edge_budget);
    for (auto const& edge : problem.candidate_edges) {
        double profit = 0.0;
        for (auto const& inst : problem.circuit.instructions) {
            auto const* g = std::get_if<GateOp>(&inst);
            if (!g || g->kind != GateKind::CX) continue;
            Edge const cx{*g->control, g->target};
            if (cx == edge) {
                profit += 1.0;
            } else if (cx.reversed() == edge && !candidates.contains(cx)) {
                profit += 0.5;
            }
        }
        instance.profits.push_back(profit);
        instance.weights.push_back(1.0);
    }
    return instance;
}

CouplingMap decode(CandidateSolution const& bits, MapSearchProblem const& problem) {
    if (bits.size() != problem.candidate_edges.size()) {
        throw ShapeError(fmt::format("selection has {} bits for {} candidates", bits.size(),
                                     problem.candidate_edges.size()));
    }
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits.bits[i]) chosen.push_back(problem.candidate_edges[i]);
    }
    return CouplingMap(problem.n_physical(), std::move(chosen));
}

CandidateSolution encode(CouplingMap const& map, MapSearchProblem const& problem) {
    CandidateSolution bits;
    bits.bits.assign(problem.candidate_edges.size(), 0);
    for (auto const& e : map.edges()) {
        auto const it = std::find(problem.candidate_edges.begin(), problem.candidate_edges.end(), e);
        if (it == problem.candidate_edges.end()) {
            throw FormatError(fmt::format("edge [{}, {}] is not a candidate", e.control, e.target));
        }
        bits.bits[static_cast<std::size_t>(it - problem.candidate_edges.begin())] = 1;
    }
    return bits;
}

ScoredMap score_selection(CandidateSolution const& bits, MapSearchProblem const& problem) {
    ScoredMap scored;
    scored.map = decode(bits, problem);
    scored.selection = bits;
    scored.score = fitness(derive_knapsack(problem), bits);
    scored.support = direct_support_count(problem.circuit, scored.map);
    try {
        scored.routing = route(problem.circuit, scored.map).report;
    } catch (RoutingError const&) {
        scored.routing.reset();
    }
    return scored;
}

CandidateSolution prune_selection(CandidateSolution bits, KnapsackInstance const& instance) {
    double value = fitness(instance, bits);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (!bits.bits[i]) continue;
        bits.bits[i] = 0;
        double const without = fitness(instance, bits);
        if (without >= value) {
            value = without;
        } else {
            bits.bits[i] = 1;
        }
    }
    return bits;
}

ScoredMap search_best_map(MapSearchProblem const& problem, SearchConfig const& config) {
    auto const instance = derive_knapsack(problem);
    if (instance.n_items() == 0) return score_selection(CandidateSolution{}, problem);
    SearchResult const result = qts_run(instance, config);
    ScoredMap scored = score_selection(prune_selection(result.best_solution, instance), problem);
    scored.best_iteration = result.best_iteration;
    scored.iterations_run = result.iterations_run;
    return scored;
}

}  // namespace qts
