#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "qts/knapsack.hpp"
#include "qts/rng.hpp"
#include "qts/statevector.hpp"

namespace qts {

/// How the initial population pairs up its qubits.
enum class PopulationMode {
    WithReplacement,     ///< uniform superposition, H on every qubit
    WithoutReplacement,  ///< Bell pairs on (2k, 2k+1); odd last qubit in |+>
};

struct SearchConfig {
    std::size_t max_iterations = 500;
    /// Iterations without improvement tolerated before an escape fires.
    std::size_t stagnation_limit = 20;
    /// Unset means max(2, n_items / 4).
    std::optional<std::size_t> tabu_tenure;
    PopulationMode population_mode = PopulationMode::WithReplacement;
    std::uint64_t seed = 0;

    std::size_t tenure_for(std::size_t n_items) const;

    /// Throws SizeError if a count is zero or the tenure is not below
    /// max_iterations.
    void validate(std::size_t n_items) const;
};

struct TabuEntry {
    std::size_t item = 0;
    std::size_t expiry = 0;  ///< first iteration at which the entry no longer applies

    friend bool operator==(TabuEntry const&, TabuEntry const&) = default;
};

struct TracePoint {
    std::size_t iteration = 0;
    double current_evaluation = 0.0;
    double best_evaluation = 0.0;

    friend bool operator==(TracePoint const&, TracePoint const&) = default;
};

struct SearchState {
    explicit SearchState(StateVector initial) : population(std::move(initial)) {}

    StateVector population;
    CandidateSolution current;
    double current_evaluation = 0.0;
    CandidateSolution best_solution;
    double best_evaluation = 0.0;
    std::size_t best_iteration = 0;
    /// Start of the current stagnation window: the last improvement or escape.
    std::size_t window_start = 0;
    std::size_t iteration = 0;
    std::size_t escapes = 0;
    std::deque<TabuEntry> tabu_list;  ///< oldest first
    std::vector<TracePoint> trace;

    bool is_tabu(std::size_t item) const;
    void purge_expired();
    bool stagnated(std::size_t stagnation_limit) const { return iteration - window_start > stagnation_limit; }
};

struct Move {
    CandidateSolution candidate;
    std::size_t flipped = 0;
    double evaluation = 0.0;
};

enum class EscapeBranch { Entangle, Superpose };

struct SearchResult {
    CandidateSolution best_solution;
    double best_evaluation = 0.0;
    std::size_t best_iteration = 0;
    std::size_t iterations_run = 0;
    std::size_t escapes = 0;
    std::vector<TracePoint> trace;

    friend bool operator==(SearchResult const&, SearchResult const&) = default;
};

/// The quantum population Q(t) over `n_items` qubits. No randomness is
/// consumed; the population is a pure state built from |0...0>.
StateVector init_population(std::size_t n_items, PopulationMode mode);

/// Born-rule draw of every qubit of a copy of `population`; bit i of the
/// result is qubit i. The population itself is left intact.
CandidateSolution sample_candidate(StateVector const& population, Rng& rng);

/// Single-bit flips of `s`, neighbour k flipping bit k.
std::vector<CandidateSolution> neighborhood(CandidateSolution const& s);

/**
 * @brief Picks the next move from the flip neighbourhood of `state.current`.
 *
 * The best-evaluated neighbour whose flipped item is not tabu wins, lowest
 * index on ties. A tabu neighbour is admissible when it strictly beats
 * `state.best_evaluation`. If nothing is admissible the item of the oldest
 * active tabu entry is flipped.
 */
Move select_move(SearchState const& state, KnapsackInstance const& instance);

/**
 * @brief Stagnation escape on the population.
 *
 * CX(0 -> 1) when bits 0 and 1 of the best solution differ, otherwise H on
 * qubit 1. With a single item the H lands on qubit 0. The current solution
 * is then resampled from the population and the stagnation window restarts
 * at the current iteration; the incumbent best is kept unless the sample
 * beats it.
 */
EscapeBranch escape(SearchState& state, KnapsackInstance const& instance, Rng& rng);

/// Population, first sample and incumbent at iteration 0.
SearchState start_search(KnapsackInstance const& instance, SearchConfig const& config, Rng& rng);

/// One iteration: optional escape, move selection, tabu update, incumbent
/// update, trace point.
void search_step(SearchState& state, KnapsackInstance const& instance, SearchConfig const& config, Rng& rng);

/// Full run of max_iterations steps seeded by `config.seed`.
SearchResult qts_run(KnapsackInstance const& instance, SearchConfig const& config);

}  // namespace qts
