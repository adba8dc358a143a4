#include "qts/tabu_search.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "qts/errors.hpp"

namespace qts {

std::size_t SearchConfig::tenure_for(std::size_t n_items) const {
    return tabu_tenure.value_or(std::max<std::size_t>(2, n_items / 4));
}

void SearchConfig::validate(std::size_t n_items) const {
    if (max_iterations < 1 || stagnation_limit < 1) throw SizeError("iteration counts must be at least 1");
    std::size_t const tenure = tenure_for(n_items);
    if (tenure < 1) throw SizeError("tabu tenure must be at least 1");
    if (tenure >= max_iterations) {
        throw SizeError(fmt::format("tabu tenure {} must be below max_iterations {}", tenure, max_iterations));
    }
}

bool SearchState::is_tabu(std::size_t item) const {
    return std::any_of(tabu_list.begin(), tabu_list.end(),
                       [&](TabuEntry const& e) { return e.item == item && e.expiry > iteration; });
}

void SearchState::purge_expired() {
    std::erase_if(tabu_list, [&](TabuEntry const& e) { return e.expiry <= iteration; });
}

StateVector init_population(std::size_t n_items, PopulationMode mode) {
    StateVector population(n_items);
    if (mode == PopulationMode::WithReplacement) {
        for (std::size_t q = 0; q < n_items; ++q) population.apply_h(q);
        return population;
    }
    std::size_t q = 0;
    for (; q + 1 < n_items; q += 2) {
        population.apply_h(q);
        population.apply_cx(q, q + 1);
    }
    if (q < n_items) population.apply_h(q);
    return population;
}

CandidateSolution sample_candidate(StateVector const& population, Rng& rng) {
    std::uint64_t const index = population.sample_index(rng);
    CandidateSolution s;
    s.bits.resize(population.num_qubits());
    for (std::size_t i = 0; i < s.bits.size(); ++i) s.bits[i] = static_cast<std::uint8_t>((index >> i) & 1U);
    return s;
}

std::vector<CandidateSolution> neighborhood(CandidateSolution const& s) {
    std::vector<CandidateSolution> out(s.size(), s);
    for (std::size_t k = 0; k < s.size(); ++k) out[k].bits[k] ^= 1U;
    return out;
}

Move select_move(SearchState const& state, KnapsackInstance const& instance) {
    auto const neighbours = neighborhood(state.current);
    if (neighbours.empty()) throw SizeError("empty neighbourhood");

    std::optional<Move> best;
    for (std::size_t k = 0; k < neighbours.size(); ++k) {
        double const value = fitness(instance, neighbours[k]);
        bool const admissible = !state.is_tabu(k) || value > state.best_evaluation;
        if (admissible && (!best || value > best->evaluation)) best = Move{neighbours[k], k, value};
    }
    if (best) return *best;

    auto const oldest = std::find_if(state.tabu_list.begin(), state.tabu_list.end(),
                                     [&](TabuEntry const& e) { return e.expiry > state.iteration; });
    if (oldest == state.tabu_list.end()) throw InternalError("no admissible move and no active tabu entry");
    auto const& chosen = neighbours.at(oldest->item);
    return Move{chosen, oldest->item, fitness(instance, chosen)};
}

EscapeBranch escape(SearchState& state, KnapsackInstance const& instance, Rng& rng) {
    auto const& best = state.best_solution.bits;
    EscapeBranch branch = EscapeBranch::Superpose;
    if (best.size() >= 2 && best[0] != best[1]) {
        state.population.apply_cx(0, 1);
        branch = EscapeBranch::Entangle;
    } else {
        state.population.apply_h(best.size() >= 2 ? 1 : 0);
    }

    state.current = sample_candidate(state.population, rng);
    state.current_evaluation = fitness(instance, state.current);
    if (state.current_evaluation > state.best_evaluation) {
        state.best_solution = state.current;
        state.best_evaluation = state.current_evaluation;
        state.best_iteration = state.iteration;
    }
    state.window_start = state.iteration;
    ++state.escapes;
    return branch;
}

SearchState start_search(KnapsackInstance const& instance, SearchConfig const& config, Rng& rng) {
    instance.validate();
    config.validate(instance.n_items());
    if (instance.n_items() < 1 || instance.n_items() > StateVector::max_qubits) {
        throw SizeError(fmt::format("instance has {} items, supported range is [1, {}]", instance.n_items(),
                                    StateVector::max_qubits));
    }
    SearchState state{init_population(instance.n_items(), config.population_mode)};
    state.current = sample_candidate(state.population, rng);
    state.current_evaluation = fitness(instance, state.current);
    state.best_solution = state.current;
    state.best_evaluation = state.current_evaluation;
    return state;
}

void search_step(SearchState& state, KnapsackInstance const& instance, SearchConfig const& config, Rng& rng) {
    ++state.iteration;
    state.purge_expired();
    if (state.stagnated(config.stagnation_limit)) escape(state, instance, rng);

    Move move = select_move(state, instance);
    state.current = std::move(move.candidate);
    state.current_evaluation = move.evaluation;

    std::size_t const tenure = config.tenure_for(instance.n_items());
    std::erase_if(state.tabu_list, [&](TabuEntry const& e) { return e.item == move.flipped; });
    state.tabu_list.push_back(TabuEntry{move.flipped, state.iteration + tenure});
    while (state.tabu_list.size() > tenure) state.tabu_list.pop_front();

    if (move.evaluation > state.best_evaluation) {
        state.best_solution = state.current;
        state.best_evaluation = move.evaluation;
        state.best_iteration = state.iteration;
        state.window_start = state.iteration;
    }
    state.trace.push_back(TracePoint{state.iteration, state.current_evaluation, state.best_evaluation});
}

SearchResult qts_run(KnapsackInstance const& instance, SearchConfig const& config) {
    Rng rng(config.seed);
    SearchState state = start_search(instance, config, rng);
    state.trace.reserve(config.max_iterations);
    while (state.iteration < config.max_iterations) search_step(state, instance, config, rng);
    return SearchResult{std::move(state.best_solution), state.best_evaluation, state.best_iteration,
                        state.iteration, state.escapes, std::move(state.trace)};
}

}  // namespace qts
