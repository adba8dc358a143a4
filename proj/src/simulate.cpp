#include "qts/simulate.hpp"

#include <cmath>
#include <set>

#include <fmt/core.h>

#include "qts/errors.hpp"

namespace qts {

namespace {

void check_register(Program const& program, StateVector const& state) {
    if (state.num_qubits() != program.n_qubits) {
        throw ShapeError(fmt::format("initial state has {} qubits, program needs {}", state.num_qubits(),
                                     program.n_qubits));
    }
}

std::string cbit_label(std::vector<std::uint8_t> const& cbits) {
    std::string label(cbits.size(), '0');
    for (std::size_t k = 0; k < cbits.size(); ++k) {
        if (cbits[k]) label[cbits.size() - 1 - k] = '1';
    }
    return label;
}

struct Branch {
    double weight;
    StateVector state;
    std::vector<std::uint8_t> cbits;
};

}  // namespace

ShotResult run_shot(Program const& program, StateVector initial, Rng& rng) {
    check_register(program, initial);
    ShotResult result{std::vector<std::uint8_t>(program.n_cbits, 0), std::move(initial)};
    for (auto const& inst : program.instructions) {
        if (auto const* g = std::get_if<GateOp>(&inst)) {
            result.state.apply(*g, result.cbits);
        } else {
            auto const& m = std::get<MeasureOp>(inst);
            if (m.cbit >= result.cbits.size()) throw IndexError(fmt::format("classical bit {} out of range", m.cbit));
            result.cbits[m.cbit] = static_cast<std::uint8_t>(result.state.measure(m.qubit, rng));
        }
    }
    return result;
}

Counts sample_program(Program const& program, StateVector const& initial, std::size_t shots, Rng& rng) {
    Counts counts;
    for (std::size_t s = 0; s < shots; ++s) ++counts[cbit_label(run_shot(program, initial, rng).cbits)];
    return counts;
}

Distribution exact_distribution(Program const& program, StateVector const& initial) {
    check_register(program, initial);
    program.validate();
    std::vector<Branch> branches;
    branches.push_back(Branch{1.0, initial, std::vector<std::uint8_t>(program.n_cbits, 0)});

    for (auto const& inst : program.instructions) {
        if (auto const* g = std::get_if<GateOp>(&inst)) {
            for (auto& b : branches) b.state.apply(*g, b.cbits);
            continue;
        }
        auto const& m = std::get<MeasureOp>(inst);
        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (auto& b : branches) {
            double const p1 = b.state.probability_one(m.qubit);
            for (int outcome : {0, 1}) {
                double const weight = b.weight * (outcome == 1 ? p1 : 1.0 - p1);
                if (weight < 1e-15) continue;
                Branch child{weight, b.state, b.cbits};
                child.state.collapse(m.qubit, outcome);
                child.cbits[m.cbit] = static_cast<std::uint8_t>(outcome);
                next.push_back(std::move(child));
            }
        }
        branches = std::move(next);
    }

    Distribution dist;
    for (auto const& b : branches) dist[cbit_label(b.cbits)] += b.weight;
    return dist;
}

std::pair<double, double> cbit_marginal(Distribution const& dist, std::size_t cbit) {
    double p0 = 0.0;
    double p1 = 0.0;
    for (auto const& [label, p] : dist) {
        if (cbit >= label.size()) throw IndexError(fmt::format("classical bit {} out of range", cbit));
        (label[label.size() - 1 - cbit] == '1' ? p1 : p0) += p;
    }
    return {p0, p1};
}

double total_variation(Distribution const& a, Distribution const& b) {
    std::set<std::string> keys;
    for (auto const& [k, _] : a) keys.insert(k);
    for (auto const& [k, _] : b) keys.insert(k);
    double sum = 0.0;
    for (auto const& k : keys) {
        auto const ia = a.find(k);
        auto const ib = b.find(k);
        sum += std::abs((ia == a.end() ? 0.0 : ia->second) - (ib == b.end() ? 0.0 : ib->second));
    }
    return 0.5 * sum;
}

Distribution to_distribution(Counts const& counts) {
    std::uint64_t total = 0;
    for (auto const& [_, n] : counts) total += n;
    Distribution dist;
    if (total == 0) return dist;
    for (auto const& [k, n] : counts) dist[k] = static_cast<double>(n) / static_cast<double>(total);
    return dist;
}

StateVector prepare_input(std::size_t n_qubits, Amplitude alpha, Amplitude beta) {
    StateVector probe(n_qubits);  // validates n_qubits
    std::vector<Amplitude> amplitudes(probe.dimension(), Amplitude{0.0, 0.0});
    amplitudes[0] = alpha;
    amplitudes[1] = beta;
    return StateVector::from_amplitudes(std::move(amplitudes));
}

}  // namespace qts
