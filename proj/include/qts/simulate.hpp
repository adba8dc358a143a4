#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qts/program.hpp"
#include "qts/rng.hpp"
#include "qts/statevector.hpp"

namespace qts {

/// Exact distribution over classical-register bitstrings (cbit 0 rightmost).
using Distribution = std::map<std::string, double>;

struct ShotResult {
    std::vector<std::uint8_t> cbits;
    StateVector state;
};

/// Runs `program` once from `initial`, measuring as instructions are met.
ShotResult run_shot(Program const& program, StateVector initial, Rng& rng);

/// Histogram of the classical register over `shots` independent executions.
Counts sample_program(Program const& program, StateVector const& initial, std::size_t shots, Rng& rng);

/// Exact classical-register distribution, computed by following every
/// measurement branch with its Born weight. Branches below 1e-15 are dropped.
Distribution exact_distribution(Program const& program, StateVector const& initial);

/// Marginal (P[bit = 0], P[bit = 1]) of one classical bit.
std::pair<double, double> cbit_marginal(Distribution const& dist, std::size_t cbit);

/// Half the L1 distance between two distributions over the same key space.
double total_variation(Distribution const& a, Distribution const& b);

/// Normalises counts into a distribution.
Distribution to_distribution(Counts const& counts);

/// The initial register for a program: `qubit0` on physical qubit 0 and
/// |0> everywhere else.
StateVector prepare_input(std::size_t n_qubits, Amplitude alpha, Amplitude beta);

}  // namespace qts
