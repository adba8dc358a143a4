#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qts {

/// Bit assignment s over the items of an instance; s_i = 1 selects item i.
struct CandidateSolution {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }

    /// Item 0 leftmost, e.g. "101" for bits (1, 0, 1).
    std::string to_string() const;

    friend bool operator==(CandidateSolution const&, CandidateSolution const&) = default;
};

struct KnapsackInstance {
    std::vector<double> profits;
    std::vector<double> weights;
    double max_capacity = 0.0;

    std::size_t n_items() const { return profits.size(); }

    /// Throws ShapeError on length mismatch, FormatError on negative data.
    void validate() const;
};

/**
 * Penalised knapsack objective
 *
 *   f(s) = sum_i b_i s_i * (1 - max(0, sum_i w_i s_i - capacity))
 *
 * evaluated exactly as written: an overload larger than 1 drives the value
 * negative in proportion to the excess.
 *
 * @throws ShapeError if `s` and the instance differ in length
 */
double fitness(KnapsackInstance const& instance, CandidateSolution const& s);

/// Text format: `n cap` on the first line, then n lines `b_i w_i`.
/// Throws FormatError.
KnapsackInstance parse_knapsack(std::string_view text);

std::string serialize_knapsack(KnapsackInstance const& instance);

}  // namespace qts
