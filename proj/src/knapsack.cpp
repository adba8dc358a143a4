#include "qts/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/core.h>

#include "qts/errors.hpp"

namespace qts {

std::string CandidateSolution::to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out += b ? '1' : '0';
    return out;
}

void KnapsackInstance::validate() const {
    if (profits.size() != weights.size()) {
        throw ShapeError(fmt::format("{} profits but {} weights", profits.size(), weights.size()));
    }
    auto negative = [](double v) { return !(v >= 0.0) || !std::isfinite(v); };
    if (std::any_of(profits.begin(), profits.end(), negative) || std::any_of(weights.begin(), weights.end(), negative) ||
        negative(max_capacity)) {
        throw FormatError("profits, weights and capacity must be finite and non-negative");
    }
}

double fitness(KnapsackInstance const& instance, CandidateSolution const& s) {
    if (s.size() != instance.n_items() || instance.weights.size() != instance.n_items()) {
        throw ShapeError(fmt::format("solution has {} bits, instance has {} items", s.size(), instance.n_items()));
    }
    double profit = 0.0;
    double weight = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.bits[i]) {
            profit += instance.profits[i];
            weight += instance.weights[i];
        }
    }
    return profit * (1.0 - std::max(0.0, weight - instance.max_capacity));
}

KnapsackInstance parse_knapsack(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0;
    KnapsackInstance instance;
    if (!(in >> n >> instance.max_capacity) || n < 0) {
        throw FormatError("expected header line `n cap`");
    }
    for (long long i = 0; i < n; ++i) {
        double b = 0.0;
        double w = 0.0;
        if (!(in >> b >> w)) throw FormatError(fmt::format("expected `b w` for item {} of {}", i, n));
        instance.profits.push_back(b);
        instance.weights.push_back(w);
    }
    std::string trailing;
    if (in >> trailing) throw FormatError(fmt::format("unexpected trailing token '{}'", trailing));
    instance.validate();
    return instance;
}

std::string serialize_knapsack(KnapsackInstance const& instance) {
    std::string out = fmt::format("{} {}\n", instance.n_items(), instance.max_capacity);
    for (std::size_t i = 0; i < instance.n_items(); ++i) {
        out += fmt::format("{} {}\n", instance.profits[i], instance.weights[i]);
    }
    return out;
}

}  // namespace qts
