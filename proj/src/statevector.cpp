#include "qts/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "qts/errors.hpp"

namespace qts {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

bool bit_set(std::uint64_t index, std::size_t qubit) { return (index >> qubit) & 1U; }

std::uint64_t draw_from_cumulative(std::span<double const> cumulative, Rng& rng) {
    double const r = rng.uniform() * cumulative.back();
    auto const it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    auto index = static_cast<std::uint64_t>(it - cumulative.begin());
    // r < back() always holds, but guard against a trailing run of zeros
    return std::min<std::uint64_t>(index, cumulative.size() - 1);
}

}  // namespace

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::H: return "h";
        case GateKind::CX: return "cx";
    }
    return "?";
}

std::string basis_label(std::uint64_t index, std::size_t width) {
    std::string label(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
        if (bit_set(index, k)) label[width - 1 - k] = '1';
    }
    return label;
}

StateVector::StateVector(std::size_t n_qubits) : _n_qubits(n_qubits) {
    if (n_qubits < 1 || n_qubits > max_qubits) {
        throw SizeError(fmt::format("qubit count {} outside [1, {}]", n_qubits, max_qubits));
    }
    _amplitudes.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    _amplitudes[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    auto const size = amplitudes.size();
    if (size < 2 || (size & (size - 1)) != 0 || size > (std::size_t{1} << max_qubits)) {
        throw SizeError(fmt::format("amplitude count {} is not 2^n with 1 <= n <= {}", size, max_qubits));
    }
    double norm = 0.0;
    for (auto const& a : amplitudes) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-9) {
        throw ShapeError(fmt::format("amplitudes have squared norm {}, expected 1", norm));
    }
    double const scale = 1.0 / std::sqrt(norm);
    for (auto& a : amplitudes) a *= scale;

    StateVector state;
    state._n_qubits = static_cast<std::size_t>(std::countr_zero(size));
    state._amplitudes = std::move(amplitudes);
    return state;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= _n_qubits) {
        throw IndexError(fmt::format("qubit {} out of range for {}-qubit state", qubit, _n_qubits));
    }
}

void StateVector::apply(GateOp const& op, std::span<std::uint8_t const> cbits) {
    check_qubit(op.target);
    if (op.kind == GateKind::CX) {
        if (!op.control) throw IndexError("cx without control qubit");
        check_qubit(*op.control);
        if (*op.control == op.target) throw IndexError("cx control equals target");
    } else if (op.control) {
        throw IndexError(fmt::format("{} takes no control qubit", to_string(op.kind)));
    }
    if (op.condition) {
        if (op.condition->cbit >= cbits.size()) {
            throw IndexError(fmt::format("condition bit {} out of range for {} classical bits",
                                         op.condition->cbit, cbits.size()));
        }
        if (cbits[op.condition->cbit] != op.condition->value) return;
    }
    switch (op.kind) {
        case GateKind::X: apply_x(op.target); break;
        case GateKind::Z: apply_z(op.target); break;
        case GateKind::H: apply_h(op.target); break;
        case GateKind::CX: apply_cx(*op.control, op.target); break;
    }
}

// Single-qubit kernels walk blocks of 2*stride amplitudes; inside a block the
// first half has the target bit clear and the second half has it set.

void StateVector::apply_x(std::size_t qubit) {
    check_qubit(qubit);
    std::size_t const stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < _amplitudes.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            std::swap(_amplitudes[i], _amplitudes[i + stride]);
        }
    }
}

void StateVector::apply_z(std::size_t qubit) {
    check_qubit(qubit);
    std::size_t const stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < _amplitudes.size(); base += 2 * stride) {
        for (std::size_t i = base + stride; i < base + 2 * stride; ++i) {
            _amplitudes[i] = -_amplitudes[i];
        }
    }
}

void StateVector::apply_h(std::size_t qubit) {
    check_qubit(qubit);
    std::size_t const stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < _amplitudes.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            Amplitude const a0 = _amplitudes[i];
            Amplitude const a1 = _amplitudes[i + stride];
            _amplitudes[i] = (a0 + a1) * inv_sqrt2;
            _amplitudes[i + stride] = (a0 - a1) * inv_sqrt2;
        }
    }
}

void StateVector::apply_cx(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw IndexError("cx control equals target");
    std::size_t const cmask = std::size_t{1} << control;
    std::size_t const tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < _amplitudes.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) std::swap(_amplitudes[i], _amplitudes[i | tmask]);
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> probs(_amplitudes.size());
    std::transform(_amplitudes.begin(), _amplitudes.end(), probs.begin(),
                   [](Amplitude const& a) { return std::norm(a); });
    return probs;
}

double StateVector::norm_squared() const {
    return std::accumulate(_amplitudes.begin(), _amplitudes.end(), 0.0,
                           [](double acc, Amplitude const& a) { return acc + std::norm(a); });
}

double StateVector::probability_one(std::size_t qubit) const {
    check_qubit(qubit);
    double p1 = 0.0;
    for (std::size_t i = 0; i < _amplitudes.size(); ++i) {
        if (bit_set(i, qubit)) p1 += std::norm(_amplitudes[i]);
    }
    return p1;
}

int StateVector::measure(std::size_t qubit, Rng& rng) {
    int const outcome = rng.uniform() < probability_one(qubit) ? 1 : 0;
    collapse(qubit, outcome);
    return outcome;
}

double StateVector::collapse(std::size_t qubit, int outcome) {
    check_qubit(qubit);
    double kept = 0.0;
    for (std::size_t i = 0; i < _amplitudes.size(); ++i) {
        if (static_cast<int>(bit_set(i, qubit)) == outcome) kept += std::norm(_amplitudes[i]);
    }
    if (!(kept > 0.0)) {
        throw InternalError(fmt::format("qubit {} has no support on outcome {}", qubit, outcome));
    }
    double const scale = 1.0 / std::sqrt(kept);
    for (std::size_t i = 0; i < _amplitudes.size(); ++i) {
        if (static_cast<int>(bit_set(i, qubit)) == outcome) {
            _amplitudes[i] *= scale;
        } else {
            _amplitudes[i] = 0.0;
        }
    }
    return kept;
}

std::uint64_t StateVector::sample_index(Rng& rng) const {
    double const r = rng.uniform() * norm_squared();
    double acc = 0.0;
    for (std::size_t i = 0; i < _amplitudes.size(); ++i) {
        acc += std::norm(_amplitudes[i]);
        if (r < acc) return i;
    }
    // rounding left r at the very top; take the last populated index
    for (std::size_t i = _amplitudes.size(); i-- > 0;) {
        if (std::norm(_amplitudes[i]) > 0.0) return i;
    }
    throw InternalError("sampling from a zero-norm state");
}

Counts StateVector::sample_counts(std::size_t shots, Rng& rng) const {
    std::vector<double> cumulative = probabilities();
    std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
    std::vector<std::uint64_t> tally(cumulative.size(), 0);
    for (std::size_t s = 0; s < shots; ++s) ++tally[draw_from_cumulative(cumulative, rng)];

    Counts counts;
    for (std::size_t i = 0; i < tally.size(); ++i) {
        if (tally[i] > 0) counts.emplace(basis_label(i, _n_qubits), tally[i]);
    }
    return counts;
}

}  // namespace qts
