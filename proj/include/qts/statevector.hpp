#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qts/rng.hpp"

namespace qts {

using Amplitude = std::complex<double>;

/// Outcome histogram keyed by bitstring (qubit or classical bit 0 rightmost).
using Counts = std::map<std::string, std::uint64_t>;

enum class GateKind { X, Z, H, CX };

/// Classical control: the gate fires iff `cbits[cbit] == value`.
struct Condition {
    std::size_t cbit = 0;
    std::uint8_t value = 1;

    friend bool operator==(Condition const&, Condition const&) = default;
};

struct GateOp {
    GateKind kind = GateKind::X;
    std::size_t target = 0;
    std::optional<std::size_t> control;  // present iff kind == CX
    std::optional<Condition> condition;

    static GateOp x(std::size_t q) { return {GateKind::X, q, std::nullopt, std::nullopt}; }
    static GateOp z(std::size_t q) { return {GateKind::Z, q, std::nullopt, std::nullopt}; }
    static GateOp h(std::size_t q) { return {GateKind::H, q, std::nullopt, std::nullopt}; }
    static GateOp cx(std::size_t control, std::size_t target) {
        return {GateKind::CX, target, control, std::nullopt};
    }

    GateOp& when(std::size_t cbit, std::uint8_t value = 1) {
        condition = Condition{cbit, value};
        return *this;
    }

    friend bool operator==(GateOp const&, GateOp const&) = default;
};

struct MeasureOp {
    std::size_t qubit = 0;
    std::size_t cbit = 0;

    friend bool operator==(MeasureOp const&, MeasureOp const&) = default;
};

std::string to_string(GateKind kind);

/// Renders `index` as a `width`-character bitstring with bit 0 rightmost.
std::string basis_label(std::uint64_t index, std::size_t width);

/**
 * @brief Dense statevector over n qubits (1 <= n <= 20).
 *
 * Basis index convention: qubit k is bit k of the index, so qubit 0 is the
 * least-significant bit and the rightmost character of a rendered label.
 * The amplitudes stay normalised to within 1e-12 after every operation.
 */
class StateVector {
public:
    static constexpr std::size_t max_qubits = 20;

    /// |0...0> over `n_qubits` qubits. Throws SizeError outside [1, 20].
    explicit StateVector(std::size_t n_qubits);

    /// Takes ownership of `amplitudes` (length must be a power of two in
    /// range) and renormalises. Throws SizeError on bad length, ShapeError
    /// if the input norm is not 1 within 1e-9.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return _n_qubits; }
    std::size_t dimension() const { return _amplitudes.size(); }
    std::span<Amplitude const> amplitudes() const { return _amplitudes; }
    Amplitude operator[](std::size_t index) const { return _amplitudes[index]; }

    /// Applies `op` in place. A conditional op whose condition is unmet
    /// leaves the state untouched. Throws IndexError on bad indices or when
    /// `cbits` is too short for the condition.
    void apply(GateOp const& op, std::span<std::uint8_t const> cbits = {});

    void apply_x(std::size_t qubit);
    void apply_z(std::size_t qubit);
    void apply_h(std::size_t qubit);
    void apply_cx(std::size_t control, std::size_t target);

    /// Born-rule probabilities |a_x|^2 in basis-index order.
    std::vector<double> probabilities() const;
    double norm_squared() const;

    /// Probability that `qubit` reads 1.
    double probability_one(std::size_t qubit) const;

    /// Projective measurement of one qubit; collapses and renormalises.
    int measure(std::size_t qubit, Rng& rng);

    /// Projects onto `qubit == outcome` and renormalises. Returns the
    /// probability the branch had; throws InternalError if it was zero.
    double collapse(std::size_t qubit, int outcome);

    /// One full computational-basis draw. Does not modify the state.
    std::uint64_t sample_index(Rng& rng) const;

    /// `shots` independent full-register draws, keyed by basis_label.
    Counts sample_counts(std::size_t shots, Rng& rng) const;

private:
    StateVector() = default;
    void check_qubit(std::size_t qubit) const;

    std::size_t _n_qubits = 0;
    std::vector<Amplitude> _amplitudes;
};

inline StateVector zero_state(std::size_t n_qubits) { return StateVector(n_qubits); }

}  // namespace qts
