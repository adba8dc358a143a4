#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qts/statevector.hpp"

namespace qts {

using Instruction = std::variant<GateOp, MeasureOp>;

/// A circuit over one quantum and one classical register, in source order.
struct Program {
    std::size_t n_qubits = 0;
    std::size_t n_cbits = 0;
    std::vector<Instruction> instructions;

    /// Throws IndexError if any instruction refers outside the registers.
    void validate() const;

    std::size_t cx_count() const;

    friend bool operator==(Program const&, Program const&) = default;
};

}  // namespace qts
