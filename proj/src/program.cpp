#include "qts/program.hpp"

#include <fmt/core.h>

#include "qts/errors.hpp"

namespace qts {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

void Program::validate() const {
    auto check_qubit = [&](std::size_t q) {
        if (q >= n_qubits) throw IndexError(fmt::format("qubit {} out of range (qreg size {})", q, n_qubits));
    };
    auto check_cbit = [&](std::size_t c) {
        if (c >= n_cbits) throw IndexError(fmt::format("classical bit {} out of range (creg size {})", c, n_cbits));
    };
    for (auto const& inst : instructions) {
        std::visit(overloaded{
                       [&](GateOp const& g) {
                           check_qubit(g.target);
                           if ((g.kind == GateKind::CX) != g.control.has_value()) {
                               throw IndexError("control qubit present iff gate is cx");
                           }
                           if (g.control) {
                               check_qubit(*g.control);
                               if (*g.control == g.target) throw IndexError("cx control equals target");
                           }
                           if (g.condition) {
                               check_cbit(g.condition->cbit);
                               if (g.condition->value > 1) throw IndexError("condition value must be 0 or 1");
                           }
                       },
                       [&](MeasureOp const& m) {
                           check_qubit(m.qubit);
                           check_cbit(m.cbit);
                       },
                   },
                   inst);
    }
}

std::size_t Program::cx_count() const {
    std::size_t n = 0;
    for (auto const& inst : instructions) {
        if (auto const* g = std::get_if<GateOp>(&inst); g && g->kind == GateKind::CX) ++n;
    }
    return n;
}

}  // namespace qts
