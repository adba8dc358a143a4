#include "qts/router.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qts/assets.hpp"
#include "qts/errors.hpp"
#include "qts/qasm.hpp"
#include "support/oracles.hpp"

using namespace qts;

namespace {

Program cx_program(std::size_t n, std::size_t control, std::size_t target) {
    Program p;
    p.n_qubits = n;
    p.instructions.emplace_back(GateOp::cx(control, target));
    return p;
}

void expect_legal(Program const& routed, CouplingMap const& map) {
    for (auto const& inst : routed.instructions) {
        if (auto const* g = std::get_if<GateOp>(&inst); g && g->kind == GateKind::CX) {
            EXPECT_TRUE(map.has_edge(*g->control, g->target)) << *g->control << "->" << g->target;
        }
    }
}

// Unitary of the routed circuit equals layout * original (on the full
// physical register, extra qubits idle).
double equivalence_error(Program const& original, RoutedProgram const& routed) {
    std::size_t const n = routed.program.n_qubits;
    auto const u_routed = oracle::program_unitary(routed.program, n);
    auto const u_original = oracle::program_unitary(original, n);
    return oracle::distance_up_to_phase(u_routed, oracle::layout_matrix(routed.layout) * u_original);
}

}  // namespace

TEST(CouplingMap, ParsePaperMaps) {
    auto const b = parse_coupling_map("[[0,1],[0,2],[1,2],[3,2],[3,4],[4,2]]");
    EXPECT_EQ(b.n_physical(), 5U);
    EXPECT_EQ(b.edges().size(), 6U);
    EXPECT_EQ(b.edges()[3], (Edge{3, 2}));
    EXPECT_EQ(b.to_string(), assets::map_b);

    auto const c = parse_coupling_map(assets::map_c);
    EXPECT_EQ(c.n_physical(), 5U);
    EXPECT_TRUE(c.has_edge(1, 3));
    EXPECT_FALSE(c.has_edge(3, 1));
    EXPECT_EQ(c.neighbours(1), (std::vector<std::size_t>{0, 2, 3, 4}));
}

TEST(CouplingMap, FormatErrors) {
    EXPECT_THROW(parse_coupling_map("[[0,0]]"), FormatError);
    EXPECT_THROW(parse_coupling_map("[[0,1],[0,1]]"), FormatError);
    EXPECT_THROW(parse_coupling_map("[[0,1],[2]]"), FormatError);
    EXPECT_THROW(parse_coupling_map("[[0,-1]]"), FormatError);
    EXPECT_THROW(parse_coupling_map("[[0,1]"), FormatError);
    EXPECT_THROW(parse_coupling_map("{}"), FormatError);
    EXPECT_THROW(parse_coupling_map("[[0,4]]", 3), FormatError);
    EXPECT_EQ(parse_coupling_map("[[0,1]]", 16).n_physical(), 16U);
    EXPECT_EQ(parse_coupling_map("[]").n_physical(), 0U);
}

TEST(Router, NoMapIsIdentity) {
    auto const teleport = parse_qasm(assets::teleport_qasm);
    auto const routed = route(teleport, std::nullopt);
    EXPECT_EQ(routed.program, teleport);
    EXPECT_EQ(routed.report, (RoutingReport{2, 0, 0, 0}));
    EXPECT_EQ(routed.layout, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Router, ReversalExpansion) {
    auto const map = parse_coupling_map("[[1,2]]");
    auto const original = cx_program(3, 2, 1);
    auto const routed = route(original, map);
    std::vector<Instruction> const expected{GateOp::h(1), GateOp::h(2), GateOp::cx(1, 2), GateOp::h(1), GateOp::h(2)};
    EXPECT_EQ(routed.program.instructions, expected);
    EXPECT_EQ(routed.report, (RoutingReport{0, 1, 0, 4}));

    // brute force: the 4x4 block acting on qubits 1, 2 matches CX(2 -> 1)
    auto const lhs = oracle::program_unitary(routed.program, 3);
    auto const rhs = oracle::program_unitary(original, 3);
    EXPECT_LT(oracle::distance_up_to_phase(lhs, rhs), 1e-12);
}

TEST(Router, SwapAlongShortestPath) {
    auto const b = parse_coupling_map(assets::map_b);
    auto const original = cx_program(5, 0, 3);
    auto const routed = route(original, b);
    EXPECT_EQ(routed.report.swap_count, 1U);
    EXPECT_EQ(routed.report.direct_count + routed.report.reversed_count, 1U);
    // 0 -> 2 -> 3: (0,2) exists one way, so one reversal inside the SWAP,
    // then the final cx(2 -> 3) only exists as (3, 2)
    EXPECT_EQ(routed.report.reversed_count, 1U);
    EXPECT_EQ(routed.report.inserted_gate_count, 3U + 4U + 4U);
    EXPECT_EQ(routed.layout[0], 2U);
    EXPECT_EQ(routed.layout[2], 0U);
    expect_legal(routed.program, b);
    EXPECT_LT(equivalence_error(original, routed), 1e-10);
}

TEST(Router, MeasurementsFollowLayout) {
    auto const map = parse_coupling_map("[[0,1],[1,2]]");
    auto const p = parse_qasm("qreg q[3]; creg c[3]; x q[0]; cx q[0],q[2]; measure q[0]->c[0]; measure q[2]->c[2];");
    auto const routed = route(p, map);
    EXPECT_EQ(routed.report.swap_count, 1U);
    auto const& last = routed.program.instructions;
    EXPECT_EQ(std::get<MeasureOp>(last[last.size() - 2]), (MeasureOp{routed.layout[0], 0}));
    EXPECT_EQ(std::get<MeasureOp>(last.back()), (MeasureOp{2, 2}));
}

TEST(Router, Errors) {
    auto const teleport = parse_qasm(assets::teleport_qasm);
    EXPECT_THROW(route(teleport, CouplingMap(3, {})), RoutingError);
    EXPECT_THROW(route(teleport, parse_coupling_map("[[0,1]]")), RoutingError);
    EXPECT_THROW(route(teleport, parse_coupling_map("[[0,1],[3,2]]")), RoutingError);
}

TEST(Router, DirectSupportCount) {
    auto const teleport = parse_qasm(assets::teleport_qasm);
    EXPECT_EQ(direct_support_count(teleport, parse_coupling_map(assets::map_c)), (SupportCount{2, 0, 0}));
    EXPECT_EQ(direct_support_count(teleport, parse_coupling_map(assets::map_b)), (SupportCount{2, 0, 0}));
    EXPECT_EQ(direct_support_count(teleport, CouplingMap{}), (SupportCount{0, 0, 2}));
    EXPECT_EQ(direct_support_count(teleport, parse_coupling_map("[[2,1]]")), (SupportCount{0, 1, 1}));
}

TEST(Router, TeleportOnPaperMapsNeedsNoSwaps) {
    auto const teleport = parse_qasm(assets::teleport_qasm);
    for (auto text : {assets::map_b, assets::map_c}) {
        auto const routed = route(teleport, parse_coupling_map(text));
        EXPECT_EQ(routed.report, (RoutingReport{2, 0, 0, 0}));
    }
}

TEST(RouterProperty, RandomCircuitsStayEquivalentAndLegal) {
    std::mt19937_64 gen(31);
    std::uniform_int_distribution<std::size_t> length(1, 15);
    for (int trial = 0; trial < 100; ++trial) {
        auto const program = oracle::random_program(gen, 3, length(gen));
        auto const map = oracle::random_connected_map(gen, 4);
        auto const routed = route(program, map);
        expect_legal(routed.program, map);
        EXPECT_LT(equivalence_error(program, routed), 1e-10);

        auto const& r = routed.report;
        EXPECT_EQ(r.direct_count + r.reversed_count, program.cx_count());
        EXPECT_EQ(r.inserted_gate_count, routed.program.instructions.size() - program.instructions.size());
        std::size_t const extra = r.inserted_gate_count - 3 * r.swap_count - 4 * r.reversed_count;
        EXPECT_EQ(extra % 4, 0U);
        EXPECT_LE(extra / 4, r.swap_count);

        auto const support = direct_support_count(program, map);
        EXPECT_EQ(support.direct + support.reversed + support.unsupported, program.cx_count());
    }
}
