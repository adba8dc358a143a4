#include "qts/router.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <fmt/core.h>

#include "qts/errors.hpp"

namespace qts {

namespace {

class Router {
public:
    Router(Program const& program, CouplingMap const& map)
        : _source(program), _map(map), _n(std::max(program.n_qubits, map.n_physical())) {
        _layout.resize(_n);
        std::iota(_layout.begin(), _layout.end(), std::size_t{0});
        _occupant = _layout;
        _out.n_qubits = _n;
        _out.n_cbits = program.n_cbits;
    }

    RoutedProgram run() {
        if (_source.n_qubits > _map.n_physical()) {
            throw RoutingError(fmt::format("program uses {} qubits but the map has {}", _source.n_qubits,
                                           _map.n_physical()));
        }
        for (auto const& inst : _source.instructions) {
            if (auto const* m = std::get_if<MeasureOp>(&inst)) {
                _out.instructions.emplace_back(MeasureOp{_layout[m->qubit], m->cbit});
                continue;
            }
            auto const& g = std::get<GateOp>(inst);
            if (g.kind != GateKind::CX) {
                GateOp moved = g;
                moved.target = _layout[g.target];
                _out.instructions.emplace_back(moved);
                continue;
            }
            route_cx(g);
        }
        _report.inserted_gate_count = _out.instructions.size() - _source.instructions.size();
        return RoutedProgram{std::move(_out), _report, std::move(_layout)};
    }

private:
    void route_cx(GateOp const& g) {
        std::size_t const pc = _layout[*g.control];
        std::size_t const pt = _layout[g.target];
        auto const path = shortest_path(pc, pt);
        if (path.empty()) {
            throw RoutingError(fmt::format("no path between physical qubits {} and {} for cx q[{}],q[{}]", pc, pt,
                                           *g.control, g.target));
        }
        for (std::size_t i = 0; i + 2 < path.size(); ++i) swap(path[i], path[i + 1]);
        std::size_t const control = path[path.size() - 2];
        bool const reversed = emit_cx(control, pt, g.condition);
        ++(reversed ? _report.reversed_count : _report.direct_count);
    }

    // BFS over the undirected closure, neighbours in ascending order.
    std::vector<std::size_t> shortest_path(std::size_t from, std::size_t to) const {
        std::vector<std::size_t> parent(_n, _n);
        std::deque<std::size_t> frontier{from};
        parent[from] = from;
        while (!frontier.empty()) {
            std::size_t const u = frontier.front();
            frontier.pop_front();
            if (u == to) break;
            for (std::size_t v : _map.neighbours(u)) {
                if (parent[v] == _n) {
                    parent[v] = u;
                    frontier.push_back(v);
                }
            }
        }
        if (parent[to] == _n) return {};
        std::vector<std::size_t> path{to};
        while (path.back() != from) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    // Emits cx(control -> target) on physical qubits; returns true when the
    // gate had to be reversed with Hadamards.
    bool emit_cx(std::size_t control, std::size_t target, std::optional<Condition> const& condition) {
        auto push = [&](GateOp op) {
            op.condition = condition;
            _out.instructions.emplace_back(op);
        };
        if (_map.has_edge(control, target)) {
            push(GateOp::cx(control, target));
            return false;
        }
        if (!_map.has_edge(target, control)) {
            throw InternalError(fmt::format("physical qubits {} and {} are not adjacent", control, target));
        }
        std::size_t const lo = std::min(control, target);
        std::size_t const hi = std::max(control, target);
        push(GateOp::h(lo));
        push(GateOp::h(hi));
        push(GateOp::cx(target, control));
        push(GateOp::h(lo));
        push(GateOp::h(hi));
        return true;
    }

    void swap(std::size_t a, std::size_t b) {
        // orient so the outer pair of CXs runs along an existing edge
        if (!_map.has_edge(a, b)) std::swap(a, b);
        emit_cx(a, b, std::nullopt);
        emit_cx(b, a, std::nullopt);
        emit_cx(a, b, std::nullopt);
        ++_report.swap_count;

        std::size_t const la = _occupant[a];
        std::size_t const lb = _occupant[b];
        std::swap(_occupant[a], _occupant[b]);
        _layout[la] = b;
        _layout[lb] = a;
    }

    Program const& _source;
    CouplingMap const& _map;
    std::size_t _n;
    std::vector<std::size_t> _layout;    // logical -> physical
    std::vector<std::size_t> _occupant;  // physical -> logical
    Program _out;
    RoutingReport _report;
};

}  // namespace

RoutedProgram route(Program const& program, std::optional<CouplingMap> const& map) {
    program.validate();
    if (!map) {
        RoutedProgram identity{program, RoutingReport{}, std::vector<std::size_t>(program.n_qubits)};
        std::iota(identity.layout.begin(), identity.layout.end(), std::size_t{0});
        identity.report.direct_count = program.cx_count();
        return identity;
    }
    return Router(program, *map).run();
}

SupportCount direct_support_count(Program const& program, CouplingMap const& map) {
    SupportCount count;
    for (auto const& inst : program.instructions) {
        auto const* g = std::get_if<GateOp>(&inst);
        if (!g || g->kind != GateKind::CX) continue;
        if (map.has_edge(*g->control, g->target)) {
            ++count.direct;
        } else if (map.has_edge(g->target, *g->control)) {
            ++count.reversed;
        } else {
            ++count.unsupported;
        }
    }
    return count;
}

}  // namespace qts
