#include "qts/coupling_map.hpp"

#include <algorithm>
#include <set>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "qts/errors.hpp"

namespace qts {

namespace {

std::size_t inferred_size(std::vector<Edge> const& edges) {
    std::size_t n = 0;
    for (auto const& e : edges) n = std::max({n, e.control + 1, e.target + 1});
    return n;
}

}  // namespace

CouplingMap::CouplingMap(std::size_t n_physical, std::vector<Edge> edges)
    : _n_physical(n_physical), _edges(std::move(edges)) {
    std::set<Edge> seen;
    for (auto const& e : _edges) {
        if (e.control == e.target) throw FormatError(fmt::format("self-loop on qubit {}", e.control));
        if (e.control >= _n_physical || e.target >= _n_physical) {
            throw FormatError(fmt::format("edge [{}, {}] outside {} physical qubits", e.control, e.target, _n_physical));
        }
        if (!seen.insert(e).second) throw FormatError(fmt::format("duplicate edge [{}, {}]", e.control, e.target));
    }
}

CouplingMap::CouplingMap(std::vector<Edge> edges) : _n_physical(inferred_size(edges)) {
    *this = CouplingMap(_n_physical, std::move(edges));
}

bool CouplingMap::has_edge(std::size_t control, std::size_t target) const {
    return std::any_of(_edges.begin(), _edges.end(),
                       [&](Edge const& e) { return e.control == control && e.target == target; });
}

std::vector<std::size_t> CouplingMap::neighbours(std::size_t qubit) const {
    std::set<std::size_t> out;
    for (auto const& e : _edges) {
        if (e.control == qubit) out.insert(e.target);
        if (e.target == qubit) out.insert(e.control);
    }
    return {out.begin(), out.end()};
}

std::string CouplingMap::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _edges.size(); ++i) {
        if (i > 0) out += ", ";
        out += fmt::format("[{}, {}]", _edges[i].control, _edges[i].target);
    }
    return out + "]";
}

std::vector<Edge> parse_edge_list(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
        throw FormatError(fmt::format("malformed pair list: {}", e.what()));
    }
    if (!doc.is_array()) throw FormatError("pair list must be a JSON array");
    std::vector<Edge> edges;
    edges.reserve(doc.size());
    for (auto const& pair : doc) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
            throw FormatError(fmt::format("expected [control, target] pair, found {}", pair.dump()));
        }
        edges.push_back(Edge{pair[0].get<std::size_t>(), pair[1].get<std::size_t>()});
    }
    return edges;
}

CouplingMap parse_coupling_map(std::string_view text, std::optional<std::size_t> n_physical) {
    auto edges = parse_edge_list(text);
    if (!n_physical) return CouplingMap(std::move(edges));
    return CouplingMap(*n_physical, std::move(edges));
}

}  // namespace qts
