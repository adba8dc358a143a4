#pragma once

#include <string_view>

// Copies of the files under assets/; the asset test keeps them in sync.
namespace qts::assets {

inline constexpr std::string_view teleport_qasm =
    "// Teleports the state of q[0] onto q[2].\n"
    "qreg q[3];\n"
    "creg c[3];\n"
    "h q[1];\n"
    "cx q[1],q[2];\n"
    "cx q[0],q[1];\n"
    "h q[0];\n"
    "measure q[0] -> c[0];\n"
    "measure q[1] -> c[1];\n"
    "if(c[1]==1) x q[2];\n"
    "if(c[0]==1) z q[2];\n"
    "measure q[2] -> c[2];\n";

/// Hand-specified five-qubit map.
inline constexpr std::string_view map_b = "[[0, 1], [0, 2], [1, 2], [3, 2], [3, 4], [4, 2]]";

/// Five-qubit map reported as the tabu search result for teleportation.
inline constexpr std::string_view map_c = "[[0, 1], [0, 4], [1, 2], [1, 3], [1, 4], [3, 4]]";

}  // namespace qts::assets
