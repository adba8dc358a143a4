#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qts/errors.hpp"
#include "qts/program.hpp"

namespace qts {

enum class ParseErrorKind { Syntax, UnknownGate, Range, Redeclaration };

std::string to_string(ParseErrorKind kind);

/// First error found while scanning a QASM source. `what()` renders as
/// `line:column: kind: message`, both positions 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, ParseErrorKind kind, std::string message);

    std::size_t line() const { return _line; }
    std::size_t column() const { return _column; }
    ParseErrorKind kind() const { return _kind; }
    std::string const& message() const { return _message; }

private:
    std::size_t _line;
    std::size_t _column;
    ParseErrorKind _kind;
    std::string _message;
};

/**
 * @brief Parses the supported OpenQASM 2 subset.
 *
 * Statements: `qreg q[N];`, `creg c[N];`, `x|z|h q[i];`, `cx q[i],q[j];`,
 * `measure q[i] -> c[j];` and `if(c[j]==v) <gate>;` with v in {0, 1}.
 * `//` starts a line comment; whitespace is insignificant. At most one
 * register of each kind may be declared, and the quantum register holds at
 * most 20 qubits.
 *
 * @throws ParseError on the first problem in scan order
 */
Program parse_qasm(std::string_view source);

/// Canonical text: register headers then one statement per line, with
/// registers named `q` and `c`. parse_qasm(serialize_qasm(p)) == p.
std::string serialize_qasm(Program const& program);

}  // namespace qts
