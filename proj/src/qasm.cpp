#include "qts/qasm.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include <fmt/core.h>

namespace qts {

std::string to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::UnknownGate: return "unknown-gate";
        case ParseErrorKind::Range: return "range";
        case ParseErrorKind::Redeclaration: return "redeclaration";
    }
    return "?";
}

ParseError::ParseError(std::size_t line, std::size_t column, ParseErrorKind kind, std::string message)
    : Error(fmt::format("{}:{}: {}: {}", line, column, to_string(kind), message)),
      _line(line),
      _column(column),
      _kind(kind),
      _message(std::move(message)) {}

namespace {

enum class TokenType { Identifier, Integer, Symbol, End };

struct Token {
    TokenType type = TokenType::End;
    std::string_view text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view source) : _src(source) { compute_end_position(); }

    Token next() {
        skip_trivia();
        if (_pos >= _src.size()) return Token{TokenType::End, {}, _end_line, _end_column};

        Token tok;
        tok.line = _line;
        tok.column = _column;
        std::size_t const start = _pos;
        char const c = _src[_pos];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (_pos < _src.size() && (std::isalnum(static_cast<unsigned char>(_src[_pos])) || _src[_pos] == '_')) {
                advance();
            }
            tok.type = TokenType::Identifier;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos]))) advance();
            tok.type = TokenType::Integer;
        } else if (_src.substr(_pos, 2) == "->" || _src.substr(_pos, 2) == "==") {
            advance();
            advance();
            tok.type = TokenType::Symbol;
        } else if (std::string_view("[];,()").find(c) != std::string_view::npos) {
            advance();
            tok.type = TokenType::Symbol;
        } else {
            throw ParseError(tok.line, tok.column, ParseErrorKind::Syntax,
                             fmt::format("unexpected character '{}'", c));
        }
        tok.text = _src.substr(start, _pos - start);
        return tok;
    }

private:
    void advance() {
        if (_src[_pos] == '\n') {
            ++_line;
            _column = 1;
        } else {
            ++_column;
        }
        ++_pos;
    }

    void skip_trivia() {
        while (_pos < _src.size()) {
            if (std::isspace(static_cast<unsigned char>(_src[_pos]))) {
                advance();
            } else if (_src.substr(_pos, 2) == "//") {
                while (_pos < _src.size() && _src[_pos] != '\n') advance();
            } else {
                break;
            }
        }
    }

    // End-of-input errors point at the last character so every reported
    // position lies inside the source.
    void compute_end_position() {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i + 1 < _src.size(); ++i) {
            if (_src[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        _end_line = line;
        _end_column = column;
    }

    std::string_view _src;
    std::size_t _pos = 0;
    std::size_t _line = 1;
    std::size_t _column = 1;
    std::size_t _end_line = 1;
    std::size_t _end_column = 1;
};

struct Register {
    std::string name;
    std::size_t size = 0;
};

class Parser {
public:
    explicit Parser(std::string_view source) : _lexer(source) { _tok = _lexer.next(); }

    Program run() {
        while (_tok.type != TokenType::End) statement();
        Program program;
        program.n_qubits = _qreg ? _qreg->size : 0;
        program.n_cbits = _creg ? _creg->size : 0;
        program.instructions = std::move(_instructions);
        return program;
    }

private:
    [[noreturn]] void fail(Token const& at, ParseErrorKind kind, std::string message) const {
        throw ParseError(at.line, at.column, kind, std::move(message));
    }

    static std::string describe(Token const& tok) {
        return tok.type == TokenType::End ? std::string("end of input") : fmt::format("'{}'", tok.text);
    }

    Token take() {
        Token const t = _tok;
        _tok = _lexer.next();
        return t;
    }

    void expect(std::string_view symbol) {
        if (_tok.type != TokenType::Symbol || _tok.text != symbol) {
            fail(_tok, ParseErrorKind::Syntax, fmt::format("expected '{}', found {}", symbol, describe(_tok)));
        }
        take();
    }

    Token expect_identifier() {
        if (_tok.type != TokenType::Identifier) {
            fail(_tok, ParseErrorKind::Syntax, fmt::format("expected identifier, found {}", describe(_tok)));
        }
        return take();
    }

    std::pair<std::size_t, Token> expect_integer() {
        if (_tok.type != TokenType::Integer) {
            fail(_tok, ParseErrorKind::Syntax, fmt::format("expected integer, found {}", describe(_tok)));
        }
        Token const t = take();
        std::size_t value = 0;
        auto const [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{}) fail(t, ParseErrorKind::Range, fmt::format("integer {} too large", t.text));
        return {value, t};
    }

    void statement() {
        if (_tok.type != TokenType::Identifier) {
            fail(_tok, ParseErrorKind::Syntax, fmt::format("expected statement, found {}", describe(_tok)));
        }
        std::string_view const word = _tok.text;
        if (word == "qreg" || word == "creg") {
            declaration(word == "qreg");
        } else if (word == "measure") {
            take();
            std::size_t const q = argument(_qreg, "qreg");
            expect("->");
            std::size_t const c = argument(_creg, "creg");
            expect(";");
            _instructions.emplace_back(MeasureOp{q, c});
        } else if (word == "if") {
            take();
            expect("(");
            std::size_t const c = argument(_creg, "creg");
            expect("==");
            auto const [value, value_tok] = expect_integer();
            if (value > 1) fail(value_tok, ParseErrorKind::Range, "condition value must be 0 or 1");
            expect(")");
            GateOp op = gate();
            op.condition = Condition{c, static_cast<std::uint8_t>(value)};
            _instructions.emplace_back(op);
        } else {
            _instructions.emplace_back(gate());
        }
    }

    void declaration(bool quantum) {
        Token const keyword = take();
        Token const name = expect_identifier();
        expect("[");
        auto const [size, size_tok] = expect_integer();
        expect("]");
        expect(";");

        auto& slot = quantum ? _qreg : _creg;
        auto const& other = quantum ? _creg : _qreg;
        if (slot) fail(keyword, ParseErrorKind::Redeclaration, fmt::format("second {} declaration", keyword.text));
        if (other && other->name == name.text) {
            fail(name, ParseErrorKind::Redeclaration, fmt::format("register '{}' already declared", name.text));
        }
        if (quantum && size > StateVector::max_qubits) {
            fail(size_tok, ParseErrorKind::Range,
                 fmt::format("qreg size {} exceeds {} qubits", size, StateVector::max_qubits));
        }
        slot = Register{std::string(name.text), size};
    }

    std::size_t argument(std::optional<Register> const& reg, std::string_view what) {
        Token const name = expect_identifier();
        if (!reg) fail(name, ParseErrorKind::Syntax, fmt::format("{} used before declaration", what));
        if (name.text != reg->name) fail(name, ParseErrorKind::Syntax, fmt::format("unknown register '{}'", name.text));
        expect("[");
        auto const [index, index_tok] = expect_integer();
        expect("]");
        if (index >= reg->size) {
            fail(index_tok, ParseErrorKind::Range,
                 fmt::format("index {} out of range for {}[{}]", index, reg->name, reg->size));
        }
        return index;
    }

    GateOp gate() {
        if (_tok.type != TokenType::Identifier) {
            fail(_tok, ParseErrorKind::Syntax, fmt::format("expected gate, found {}", describe(_tok)));
        }
        Token const name = take();
        GateOp op;
        if (name.text == "x") {
            op.kind = GateKind::X;
        } else if (name.text == "z") {
            op.kind = GateKind::Z;
        } else if (name.text == "h") {
            op.kind = GateKind::H;
        } else if (name.text == "cx") {
            op.kind = GateKind::CX;
        } else {
            fail(name, ParseErrorKind::UnknownGate, fmt::format("unknown gate '{}'", name.text));
        }
        Token const first = _tok;
        std::size_t const q0 = argument(_qreg, "qreg");
        if (op.kind == GateKind::CX) {
            expect(",");
            std::size_t const q1 = argument(_qreg, "qreg");
            if (q0 == q1) fail(first, ParseErrorKind::Range, "cx control and target coincide");
            op.control = q0;
            op.target = q1;
        } else {
            op.target = q0;
        }
        expect(";");
        return op;
    }

    Lexer _lexer;
    Token _tok;
    std::optional<Register> _qreg;
    std::optional<Register> _creg;
    std::vector<Instruction> _instructions;
};

}  // namespace

Program parse_qasm(std::string_view source) { return Parser(source).run(); }

std::string serialize_qasm(Program const& program) {
    std::string out = fmt::format("qreg q[{}];\ncreg c[{}];\n", program.n_qubits, program.n_cbits);
    for (auto const& inst : program.instructions) {
        if (auto const* m = std::get_if<MeasureOp>(&inst)) {
            out += fmt::format("measure q[{}] -> c[{}];\n", m->qubit, m->cbit);
            continue;
        }
        auto const& g = std::get<GateOp>(inst);
        if (g.condition) out += fmt::format("if(c[{}]=={}) ", g.condition->cbit, static_cast<int>(g.condition->value));
        if (g.kind == GateKind::CX) {
            out += fmt::format("cx q[{}],q[{}];\n", *g.control, g.target);
        } else {
            out += fmt::format("{} q[{}];\n", to_string(g.kind), g.target);
        }
    }
    return out;
}

}  // namespace qts
