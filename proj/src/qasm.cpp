#include "qcsim/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "qcsim/errors.hpp"

namespace qcsim {

namespace {

// ---------------------------------------------------------------------
// Emitter

std::string format_angle(double theta) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", theta);
    return buf;
}

const char* uncontrolled_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::RX: return "rx";
        case GateKind::RY: return "ry";
        case GateKind::RZ: return "rz";
        case GateKind::Custom: return nullptr;
    }
    return nullptr;
}

bool has_angle(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

struct Emitter {
    std::ostringstream out;
    QasmDialect dialect;
    std::size_t topIndex = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw unsupported_export_error(msg, topIndex);
    }

    void gate(const Gate& g, int offset) {
        const int target = g.targets.front() + offset;
        if (g.controls.empty()) {
            const char* name = uncontrolled_name(g.kind);
            if (!name || g.targets.size() != 1)
                fail("custom gates have no OpenQASM spelling");
            out << name;
            if (has_angle(g.kind)) out << '(' << format_angle(g.theta) << ')';
            out << " q[" << target << "];\n";
            return;
        }
        for (const auto& c : g.controls)
            if (c.state != 1) fail("negative-polarity controls have no OpenQASM spelling");
        if (g.kind == GateKind::X && g.controls.size() == 1) {
            out << "cx q[" << g.controls[0].qubit + offset << "], q[" << target << "];\n";
        } else if (g.kind == GateKind::Z && g.controls.size() == 1) {
            out << "cz q[" << g.controls[0].qubit + offset << "], q[" << target << "];\n";
        } else if (g.kind == GateKind::X && g.controls.size() == 2) {
            out << "ccx q[" << g.controls[0].qubit + offset << "], q["
                << g.controls[1].qubit + offset << "], q[" << target << "];\n";
        } else {
            fail(std::string("controlled ") + gate_name(g.kind) + " with " +
                 std::to_string(g.controls.size()) + " control(s) has no OpenQASM spelling");
        }
    }

    void measurement(const Measurement& m, int offset) {
        if (!m.basis.is_z()) fail("only Z-basis measurements can be exported");
        out << "measure q[" << m.qubit + offset << "]";
        if (dialect == QasmDialect::strict_qasm2)
            out << " -> c[" << m.qubit + offset << "]";
        out << ";\n";
    }

    void walk(const Circuit& c, int offset) {
        for (const auto& instr : c.instructions()) {
            if (const auto* g = std::get_if<Gate>(&instr))
                gate(*g, offset);
            else if (const auto* m = std::get_if<Measurement>(&instr))
                measurement(*m, offset);
            else {
                const auto& b = std::get<Block>(instr);
                walk(*b.circuit, offset + b.offset);
            }
        }
    }
};

// ---------------------------------------------------------------------
// Parser

enum class Tok { ident, number, string, lbracket, rbracket, lparen, rparen,
                 comma, semi, arrow, star, slash, minus, eof };

struct Token {
    Tok kind = Tok::eof;
    std::string text;
    double value = 0.0;
    int line = 1;
    int column = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= src_.size()) return t;

        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                    src_[pos_] == '.'))
                advance();
            t.kind = Tok::ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
                    src_[pos_] == 'e' || src_[pos_] == 'E' ||
                    ((src_[pos_] == '+' || src_[pos_] == '-') && pos_ > start &&
                     (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
                advance();
            t.kind = Tok::number;
            t.text = std::string(src_.substr(start, pos_ - start));
            const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
            if (res.ec != std::errc{} || res.ptr != t.text.data() + t.text.size())
                throw parse_error("malformed number '" + t.text + "'", t.line, t.column);
            return t;
        }
        if (c == '"') {
            advance();
            const std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"') advance();
            if (pos_ >= src_.size()) throw parse_error("unterminated string", t.line, t.column);
            t.kind = Tok::string;
            t.text = std::string(src_.substr(start, pos_ - start));
            advance();
            return t;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            t.kind = Tok::arrow;
            return t;
        }
        advance();
        switch (c) {
            case '[': t.kind = Tok::lbracket; return t;
            case ']': t.kind = Tok::rbracket; return t;
            case '(': t.kind = Tok::lparen; return t;
            case ')': t.kind = Tok::rparen; return t;
            case ',': t.kind = Tok::comma; return t;
            case ';': t.kind = Tok::semi; return t;
            case '*': t.kind = Tok::star; return t;
            case '/': t.kind = Tok::slash; return t;
            case '-': t.kind = Tok::minus; return t;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", t.line,
                                  t.column);
        }
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct GateSpec {
    GateKind kind;
    int operands;
    bool angle;
};

const std::map<std::string, GateSpec, std::less<>>& gate_table() {
    static const std::map<std::string, GateSpec, std::less<>> table = {
        {"h", {GateKind::H, 1, false}},    {"x", {GateKind::X, 1, false}},
        {"y", {GateKind::Y, 1, false}},    {"z", {GateKind::Z, 1, false}},
        {"s", {GateKind::S, 1, false}},    {"sdg", {GateKind::Sdg, 1, false}},
        {"t", {GateKind::T, 1, false}},    {"tdg", {GateKind::Tdg, 1, false}},
        {"rx", {GateKind::RX, 1, true}},   {"ry", {GateKind::RY, 1, true}},
        {"rz", {GateKind::RZ, 1, true}},   {"cx", {GateKind::X, 2, false}},
        {"cz", {GateKind::Z, 2, false}},   {"ccx", {GateKind::X, 3, false}},
    };
    return table;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : lexer_(src) { shift(); }

    Circuit parse() {
        while (cur_.kind != Tok::eof) statement();
        if (!circuit_) throw parse_error("no qreg declaration found", cur_.line, cur_.column);
        return std::move(*circuit_);
    }

  private:
    void shift() { cur_ = lexer_.next(); }

    Token expect(Tok kind, const char* what) {
        if (cur_.kind != kind)
            throw parse_error(std::string("expected ") + what + ", got '" + describe(cur_) + "'",
                              cur_.line, cur_.column);
        Token t = cur_;
        shift();
        return t;
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Tok::ident:
            case Tok::number: return t.text;
            case Tok::string: return '"' + t.text + '"';
            case Tok::lbracket: return "[";
            case Tok::rbracket: return "]";
            case Tok::lparen: return "(";
            case Tok::rparen: return ")";
            case Tok::comma: return ",";
            case Tok::semi: return ";";
            case Tok::arrow: return "->";
            case Tok::star: return "*";
            case Tok::slash: return "/";
            case Tok::minus: return "-";
            case Tok::eof: return "<end of input>";
        }
        return "?";
    }

    void skip_to_semi() {
        while (cur_.kind != Tok::semi && cur_.kind != Tok::eof) shift();
        expect(Tok::semi, "';'");
    }

    void statement() {
        const Token head = expect(Tok::ident, "a statement");
        if (head.text == "OPENQASM" || head.text == "include") {
            skip_to_semi();
            return;
        }
        if (head.text == "qreg") {
            declare_qreg(head);
            return;
        }
        if (head.text == "creg") {
            // Accepted so strict output round-trips; classical bits are
            // not modeled.
            expect(Tok::ident, "a register name");
            expect(Tok::lbracket, "'['");
            expect(Tok::number, "a register size");
            expect(Tok::rbracket, "']'");
            expect(Tok::semi, "';'");
            return;
        }
        if (head.text == "measure") {
            const int q = qubit_operand();
            if (cur_.kind == Tok::arrow) {
                shift();
                expect(Tok::ident, "a register name");
                expect(Tok::lbracket, "'['");
                expect(Tok::number, "a bit index");
                expect(Tok::rbracket, "']'");
            }
            expect(Tok::semi, "';'");
            push(Measurement{q, Basis::z()}, head);
            return;
        }
        gate_statement(head);
    }

    void declare_qreg(const Token& head) {
        if (circuit_)
            throw parse_error("only one qreg declaration is supported", head.line, head.column);
        const Token name = expect(Tok::ident, "a register name");
        expect(Tok::lbracket, "'['");
        const Token size = expect(Tok::number, "a register size");
        expect(Tok::rbracket, "']'");
        expect(Tok::semi, "';'");
        const int n = int(size.value);
        if (n < 1 || double(n) != size.value)
            throw parse_error("qreg size must be a positive integer", size.line, size.column);
        qregName_ = name.text;
        circuit_.emplace(n);
    }

    int qubit_operand() {
        if (!circuit_)
            throw parse_error("qreg must be declared before use", cur_.line, cur_.column);
        const Token name = expect(Tok::ident, "a qubit reference");
        if (name.text != qregName_)
            throw parse_error("unknown register '" + name.text + "'", name.line, name.column);
        expect(Tok::lbracket, "'['");
        const Token index = expect(Tok::number, "a qubit index");
        expect(Tok::rbracket, "']'");
        const int q = int(index.value);
        if (q < 0 || double(q) != index.value || q >= circuit_->nb_qubits())
            throw parse_error("qubit index " + index.text + " out of range for qreg of size " +
                                  std::to_string(circuit_->nb_qubits()),
                              index.line, index.column);
        return q;
    }

    // pi | pi/k | k | k*pi | k*pi/m, optionally negated.
    double angle_argument() {
        bool negative = false;
        if (cur_.kind == Tok::minus) {
            negative = true;
            shift();
        }
        double value;
        if (cur_.kind == Tok::ident && cur_.text == "pi") {
            shift();
            value = std::numbers::pi;
        } else {
            const Token num = expect(Tok::number, "an angle");
            value = num.value;
            if (cur_.kind == Tok::star) {
                shift();
                const Token pi = expect(Tok::ident, "'pi'");
                if (pi.text != "pi")
                    throw parse_error("expected 'pi', got '" + pi.text + "'", pi.line, pi.column);
                value *= std::numbers::pi;
            }
        }
        if (cur_.kind == Tok::slash) {
            shift();
            const Token den = expect(Tok::number, "a divisor");
            if (den.value == 0.0)
                throw parse_error("division by zero in angle", den.line, den.column);
            value /= den.value;
        }
        return negative ? -value : value;
    }

    void gate_statement(const Token& head) {
        const auto& table = gate_table();
        const auto it = table.find(head.text);
        if (it == table.end())
            throw parse_error("unknown gate '" + head.text + "'", head.line, head.column);
        const GateSpec& spec = it->second;

        double theta = 0.0;
        if (spec.angle) {
            expect(Tok::lparen, "'('");
            theta = angle_argument();
            expect(Tok::rparen, "')'");
        }

        std::vector<int> operands;
        operands.push_back(qubit_operand());
        while (cur_.kind == Tok::comma) {
            shift();
            operands.push_back(qubit_operand());
        }
        expect(Tok::semi, "';'");
        if (int(operands.size()) != spec.operands)
            throw parse_error("gate '" + head.text + "' expects " +
                                  std::to_string(spec.operands) + " operand(s), got " +
                                  std::to_string(operands.size()),
                              head.line, head.column);

        Gate g;
        g.kind = spec.kind;
        g.theta = theta;
        g.targets = {operands.back()};
        for (std::size_t i = 0; i + 1 < operands.size(); ++i)
            g.controls.push_back({operands[i], 1});
        push(std::move(g), head);
    }

    void push(Instruction instr, const Token& at) {
        try {
            circuit_->push_back(std::move(instr));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), at.line, at.column);
        }
    }

    Lexer lexer_;
    Token cur_;
    std::optional<Circuit> circuit_;
    std::string qregName_;
};

} // namespace

std::string to_qasm(const Circuit& c, QasmDialect dialect) {
    Emitter emitter;
    emitter.dialect = dialect;
    if (dialect == QasmDialect::strict_qasm2) {
        emitter.out << "OPENQASM 2.0;\n";
        emitter.out << "include \"qelib1.inc\";\n";
    }
    emitter.out << "qreg q[" << c.nb_qubits() << "];\n";
    if (dialect == QasmDialect::strict_qasm2)
        emitter.out << "creg c[" << c.nb_qubits() << "];\n";
    for (const auto& instr : c.instructions()) {
        if (const auto* g = std::get_if<Gate>(&instr))
            emitter.gate(*g, 0);
        else if (const auto* m = std::get_if<Measurement>(&instr))
            emitter.measurement(*m, 0);
        else
            emitter.walk(*std::get<Block>(instr).circuit, std::get<Block>(instr).offset);
        ++emitter.topIndex;
    }
    return std::move(emitter.out).str();
}

Circuit parse_qasm(std::string_view text) {
    return Parser(text).parse();
}

} // namespace qcsim
