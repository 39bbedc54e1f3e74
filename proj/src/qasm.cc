// Copyright 2026 The qinvariant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qinv/qasm.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace qinv {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string qubit(int k) {
    return "q[" + std::to_string(k) + "]";
}

void emit_rzz(std::ostringstream &out, int a, int b, const std::string &angle) {
    out << "cx " << qubit(a) << "," << qubit(b) << ";\n";
    out << "rz(" << angle << ") " << qubit(b) << ";\n";
    out << "cx " << qubit(a) << "," << qubit(b) << ";\n";
}

void emit_gate(std::ostringstream &out, const GateOp &g) {
    switch (g.family) {
        case GateFamily::CNOT:
            out << "cx " << qubit(g.p) << "," << qubit(g.q) << ";\n";
            break;
        case GateFamily::CP:
            out << "cu1(pi) " << qubit(g.p) << "," << qubit(g.q) << ";\n";
            break;
        case GateFamily::SWAP:
            out << "cx " << qubit(g.p) << "," << qubit(g.q) << ";\n";
            out << "cx " << qubit(g.q) << "," << qubit(g.p) << ";\n";
            out << "cx " << qubit(g.p) << "," << qubit(g.q) << ";\n";
            break;
        case GateFamily::SWAP_ALPHA: {
            std::string angle = "pi*" + fmt_double(*g.alpha / 2.0);
            out << "// swap^" << fmt_double(*g.alpha) << " " << qubit(g.p) << "," << qubit(g.q) << "\n";
            out << "h " << qubit(g.p) << ";\nh " << qubit(g.q) << ";\n";
            emit_rzz(out, g.p, g.q, angle);
            out << "h " << qubit(g.p) << ";\nh " << qubit(g.q) << ";\n";
            out << "sdg " << qubit(g.p) << ";\nsdg " << qubit(g.q) << ";\n";
            out << "h " << qubit(g.p) << ";\nh " << qubit(g.q) << ";\n";
            emit_rzz(out, g.p, g.q, angle);
            out << "h " << qubit(g.p) << ";\nh " << qubit(g.q) << ";\n";
            out << "s " << qubit(g.p) << ";\ns " << qubit(g.q) << ";\n";
            emit_rzz(out, g.p, g.q, angle);
            break;
        }
    }
}

}  // namespace

std::string to_qasm(const std::vector<GateOp> &gates, int n, const std::string &title) {
    for (const auto &g : gates) {
        validate_gate(g, n);
    }
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "// schema: qinv.qasm/1\n";
    if (!title.empty()) {
        out << "// " << title << "\n";
    }
    out << "// qubit k is q[k]; cx control,target; cp = cu1(pi)\n";
    out << "// swap = cx a,b; cx b,a; cx a,b\n";
    out << "// swap^alpha = exp(i pi alpha/4) rxx(t) ryy(t) rzz(t), t = pi*alpha/2\n";
    out << "//   rzz(t) = cx a,b; rz(t) b; cx a,b\n";
    out << "//   rxx(t) = h a; h b; rzz(t); h a; h b\n";
    out << "//   ryy(t) = sdg a; sdg b; h a; h b; rzz(t); h a; h b; s a; s b\n";
    out << "qreg q[" << n << "];\n";
    out << "creg c[" << n << "];\n";
    out << "// prep: hardware-specific initialization into the start subspace goes here\n";
    out << "barrier q;\n";
    for (const auto &g : gates) {
        emit_gate(out, g);
    }
    out << "barrier q;\n";
    for (int k = 0; k < n; k++) {
        out << "measure " << qubit(k) << " -> c[" << k << "];\n";
    }
    return out.str();
}

QasmParseError::QasmParseError(int line_number, const std::string &message)
    : std::runtime_error("qasm line " + std::to_string(line_number) + ": " + message), line(line_number) {}

namespace {

/// Recursive-descent evaluator for angle expressions: numbers, pi, + - * / and parentheses.
class AngleParser {
   public:
    AngleParser(const std::string &text, int line) : s_(text), line_(line) {}

    double parse() {
        double v = expr();
        skip_ws();
        if (pos_ != s_.size()) {
            fail("trailing characters in angle");
        }
        return v;
    }

   private:
    void fail(const std::string &msg) const {
        throw QasmParseError(line_, msg + " '" + s_ + "'");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            pos_++;
        }
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }
    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                double d = unary();
                if (d == 0) {
                    fail("division by zero in angle");
                }
                v /= d;
            } else {
                return v;
            }
        }
    }
    double unary() {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        return primary();
    }
    double primary() {
        skip_ws();
        if (eat('(')) {
            double v = expr();
            if (!eat(')')) {
                fail("missing ')' in angle");
            }
            return v;
        }
        if (s_.compare(pos_, 2, "pi") == 0) {
            pos_ += 2;
            return std::numbers::pi;
        }
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                    s_[pos_] == 'e' || s_[pos_] == 'E' ||
                                    ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
                                     (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E')))) {
            pos_++;
        }
        if (start == pos_) {
            fail("expected a number or pi");
        }
        std::string token = s_.substr(start, pos_ - start);
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception &) {
            fail("bad number");
        }
        if (used != token.size()) {
            fail("bad number");
        }
        return v;
    }

    std::string s_;
    size_t pos_ = 0;
    int line_;
};

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_index(const std::string &arg, const std::string &reg, int size, int line) {
    std::string a = trim(arg);
    if (a.size() < reg.size() + 3 || a.compare(0, reg.size(), reg) != 0 || a[reg.size()] != '[' || a.back() != ']') {
        throw QasmParseError(line, "expected " + reg + "[k], got '" + a + "'");
    }
    std::string digits = a.substr(reg.size() + 1, a.size() - reg.size() - 2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw QasmParseError(line, "bad register index '" + a + "'");
    }
    int k = std::stoi(digits);
    if (k >= size) {
        throw QasmParseError(line, "register index out of range '" + a + "'");
    }
    return k;
}

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_reg_decl(const std::string &rest, const std::string &name, int line) {
    std::string r = trim(rest);
    if (r.size() < name.size() + 3 || r.compare(0, name.size(), name) != 0 || r[name.size()] != '[' ||
        r.back() != ']') {
        throw QasmParseError(line, "expected register " + name + "[size]");
    }
    std::string digits = r.substr(name.size() + 1, r.size() - name.size() - 2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw QasmParseError(line, "bad register size");
    }
    int size = std::stoi(digits);
    if (size < 1) {
        throw QasmParseError(line, "register size must be positive");
    }
    return size;
}

}  // namespace

QasmProgram parse_qasm_strict(const std::string &text) {
    QasmProgram prog;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool seen_header = false;
    bool seen_include = false;
    while (std::getline(in, raw)) {
        line++;
        std::string s = raw;
        if (auto c = s.find("//"); c != std::string::npos) {
            s = s.substr(0, c);
        }
        s = trim(s);
        if (s.empty()) {
            continue;
        }
        if (s.back() != ';') {
            throw QasmParseError(line, "statement must end with ';'");
        }
        s = trim(s.substr(0, s.size() - 1));
        if (s.find(';') != std::string::npos) {
            throw QasmParseError(line, "one statement per line");
        }
        if (!seen_header) {
            if (s != "OPENQASM 2.0") {
                throw QasmParseError(line, "expected 'OPENQASM 2.0;' header");
            }
            seen_header = true;
            continue;
        }
        if (s == "include \"qelib1.inc\"") {
            if (seen_include || prog.num_qubits > 0) {
                throw QasmParseError(line, "unexpected include");
            }
            seen_include = true;
            continue;
        }
        // Split the mnemonic (possibly with a parenthesized parameter) from the arguments.
        std::string head;
        std::string args;
        size_t k = 0;
        while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) {
            k++;
        }
        head = s.substr(0, k);
        std::string param;
        bool has_param = false;
        if (k < s.size() && s[k] == '(') {
            size_t close = std::string::npos;
            for (size_t j = k, depth = 0; j < s.size(); j++) {
                if (s[j] == '(') {
                    depth++;
                } else if (s[j] == ')' && --depth == 0) {
                    close = j;
                    break;
                }
            }
            if (close == std::string::npos) {
                throw QasmParseError(line, "missing ')'");
            }
            param = s.substr(k + 1, close - k - 1);
            has_param = true;
            k = close + 1;
        }
        args = trim(s.substr(k));
        if (head == "qreg") {
            if (prog.num_qubits > 0) {
                throw QasmParseError(line, "only one qreg allowed");
            }
            prog.num_qubits = parse_reg_decl(args, "q", line);
            continue;
        }
        if (head == "creg") {
            if (prog.num_clbits > 0) {
                throw QasmParseError(line, "only one creg allowed");
            }
            prog.num_clbits = parse_reg_decl(args, "c", line);
            continue;
        }
        if (prog.num_qubits == 0) {
            throw QasmParseError(line, "statement before qreg declaration");
        }
        QasmInstruction ins{};
        if (head == "barrier") {
            if (args != "q") {
                throw QasmParseError(line, "barrier must act on the whole register q");
            }
            ins.op = QasmOp::BARRIER;
            prog.instructions.push_back(ins);
            continue;
        }
        if (head == "measure") {
            auto arrow = args.find("->");
            if (arrow == std::string::npos) {
                throw QasmParseError(line, "measure needs '->'");
            }
            if (prog.num_clbits == 0) {
                throw QasmParseError(line, "measure before creg declaration");
            }
            ins.op = QasmOp::MEASURE;
            ins.qubits = {parse_index(args.substr(0, arrow), "q", prog.num_qubits, line),
                          parse_index(args.substr(arrow + 2), "c", prog.num_clbits, line)};
            prog.instructions.push_back(ins);
            continue;
        }
        struct GateSyntax {
            const char *name;
            QasmOp op;
            int arity;
            bool param;
        };
        static const GateSyntax kGateSyntax[] = {
            {"h", QasmOp::H, 1, false},    {"s", QasmOp::S, 1, false},   {"sdg", QasmOp::SDG, 1, false},
            {"x", QasmOp::X, 1, false},    {"rz", QasmOp::RZ, 1, true},  {"cx", QasmOp::CX, 2, false},
            {"cu1", QasmOp::CU1, 2, true},
        };
        const GateSyntax *syntax = nullptr;
        for (const auto &entry : kGateSyntax) {
            if (head == entry.name) {
                syntax = &entry;
            }
        }
        if (syntax == nullptr) {
            throw QasmParseError(line, "unsupported statement '" + head + "'");
        }
        if (syntax->param != has_param) {
            throw QasmParseError(line, syntax->param ? "gate needs a parameter" : "gate takes no parameter");
        }
        ins.op = syntax->op;
        if (has_param) {
            ins.angle = AngleParser(param, line).parse();
        }
        auto parts = split_commas(args);
        if (static_cast<int>(parts.size()) != syntax->arity) {
            throw QasmParseError(line, "wrong number of qubit arguments");
        }
        for (const auto &part : parts) {
            ins.qubits.push_back(parse_index(part, "q", prog.num_qubits, line));
        }
        if (syntax->arity == 2 && ins.qubits[0] == ins.qubits[1]) {
            throw QasmParseError(line, "two-qubit gate on a single qubit");
        }
        prog.instructions.push_back(ins);
    }
    if (!seen_header) {
        throw QasmParseError(line, "empty program");
    }
    if (!seen_include) {
        throw QasmParseError(line, "missing include \"qelib1.inc\"");
    }
    if (prog.num_qubits == 0) {
        throw QasmParseError(line, "missing qreg");
    }
    return prog;
}

namespace {

void apply_single(StateVector &state, int qubit, const Eigen::Matrix2cd &m) {
    const uint64_t bit = uint64_t{1} << qubit;
    for (uint64_t i = 0; i < state.dim(); i++) {
        if (i & bit) {
            continue;
        }
        complex_t a0 = state[i];
        complex_t a1 = state[i | bit];
        state[i] = m(0, 0) * a0 + m(0, 1) * a1;
        state[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

}  // namespace

void simulate_qasm(StateVector &state, const QasmProgram &program) {
    if (state.num_qubits() != program.num_qubits) {
        throw std::invalid_argument("simulate_qasm: qubit count mismatch");
    }
    const double r = 1.0 / std::sqrt(2.0);
    const complex_t i1{0, 1};
    for (const auto &ins : program.instructions) {
        Eigen::Matrix2cd m;
        switch (ins.op) {
            case QasmOp::H:
                m << r, r, r, -r;
                apply_single(state, ins.qubits[0], m);
                break;
            case QasmOp::S:
                m << 1, 0, 0, i1;
                apply_single(state, ins.qubits[0], m);
                break;
            case QasmOp::SDG:
                m << 1, 0, 0, -i1;
                apply_single(state, ins.qubits[0], m);
                break;
            case QasmOp::X:
                apply_pauli(state, ins.qubits[0], Pauli::X);
                break;
            case QasmOp::RZ:
                m << 1, 0, 0, std::exp(i1 * ins.angle);
                apply_single(state, ins.qubits[0], m);
                break;
            case QasmOp::CX:
                apply_gate_inplace(state, GateOp::cnot(ins.qubits[0], ins.qubits[1]));
                break;
            case QasmOp::CU1:
                apply_controlled_phase(state, ins.qubits[0], ins.qubits[1], ins.angle);
                break;
            case QasmOp::MEASURE:
            case QasmOp::BARRIER:
                break;
        }
    }
}

double qasm_equivalence_defect(const QasmProgram &program, const std::vector<GateOp> &gates, int n) {
    if (program.num_qubits != n) {
        throw std::invalid_argument("qasm_equivalence_defect: qubit count mismatch");
    }
    if (n > size_limits().max_dense_qubits) {
        throw std::length_error("qasm_equivalence_defect: too many qubits");
    }
    const uint64_t dim = uint64_t{1} << n;
    UnitaryMatrix a(dim, dim);
    UnitaryMatrix b(dim, dim);
    for (uint64_t col = 0; col < dim; col++) {
        StateVector s = basis_state(n, col);
        StateVector t = s;
        simulate_qasm(s, program);
        apply_sequence_inplace(t, gates);
        for (uint64_t row = 0; row < dim; row++) {
            a(row, col) = s[row];
            b(row, col) = t[row];
        }
    }
    // Global phase from the largest entry of the reference.
    Eigen::Index r0 = 0;
    Eigen::Index c0 = 0;
    b.cwiseAbs().maxCoeff(&r0, &c0);
    if (std::abs(a(r0, c0)) < 1e-12) {
        return (a - b).cwiseAbs().maxCoeff();
    }
    complex_t phase = b(r0, c0) / a(r0, c0);
    phase /= std::abs(phase);
    return (a * phase - b).cwiseAbs().maxCoeff();
}

}  // namespace qinv
