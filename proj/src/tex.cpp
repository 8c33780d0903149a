#include "qcsim/tex.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace qcsim {

namespace {

std::string tex_gate_label(const Gate& g) {
    char buf[48];
    switch (g.kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "S^\\dagger";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "T^\\dagger";
        case GateKind::RX:
            std::snprintf(buf, sizeof(buf), "R_x(%.6g)", g.theta);
            return buf;
        case GateKind::RY:
            std::snprintf(buf, sizeof(buf), "R_y(%.6g)", g.theta);
            return buf;
        case GateKind::RZ:
            std::snprintf(buf, sizeof(buf), "R_z(%.6g)", g.theta);
            return buf;
        case GateKind::Custom: return "U";
    }
    return "?";
}

using TexColumn = std::vector<std::string>; // one cell per qubit row

void emit_gate(const Gate& g, int offset, TexColumn& col) {
    const int first = g.targets.front() + offset;
    const int last = g.targets.back() + offset;

    if (g.kind == GateKind::Custom && g.targets.size() > 1) {
        col[first] = "\\multigate{" + std::to_string(last - first) + "}{U}";
        for (int r = first + 1; r <= last; ++r) col[r] = "\\ghost{U}";
    } else if (!g.controls.empty() && g.kind == GateKind::X) {
        col[first] = "\\targ";
    } else {
        col[first] = "\\gate{" + tex_gate_label(g) + "}";
    }

    if (g.controls.empty()) return;

    // Each control points at the next involved row in the direction of
    // the target, chaining the vertical wire through the column.
    std::vector<int> involved;
    for (int r = first; r <= last; ++r) involved.push_back(r);
    for (const auto& c : g.controls) involved.push_back(c.qubit + offset);
    std::sort(involved.begin(), involved.end());
    for (const auto& c : g.controls) {
        const int row = c.qubit + offset;
        int next;
        if (row < first) {
            next = *std::upper_bound(involved.begin(), involved.end(), row);
        } else {
            auto it = std::lower_bound(involved.begin(), involved.end(), row);
            next = *std::prev(it);
        }
        col[row] = std::string(c.state ? "\\ctrl{" : "\\ctrlo{") + std::to_string(next - row) + "}";
    }
}

void collect(const Circuit& c, int offset, int nbQubits, std::vector<TexColumn>& cols) {
    for (const auto& instr : c.instructions()) {
        TexColumn col(nbQubits, "\\qw");
        if (const auto* g = std::get_if<Gate>(&instr)) {
            emit_gate(*g, offset, col);
            cols.push_back(std::move(col));
        } else if (const auto* m = std::get_if<Measurement>(&instr)) {
            col[m->qubit + offset] = "\\meter";
            cols.push_back(std::move(col));
        } else {
            const auto& b = std::get<Block>(instr);
            if (b.circuit->draw_as_block()) {
                const int first = b.offset + offset;
                const int span = b.circuit->nb_qubits();
                const std::string label =
                    b.circuit->label().empty() ? "block" : b.circuit->label();
                col[first] = "\\multigate{" + std::to_string(span - 1) + "}{\\mathrm{" + label + "}}";
                for (int r = first + 1; r < first + span; ++r)
                    col[r] = "\\ghost{\\mathrm{" + label + "}}";
                cols.push_back(std::move(col));
            } else {
                collect(*b.circuit, offset + b.offset, nbQubits, cols);
            }
        }
    }
}

} // namespace

std::string to_tex(const Circuit& c) {
    const int n = c.nb_qubits();
    std::vector<TexColumn> cols;
    collect(c, 0, n, cols);

    std::ostringstream out;
    for (int r = 0; r < n; ++r) {
        out << "\\lstick{q_{" << r << "}}";
        if (cols.empty()) out << " & \\qw";
        for (const auto& col : cols) out << " & " << col[r];
        out << " \\\\\n";
    }
    return std::move(out).str();
}

std::string to_tex_standalone(const Circuit& c) {
    std::ostringstream out;
    out << "\\documentclass{article}\n"
        << "\\usepackage{qcircuit}\n"
        << "\\begin{document}\n"
        << "\\Qcircuit @C=1em @R=.7em {\n"
        << to_tex(c)
        << "}\n"
        << "\\end{document}\n";
    return std::move(out).str();
}

} // namespace qcsim
