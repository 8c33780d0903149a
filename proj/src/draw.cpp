#include "qcsim/draw.hpp"

#include <algorithm>
#include <sstream>

namespace qcsim {

namespace {

constexpr const char* kWire = "━";
constexpr const char* kVert = "┃";
constexpr const char* kSpace = " ";

std::size_t display_width(std::string_view s) {
    std::size_t w = 0;
    for (char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string repeated(std::string_view glyph, std::size_t count) {
    std::string out;
    out.reserve(glyph.size() * count);
    for (std::size_t i = 0; i < count; ++i) out += glyph;
    return out;
}

std::string centered(std::string_view text, std::size_t width, std::string_view fill) {
    const std::size_t w = display_width(text);
    const std::size_t left = (width - w) / 2;
    return repeated(fill, left) + std::string(text) + repeated(fill, width - w - left);
}

const char* gate_label(const Gate& g) {
    switch (g.kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "S†";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "T†";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::Custom: return "U";
    }
    return "?";
}

struct Cell {
    std::string top, mid, bottom;
};

// One rendered column. A column may hold a (possibly multi-row) box,
// control dots and an ⊕ target; involved rows are joined by a vertical
// connector.
struct Column {
    int nbQubits;
    int boxFirst = -1, boxLast = -1;
    std::string boxText;
    std::vector<std::pair<int, std::string>> glyphs; // row -> ● ○ ⊕

    std::vector<Cell> render() const {
        int lo = boxFirst, hi = boxLast;
        for (const auto& [row, glyph] : glyphs) {
            lo = (lo < 0) ? row : std::min(lo, row);
            hi = std::max(hi, row);
        }
        std::size_t width = 1;
        if (boxFirst >= 0) width = std::max(width, display_width(boxText) + 2);

        std::vector<Cell> cells(nbQubits);
        for (int r = 0; r < nbQubits; ++r) {
            Cell& cell = cells[r];
            if (boxFirst >= 0 && r >= boxFirst && r <= boxLast) {
                const int mid = (boxFirst + boxLast) / 2;
                cell.top = (r == boxFirst) ? "┏" + repeated(kWire, width - 2) + "┓"
                                           : std::string(kVert) + repeated(kSpace, width - 2) + kVert;
                cell.mid = std::string(kVert) +
                           centered(r == mid ? boxText : "", width - 2, kSpace) + kVert;
                cell.bottom = (r == boxLast) ? "┗" + repeated(kWire, width - 2) + "┛"
                                             : std::string(kVert) + repeated(kSpace, width - 2) + kVert;
                continue;
            }
            const auto it = std::find_if(glyphs.begin(), glyphs.end(),
                                         [r](const auto& g) { return g.first == r; });
            if (it != glyphs.end()) {
                cell.top = centered(lo < r ? kVert : "", width, kSpace);
                cell.mid = centered(it->second, width, kWire);
                cell.bottom = centered(hi > r ? kVert : "", width, kSpace);
            } else if (lo < r && r < hi) {
                cell.top = centered(kVert, width, kSpace);
                cell.mid = centered(kVert, width, kWire);
                cell.bottom = centered(kVert, width, kSpace);
            } else {
                cell.top = repeated(kSpace, width);
                cell.mid = repeated(kWire, width);
                cell.bottom = repeated(kSpace, width);
            }
        }
        return cells;
    }
};

void collect(const Circuit& c, int offset, int nbQubits, std::vector<Column>& cols) {
    for (const auto& instr : c.instructions()) {
        Column col;
        col.nbQubits = nbQubits;
        if (const auto* g = std::get_if<Gate>(&instr)) {
            const int first = g->targets.front() + offset;
            const int last = g->targets.back() + offset;
            if (g->kind == GateKind::X && !g->controls.empty()) {
                col.glyphs.emplace_back(first, "⊕");
            } else {
                col.boxFirst = first;
                col.boxLast = last;
                col.boxText = gate_label(*g);
            }
            for (const auto& ctl : g->controls)
                col.glyphs.emplace_back(ctl.qubit + offset, ctl.state ? "●" : "○");
            cols.push_back(std::move(col));
        } else if (std::holds_alternative<Measurement>(instr)) {
            const auto& m = std::get<Measurement>(instr);
            col.boxFirst = col.boxLast = m.qubit + offset;
            col.boxText = "M";
            cols.push_back(std::move(col));
        } else {
            const auto& b = std::get<Block>(instr);
            if (b.circuit->draw_as_block()) {
                col.boxFirst = b.offset + offset;
                col.boxLast = col.boxFirst + b.circuit->nb_qubits() - 1;
                col.boxText = b.circuit->label().empty() ? "block" : b.circuit->label();
                cols.push_back(std::move(col));
            } else {
                collect(*b.circuit, offset + b.offset, nbQubits, cols);
            }
        }
    }
}

} // namespace

std::string draw_ascii(const Circuit& c) {
    const int n = c.nb_qubits();
    std::vector<Column> cols;
    collect(c, 0, n, cols);

    std::size_t labelWidth = 0;
    std::vector<std::string> labels(n);
    for (int r = 0; r < n; ++r) {
        labels[r] = "q" + std::to_string(r) + ": ";
        labelWidth = std::max(labelWidth, labels[r].size());
    }

    std::vector<std::string> lines(3 * std::size_t(n));
    for (int r = 0; r < n; ++r) {
        lines[3 * r + 0] = repeated(kSpace, labelWidth) + kSpace;
        lines[3 * r + 1] =
            labels[r] + repeated(kSpace, labelWidth - labels[r].size()) + kWire;
        lines[3 * r + 2] = repeated(kSpace, labelWidth) + kSpace;
    }
    for (const auto& col : cols) {
        const auto cells = col.render();
        for (int r = 0; r < n; ++r) {
            lines[3 * r + 0] += cells[r].top + kSpace;
            lines[3 * r + 1] += cells[r].mid + kWire;
            lines[3 * r + 2] += cells[r].bottom + kSpace;
        }
    }

    std::ostringstream out;
    for (const auto& line : lines) out << line << '\n';
    return std::move(out).str();
}

} // namespace qcsim
