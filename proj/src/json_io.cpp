#include "qcsim/json_io.hpp"

#include <map>
#include <string>

#include "qcsim/errors.hpp"

namespace qcsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw parse_error("circuit JSON: " + msg); }

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

const std::map<std::string, GateKind, std::less<>>& kind_table() {
    static const std::map<std::string, GateKind, std::less<>> table = {
        {"h", GateKind::H},     {"x", GateKind::X},     {"y", GateKind::Y},
        {"z", GateKind::Z},     {"s", GateKind::S},     {"sdg", GateKind::Sdg},
        {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"rx", GateKind::RX},
        {"ry", GateKind::RY},   {"rz", GateKind::RZ},
    };
    return table;
}

const char* kind_string(GateKind kind) {
    for (const auto& [name, k] : kind_table())
        if (k == kind) return name.c_str();
    return nullptr;
}

Gate gate_from_json(const json& j) {
    Gate g;
    const std::string name = j.at("gate").get<std::string>();
    const auto it = kind_table().find(name);
    if (it == kind_table().end()) fail("unknown gate '" + name + "'");
    g.kind = it->second;

    const json& targets = j.at("targets");
    if (!targets.is_array() || targets.empty()) fail("'targets' must be a non-empty array");
    for (const auto& t : targets) g.targets.push_back(require_int(t, "target"));

    if (j.contains("controls")) {
        const json& controls = j.at("controls");
        if (!controls.is_array()) fail("'controls' must be an array");
        for (const auto& c : controls) {
            if (!c.is_object()) fail("each control must be an object");
            const int state = c.contains("state") ? require_int(c.at("state"), "control state") : 1;
            g.controls.push_back({require_int(c.at("qubit"), "control qubit"), state});
        }
    }

    const bool needsTheta = g.kind == GateKind::RX || g.kind == GateKind::RY || g.kind == GateKind::RZ;
    if (needsTheta) {
        if (!j.contains("theta") || !j.at("theta").is_number())
            fail("gate '" + name + "' requires a numeric 'theta'");
        g.theta = j.at("theta").get<double>();
    } else if (j.contains("theta")) {
        fail("gate '" + name + "' takes no 'theta'");
    }
    return g;
}

Measurement measurement_from_json(const json& j) {
    if (!j.is_object()) fail("'measure' must be an object");
    Measurement m;
    m.qubit = require_int(j.at("qubit"), "measured qubit");
    if (j.contains("basis")) {
        const std::string b = j.at("basis").get<std::string>();
        if (b == "z")
            m.basis = Basis::z();
        else if (b == "x")
            m.basis = Basis::x();
        else if (b == "y")
            m.basis = Basis::y();
        else
            fail("unknown basis '" + b + "'");
    }
    return m;
}

} // namespace

Circuit circuit_from_json(const json& doc) {
    if (!doc.is_object()) fail("document must be an object");
    if (!doc.contains("qubits")) fail("missing 'qubits'");
    const int n = require_int(doc.at("qubits"), "'qubits'");
    if (n < 1) fail("'qubits' must be positive");

    Circuit c(n);
    if (doc.contains("instructions")) {
        const json& instrs = doc.at("instructions");
        if (!instrs.is_array()) fail("'instructions' must be an array");
        for (const auto& j : instrs) {
            if (!j.is_object()) fail("each instruction must be an object");
            try {
                if (j.contains("gate")) {
                    c.push_back(gate_from_json(j));
                } else if (j.contains("measure")) {
                    c.push_back(measurement_from_json(j.at("measure")));
                } else if (j.contains("block")) {
                    const json& bj = j.at("block");
                    Circuit sub = circuit_from_json(bj.at("circuit"));
                    if (bj.contains("label")) sub.as_block(bj.at("label").get<std::string>());
                    const int offset =
                        bj.contains("offset") ? require_int(bj.at("offset"), "block offset") : 0;
                    c.push_back(sub, offset);
                } else {
                    fail("instruction needs one of 'gate', 'measure', 'block'");
                }
            } catch (const json::exception& e) {
                fail(e.what());
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        }
    }
    return c;
}

Circuit circuit_from_json_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return circuit_from_json(doc);
}

nlohmann::json circuit_to_json(const Circuit& c) {
    json instrs = json::array();
    for (const auto& instr : c.instructions()) {
        if (const auto* g = std::get_if<Gate>(&instr)) {
            const char* name = kind_string(g->kind);
            if (!name) throw unsupported_operation("custom gates have no JSON spelling");
            json j = {{"gate", name}, {"targets", g->targets}};
            if (!g->controls.empty()) {
                json controls = json::array();
                for (const auto& ctl : g->controls)
                    controls.push_back({{"qubit", ctl.qubit}, {"state", ctl.state}});
                j["controls"] = std::move(controls);
            }
            if (g->kind == GateKind::RX || g->kind == GateKind::RY || g->kind == GateKind::RZ)
                j["theta"] = g->theta;
            instrs.push_back(std::move(j));
        } else if (const auto* m = std::get_if<Measurement>(&instr)) {
            if (m->basis.kind() == Basis::Kind::Custom)
                throw unsupported_operation("custom bases have no JSON spelling");
            instrs.push_back(
                {{"measure",
                  {{"qubit", m->qubit}, {"basis", std::string(1, m->basis.letter())}}}});
        } else {
            const auto& b = std::get<Block>(instr);
            json bj = {{"circuit", circuit_to_json(*b.circuit)}, {"offset", b.offset}};
            if (b.circuit->draw_as_block()) bj["label"] = b.circuit->label();
            instrs.push_back({{"block", std::move(bj)}});
        }
    }
    return {{"qubits", c.nb_qubits()}, {"instructions", std::move(instrs)}};
}

nlohmann::json result_to_json(const SimulationResult& r) {
    json branches = json::array();
    for (std::size_t i = 0; i < r.branches().size(); ++i) {
        const Branch& br = r.branches()[i];
        json state = json::array();
        for (const cplx& a : br.state.amps) state.push_back({a.real(), a.imag()});
        json j = {{"outcome", br.outcome}, {"probability", br.probability},
                  {"state", std::move(state)}};
        if (r.has_reduced_states()) {
            json reduced = json::array();
            for (const cplx& a : r.reduced_states()[i].amps)
                reduced.push_back({a.real(), a.imag()});
            j["reducedState"] = std::move(reduced);
        }
        branches.push_back(std::move(j));
    }
    json measured = json::array();
    for (const auto& m : r.measured_qubits())
        measured.push_back({{"qubit", m.qubit}, {"basis", std::string(1, m.basis.letter())}});
    return {{"branches", std::move(branches)}, {"measuredQubits", std::move(measured)}};
}

} // namespace qcsim
