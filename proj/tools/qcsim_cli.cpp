// qcsim command line: load circuits (OpenQASM subset or JSON), simulate,
// sample counts, render diagrams, and run the built-in example programs.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcsim/qcsim.hpp"

namespace {

using namespace qcsim;

constexpr int kExitInput = 2;
constexpr int kExitExport = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

Circuit load_circuit(const std::string& path, const std::string& format) {
    std::string kind = format;
    if (kind.empty()) {
        if (path.ends_with(".qasm")) kind = "qasm";
        else if (path.ends_with(".json")) kind = "json";
        else
            throw std::invalid_argument("cannot infer format of '" + path +
                                        "'; pass --format qasm|json");
    }
    const std::string text = read_file(path);
    if (kind == "qasm") return parse_qasm(text);
    if (kind == "json") return circuit_from_json_text(text);
    throw std::invalid_argument("unknown format '" + kind + "'");
}

// One amplitude per line: "re" or "re im". Blank lines and # comments ok.
std::vector<cplx> read_amplitudes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::vector<cplx> amps;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        double re = 0.0, im = 0.0;
        if (!(row >> re))
            throw parse_error("expected an amplitude", lineNo, int(first) + 1);
        row >> im;
        amps.emplace_back(re, im);
    }
    if (amps.empty()) throw std::invalid_argument("no amplitudes in '" + path + "'");
    return amps;
}

StateVector initial_state(const Circuit& c, const std::string& bits, const std::string& vecFile) {
    if (!vecFile.empty()) return init_state(read_amplitudes(vecFile), c.nb_qubits());
    if (!bits.empty()) {
        if (int(bits.size()) != c.nb_qubits())
            throw std::invalid_argument("--init has " + std::to_string(bits.size()) +
                                        " bits, circuit has " + std::to_string(c.nb_qubits()) +
                                        " qubits");
        return init_state(bits);
    }
    return init_state(std::string(std::size_t(c.nb_qubits()), '0'));
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QSIM_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string fmt_prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", p);
    return buf;
}

std::string fmt_amp(cplx a) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f %c %.4fi", a.real(), a.imag() < 0 ? '-' : '+',
                  std::abs(a.imag()));
    return buf;
}

std::string fmt_state(const StateVector& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (i) out += ", ";
        out += fmt_amp(s.amps[i]);
    }
    return out + "]";
}

void print_branches(const SimulationResult& result, bool withStates) {
    for (const auto& br : result.branches()) {
        std::cout << (br.outcome.empty() ? "-" : br.outcome) << ' '
                  << fmt_prob(br.probability) << '\n';
        if (withStates)
            for (const auto& a : br.state.amps) std::cout << "  " << fmt_amp(a) << '\n';
    }
}

int cmd_run(const std::string& file, const std::string& format, const std::string& init,
            const std::string& initVec, bool json, bool states) {
    const Circuit c = load_circuit(file, format);
    const auto result = simulate(c, initial_state(c, init, initVec));
    if (json) {
        std::cout << result_to_json(result).dump(2) << '\n';
    } else {
        print_branches(result, states);
    }
    return 0;
}

int cmd_counts(const std::string& file, const std::string& format, const std::string& init,
               const std::string& initVec, long long shots, std::uint64_t seed) {
    const Circuit c = load_circuit(file, format);
    const auto result = simulate(c, initial_state(c, init, initVec));
    for (const auto& [outcome, count] : result.counts(shots, seed))
        std::cout << outcome << ' ' << count << '\n';
    return 0;
}

int cmd_example_teleport() {
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<cplx> v = {s, cplx(0, s)};
    std::vector<cplx> initial;
    for (const auto& a : v)
        for (const cplx& b : {cplx(s), cplx(0.0), cplx(0.0), cplx(s)}) initial.push_back(a * b);

    const auto result = simulate(build_teleportation(), initial);
    const std::vector<int> known = {0, 1};
    for (const auto& br : result.branches()) {
        const StateVector reduced = reduced_statevector(br.state, known, br.outcome);
        cplx inner = std::conj(v[0]) * reduced.amps[0] + std::conj(v[1]) * reduced.amps[1];
        std::cout << br.outcome << ' ' << fmt_prob(br.probability) << " q2=" << fmt_state(reduced)
                  << " fidelity=" << fmt_prob(std::abs(inner)) << '\n';
    }
    return 0;
}

int cmd_example_grover() {
    print_branches(simulate(build_grover2(), "00"), false);
    return 0;
}

int cmd_example_qec(const std::string& error) {
    std::optional<int> errorQubit;
    if (error != "none") {
        char* end = nullptr;
        const long q = std::strtol(error.c_str(), &end, 10);
        if (end == error.c_str() || *end != '\0')
            throw std::invalid_argument("--error expects 0, 1, 2 or none");
        errorQubit = int(q);
    }
    const Circuit qec = build_repetition_qec(errorQubit);
    std::vector<cplx> initial(32);
    const double s = 1.0 / std::sqrt(2.0);
    initial[0] = s;        // v ⊗ |0000>
    initial[16] = cplx(0, s);
    const auto result = simulate(qec, initial);

    const auto& br = result.branches().front();
    std::cout << "syndrome " << br.outcome << " probability " << fmt_prob(br.probability) << '\n';
    const auto target = qec_correction_target(br.outcome);
    std::cout << "correction " << (target ? "q" + std::to_string(*target) : "none") << '\n';

    const std::vector<int> ancillas = {3, 4};
    const StateVector physical = reduced_statevector(br.state, ancillas, br.outcome);
    double err = 0.0;
    for (int i = 0; i < 8; ++i) {
        const cplx want = (i == 0) ? cplx(s) : (i == 7) ? cplx(0, s) : cplx{};
        err = std::max(err, std::abs(physical.amps[i] - want));
    }
    std::cout << "restored-state check " << (err < 1e-10 ? "PASS" : "FAIL") << '\n';
    return err < 1e-10 ? 0 : kExitInput;
}

int cmd_example_tomography(long long shots, std::uint64_t seed) {
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector v = init_state({s, cplx(0, s)}, 1);
    const auto [coeff, rho] = tomography_estimate(v, shots, seed);
    std::printf("S1 = %.6f\nS2 = %.6f\nS3 = %.6f\n", coeff.s1, coeff.s2, coeff.s3);
    std::cout << "rho_est =\n";
    for (int r = 0; r < 2; ++r)
        std::cout << "  [" << fmt_amp(rho(r, 0)) << ", " << fmt_amp(rho(r, 1)) << "]\n";
    std::printf("trace distance = %.6f\n", trace_distance(DensityMatrix::pure(v), rho));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcsim: quantum circuit construction and state-vector simulation"};
    app.require_subcommand(1);

    std::string file, format, init, initVec, error = "0", name;
    bool json = false, states = false, standalone = false, strict = false;
    long long shots = 1000;
    std::uint64_t seed = default_seed();

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "circuit file (.qasm or .json)")->required();
        cmd->add_option("--format", format, "override format detection (qasm|json)");
    };
    auto add_init = [&](CLI::App* cmd) {
        cmd->add_option("--init", init, "initial state bitstring (default all zeros)");
        cmd->add_option("--init-vec", initVec, "file with one amplitude per line: re [im]");
    };

    CLI::App* run = app.add_subcommand("run", "simulate and print the measurement branches");
    add_io(run);
    add_init(run);
    run->add_flag("--json", json, "machine-readable result");
    run->add_flag("--states", states, "also print the collapsed state vectors");

    CLI::App* counts = app.add_subcommand("counts", "sample outcome frequencies");
    add_io(counts);
    add_init(counts);
    counts->add_option("--shots", shots, "number of samples")->required();
    counts->add_option("--seed", seed, "RNG seed (default $QSIM_SEED or 0)");

    CLI::App* draw = app.add_subcommand("draw", "ASCII circuit diagram");
    add_io(draw);

    CLI::App* tex = app.add_subcommand("tex", "LaTeX (qcircuit) rows");
    add_io(tex);
    tex->add_flag("--standalone", standalone, "wrap in a compilable document");

    CLI::App* qasm = app.add_subcommand("qasm", "OpenQASM export");
    add_io(qasm);
    qasm->add_flag("--strict", strict, "valid OpenQASM 2 with classical registers");

    CLI::App* example =
        app.add_subcommand("example", "run a built-in example program");
    example->add_option("name", name, "teleport | grover | qec | tomography")->required();
    example->add_option("--error", error, "qec: flipped qubit, 0|1|2|none (default 0)");
    example->add_option("--shots", shots, "tomography: sample count (default 1000)");
    example->add_option("--seed", seed, "tomography: RNG seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (run->parsed()) return cmd_run(file, format, init, initVec, json, states);
        if (counts->parsed()) return cmd_counts(file, format, init, initVec, shots, seed);
        if (draw->parsed()) {
            std::cout << draw_ascii(load_circuit(file, format));
            return 0;
        }
        if (tex->parsed()) {
            const Circuit c = load_circuit(file, format);
            std::cout << (standalone ? to_tex_standalone(c) : to_tex(c));
            return 0;
        }
        if (qasm->parsed()) {
            std::cout << to_qasm(load_circuit(file, format),
                                 strict ? QasmDialect::strict_qasm2
                                        : QasmDialect::compact);
            return 0;
        }
        if (example->parsed()) {
            if (name == "teleport") return cmd_example_teleport();
            if (name == "grover") return cmd_example_grover();
            if (name == "qec") return cmd_example_qec(error);
            if (name == "tomography")
                return cmd_example_tomography(shots,
                                              example->count("--seed") ? seed : 1);
            throw std::invalid_argument("unknown example '" + name + "'");
        }
    } catch (const unsupported_export_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitExport;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
