// Drives the command-line binary end to end. The binary path arrives via
// the QCSIM_CLI environment variable (set by the test registration).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("QCSIM_CLI");
    REQUIRE_MESSAGE(env != nullptr, "QCSIM_CLI must point at the CLI binary");
    return env;
}

RunResult run(const std::string& args, const std::string& envPrefix = "") {
    const std::string cmd = envPrefix + cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class TempDir {
  public:
    TempDir() {
        char tmpl[] = "/tmp/qcsim_cli_XXXXXX";
        REQUIRE(mkdtemp(tmpl) != nullptr);
        path_ = tmpl;
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content) const {
        const std::string p = path_ + "/" + name;
        std::ofstream out(p);
        out << content;
        return p;
    }

  private:
    std::string path_;
};

const char* kBellQasm =
    "qreg q[2];\nh q[0];\ncx q[0], q[1];\nmeasure q[0];\nmeasure q[1];\n";

const char* kMeasureXJson = R"({"qubits": 1, "instructions": [
    {"measure": {"qubit": 0, "basis": "x"}}]})";

const char* kGroverJson = R"({"qubits": 2, "instructions": [
    {"gate": "h", "targets": [0]},
    {"gate": "h", "targets": [1]},
    {"block": {"label": "oracle", "circuit": {"qubits": 2, "instructions": [
        {"gate": "z", "targets": [1], "controls": [{"qubit": 0}]}]}}},
    {"block": {"label": "diffuser", "circuit": {"qubits": 2, "instructions": [
        {"gate": "h", "targets": [0]}, {"gate": "h", "targets": [1]},
        {"gate": "z", "targets": [0]}, {"gate": "z", "targets": [1]},
        {"gate": "z", "targets": [1], "controls": [{"qubit": 0}]},
        {"gate": "h", "targets": [0]}, {"gate": "h", "targets": [1]}]}}},
    {"measure": {"qubit": 0}},
    {"measure": {"qubit": 1}}]})";

} // namespace

TEST_CASE("run prints the branch table") {
    TempDir dir;
    const auto bell = dir.file("bell.qasm", kBellQasm);
    const auto r = run("run " + bell + " --init 00");
    CHECK(r.exitCode == 0);
    CHECK(r.output == "00 0.500000\n11 0.500000\n");
}

TEST_CASE("run --json emits parseable full-precision output") {
    TempDir dir;
    const auto bell = dir.file("bell.qasm", kBellQasm);
    const auto r = run("run " + bell + " --json");
    CHECK(r.exitCode == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.at("branches").size() == 2);
    CHECK(j.at("branches")[0].at("outcome") == "00");
    CHECK(j.at("branches")[0].at("probability").get<double>() ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(j.at("branches")[1].at("state")[3][0].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("run takes JSON circuit documents") {
    TempDir dir;
    const auto grover = dir.file("grover.json", kGroverJson);
    const auto r = run("run " + grover + " --init 00");
    CHECK(r.exitCode == 0);
    CHECK(r.output == "11 1.000000\n");

    const auto counts = run("counts " + grover + " --shots 100 --seed 3");
    CHECK(counts.output == "11 100\n");

    const auto drawn = run("draw " + grover);
    CHECK(drawn.output.find("oracle") != std::string::npos);
    CHECK(drawn.output.find("diffuser") != std::string::npos);
}

TEST_CASE("run rejects bad input with exit 2") {
    TempDir dir;
    const auto bell = dir.file("bell.qasm", kBellQasm);
    CHECK(run("run " + bell + " --init 0").exitCode == 2);
    CHECK(run("run " + dir.file("broken.qasm", "qreg q[1];\nfrobnicate q[0];\n")).exitCode == 2);
    CHECK(run("run /nonexistent.qasm").exitCode == 2);
    CHECK(run("run " + dir.file("bad.weird", "x")).exitCode == 2);
    CHECK(run("frobnicate").exitCode == 2);
}

TEST_CASE("counts is deterministic per seed and sums to shots") {
    TempDir dir;
    const auto bell = dir.file("bell.qasm", kBellQasm);
    const auto a = run("counts " + bell + " --shots 1000 --seed 7");
    const auto b = run("counts " + bell + " --shots 1000 --seed 7");
    CHECK(a.exitCode == 0);
    CHECK(a.output == b.output);

    long long total = 0;
    std::size_t pos = 0;
    while (pos < a.output.size()) {
        const auto space = a.output.find(' ', pos);
        const auto nl = a.output.find('\n', space);
        total += std::stoll(a.output.substr(space + 1, nl - space - 1));
        pos = nl + 1;
    }
    CHECK(total == 1000);

    // no measurements -> exit 2
    const auto empty = dir.file("empty.qasm", "qreg q[1];\n");
    CHECK(run("counts " + empty + " --shots 10").exitCode == 2);
}

TEST_CASE("counts honors QSIM_SEED") {
    TempDir dir;
    const auto bell = dir.file("bell.qasm", kBellQasm);
    const auto viaEnv = run("counts " + bell + " --shots 100", "QSIM_SEED=5 ");
    const auto viaFlag = run("counts " + bell + " --shots 100 --seed 5");
    CHECK(viaEnv.output == viaFlag.output);
    const auto otherSeed = run("counts " + bell + " --shots 100 --seed 6");
    CHECK(viaEnv.output != otherSeed.output);
}

TEST_CASE("qasm export round-trips the listing and flags exit 3") {
    TempDir dir;
    const auto bell = dir.file("bell.qasm", kBellQasm);
    const auto r = run("qasm " + bell);
    CHECK(r.exitCode == 0);
    CHECK(r.output == kBellQasm);

    const auto measx = dir.file("measx.json", kMeasureXJson);
    CHECK(run("qasm " + measx).exitCode == 3);
}

TEST_CASE("draw and tex render to stdout") {
    TempDir dir;
    const auto empty = dir.file("empty.qasm", "qreg q[2];\n");
    const auto drawn = run("draw " + empty);
    CHECK(drawn.exitCode == 0);
    CHECK(drawn.output.find("q0: ") != std::string::npos);
    CHECK(drawn.output.find("┏") == std::string::npos);

    const auto bell = dir.file("bell.qasm", kBellQasm);
    const auto tex = run("tex " + bell);
    CHECK(tex.exitCode == 0);
    CHECK(tex.output.find("\\lstick{q_{0}} & \\gate{H} & \\ctrl{1} & \\meter & \\qw \\\\") !=
          std::string::npos);
    const auto standalone = run("tex " + bell + " --standalone");
    CHECK(standalone.output.find("\\documentclass") != std::string::npos);
}

TEST_CASE("byte-identical output for identical command lines") {
    TempDir dir;
    const auto bell = dir.file("bell.qasm", kBellQasm);
    for (const std::string& cmd :
         {"run " + bell, "draw " + bell, "tex " + bell, "qasm " + bell,
          "counts " + bell + " --shots 500 --seed 3"}) {
        CHECK(run(cmd).output == run(cmd).output);
    }
}

TEST_CASE("example programs") {
    CHECK(run("example grover").output == "11 1.000000\n");

    const auto qec = run("example qec --error 0");
    CHECK(qec.exitCode == 0);
    CHECK(qec.output.find("syndrome 11") != std::string::npos);
    CHECK(qec.output.find("restored-state check PASS") != std::string::npos);

    const auto none = run("example qec --error none");
    CHECK(none.output.find("syndrome 00") != std::string::npos);

    const auto tomo = run("example tomography --shots 1000 --seed 1");
    CHECK(tomo.exitCode == 0);
    CHECK(tomo.output.find("S1 = ") != std::string::npos);
    CHECK(tomo.output.find("trace distance = ") != std::string::npos);

    const auto teleport = run("example teleport");
    CHECK(teleport.exitCode == 0);
    CHECK(teleport.output.find("fidelity=1.000000") != std::string::npos);

    CHECK(run("example nonsense").exitCode == 2);
}

TEST_CASE("init-vec loads amplitude files") {
    TempDir dir;
    const auto measx = dir.file("measx.json", kMeasureXJson);
    const auto vec = dir.file("v.txt", "# |+i> state\n0.7071067811865476 0\n0 0.7071067811865476\n");
    const auto r = run("counts " + measx + " --init-vec " + vec + " --shots 1000 --seed 2");
    CHECK(r.exitCode == 0);
    // X measurement of |+i>: both outcomes appear, totals 1000
    CHECK(r.output.find("0 ") != std::string::npos);
    CHECK(r.output.find("1 ") != std::string::npos);

    const auto bad = dir.file("bad.txt", "0.5 0\n");
    CHECK(run("run " + measx + " --init-vec " + bad).exitCode == 2);
}
