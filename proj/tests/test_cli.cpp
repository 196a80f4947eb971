#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

std::string cli_path() {
    const char* p = std::getenv("LATFORM_CLI");
    REQUIRE_MESSAGE(p != nullptr, "LATFORM_CLI must point at the executable");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("snk table") {
    auto r = run("snk --k 1 --n-max 2");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);  // header
    std::getline(lines, line);
    CHECK(line == "0\t0\t1\t1");
    std::getline(lines, line);
    CHECK(line == "1\t1\t1\t1");
    std::getline(lines, line);
    CHECK(line == "2\t3\t4\t2");
}

TEST_CASE("snk json uses decimal strings") {
    auto r = run("snk --k 2 --n-max 2 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["k"] == 2);
    CHECK(j["rows"][2]["S"] == "4");
    CHECK(j["rows"][2]["index"] == "4");
}

TEST_CASE("det-m1 on a matching lattice exits 0") {
    auto r = run("det-m1 --lattice A1 --n-max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("A1") != std::string::npos);
}

TEST_CASE("det-m1 --mode 2S fails on A1") {
    auto r = run("det-m1 --lattice A1 --n-max 2 --mode 2S");
    CHECK(r.exit_code == 1);
}

TEST_CASE("invalid lattice input exits 2") {
    auto bad = write_temp("latform_bad_lattice.json", R"({"name":"bad","gram":[[0]]})");
    CHECK(run("det-m1 --lattice " + bad + " --n-max 1").exit_code == 2);
    auto garbled = write_temp("latform_garbled.json", "{not json");
    CHECK(run("det-m1 --lattice " + garbled + " --n-max 1").exit_code == 2);
    CHECK(run("det-m1 --lattice /nonexistent.json --n-max 1").exit_code == 2);
    CHECK(run("det-m1 --n-max 1").exit_code == 2);  // missing required option
}

TEST_CASE("det-voa rejects odd lattices with exit 2") {
    auto r = run("det-voa --lattice Z1 --n-max 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("even lattice required") != std::string::npos);
}

TEST_CASE("det-voa oracle values via json") {
    auto r = run("det-voa --lattice A1A1 --n-max 1 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["oracle_det"] == "1");
    CHECK(j[1]["oracle_det"] == "4");
    CHECK(j[1]["matches"] == "S");
}

TEST_CASE("lattice from a JSON file") {
    auto path = write_temp("latform_g4.json", R"({"name":"G4","gram":[[4]]})");
    auto r = run("det-voa --lattice " + path + " --n-max 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("G4,2,64,64,4096") != std::string::npos);
}

TEST_CASE("formats report the same numbers") {
    auto csv = run("det-m1 --lattice A1 --n-max 2 --format csv");
    auto json = run("det-m1 --lattice A1 --n-max 2 --format json");
    CHECK(csv.exit_code == 0);
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.output);
    REQUIRE(j.size() == 3);
    CHECK(j[2]["oracle_det"] == "8");
    CHECK(csv.output.find("A1,2,8,8,64") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
    auto direct = run("det-m1 --lattice A2 --n-max 1 --format csv");
    std::string path = "/tmp/latform_out.csv";
    auto r = run("det-m1 --lattice A2 --n-max 1 --format csv --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.output);
}

TEST_CASE("verify-all on a small grid") {
    auto r = run("verify-all --k-max 1 --n-max 2 --lattices A1 --jobs 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ALL CHECKS PASSED") != std::string::npos);
    CHECK(r.output.find("adjudicated exponent mode: S") != std::string::npos);
}
