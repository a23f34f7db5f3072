#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "chroma/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr combined
};

std::string binary_path() {
    const char* bin = std::getenv("CHROMA_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CHROMA_BIN must point at the chroma binary");
    return bin;
}

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = (env.empty() ? "" : env + " ") + binary_path() + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("chroma_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("embody writes dot and prints the summary") {
    auto out = temp_file("fig1.dot");
    RunResult r = run("embody --cluster 5,4,3,3 --kind type1 --complete --format dot --out " +
                      out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "order=15 size=17 chi=4\n");

    chroma::ColouredGraph parsed = chroma::coloured_graph_from_dot(slurp(out));
    CHECK(parsed.graph.order() == 15);
    CHECK(parsed.graph.size() == 17);
    CHECK(parsed.cluster.sizes() == std::vector<int>{5, 4, 3, 3});
    std::filesystem::remove(out);
}

TEST_CASE("embody emits a one-vertex json graph for the null cluster") {
    auto out = temp_file("null.json");
    RunResult r = run("embody --cluster 1 --kind null --format json --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "order=1 size=0 chi=1\n");
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["vertices"].size() == 1);
    CHECK(j["edges"].empty());
    std::filesystem::remove(out);
}

TEST_CASE("embody fails cleanly when the path-type construction cannot work") {
    RunResult r = run("embody --cluster 5,1 --kind path_type");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("path-type construction failed") != std::string::npos);
}

TEST_CASE("embody rejects completing non-tree kinds") {
    RunResult r = run("embody --cluster 2,1 --kind thorn --complete");
    CHECK(r.exit_code == 1);
}

TEST_CASE("indices of the completed type2 triangle") {
    RunResult r = run("indices --cluster 1,1,1 --kind type2 --complete");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["indices"]["m1"] == 14);
    CHECK(j["indices"]["m2"] == 11);
    CHECK(j["indices"]["m3"] == 4);
}

TEST_CASE("indices extremal search over the star") {
    RunResult r = run("indices --cluster 3,1 --kind type1 --extremal");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["extremal"]["m1"]["min"] == 7);
    CHECK(j["extremal"]["m1"]["max"] == 13);
    CHECK(j["extremal"]["permutations_examined"] == 2);
    CHECK(j["extremal"]["m1"]["argmax"] == std::vector<int>{2, 1});
}

TEST_CASE("indices reports the two-colour tree m2 identity") {
    RunResult r = run("indices --cluster 2,1 --kind type1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["indices"]["m2"] == 4);
}

TEST_CASE("factorial guard: env var applies, flags win") {
    RunResult blocked = run("indices --cluster 1,1,1,1,1 --kind multipartite --extremal",
                            "CHROMA_GUARD_LMAX=4");
    CHECK(blocked.exit_code == 1);
    CHECK(blocked.output.find("factorial search refused") != std::string::npos);

    RunResult allowed = run("indices --cluster 1,1,1,1,1 --kind multipartite --extremal --limit 5",
                            "CHROMA_GUARD_LMAX=4");
    CHECK(allowed.exit_code == 0);
}

TEST_CASE("verify: small p33 grid matches and wider grid finds the known mismatch") {
    RunResult small = run("verify --suites p33 --r-max 2 --n-max 1");
    CHECK(small.exit_code == 0);
    auto j = nlohmann::json::parse(small.output);
    CHECK(j["summary"]["records"] == 3);
    CHECK(j["summary"]["match"] == 3);

    RunResult wider = run("verify --suites p33 --r-max 3 --n-max 1");
    CHECK(wider.exit_code == 0);
    auto jw = nlohmann::json::parse(wider.output);
    CHECK(jw["summary"]["mismatch"].get<int>() >= 1);
}

TEST_CASE("verify is byte-identical across runs with the same config") {
    std::string args = "verify --l-max 3 --r-max 3 --n-max 2 --fib-l-max 8 "
                       "--random-clusters 3 --seed 7";
    RunResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("verify --strict only fails on structural breakage") {
    RunResult healthy = run("verify --suites structure --l-max 3 --r-max 2 --strict");
    CHECK(healthy.exit_code == 0);

    // formula mismatches alone never flip the exit code
    RunResult mismatches = run("verify --suites p33 --r-max 3 --n-max 1 --strict --out " +
                               temp_file("strict.json").string());
    CHECK(mismatches.exit_code == 0);
    std::filesystem::remove(temp_file("strict.json"));

    RunResult broken = run("verify --suites structure --l-max 3 --r-max 2 --strict "
                           "--inject-structural-fault --out " +
                           temp_file("fault.json").string());
    CHECK(broken.exit_code == 2);
    std::filesystem::remove(temp_file("fault.json"));
}

TEST_CASE("sweep produces the documented table") {
    RunResult r = run("sweep --sequence s1 --l-max 3 --kinds type1_complete");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string header, row1, row2, row3;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    std::getline(lines, row3);
    CHECK(header.rfind("sequence,l,kind,cluster,order,size,m1_min,", 0) == 0);
    CHECK(row2.rfind("s1,2,type1_complete,2|1,3,2,6,", 0) == 0);  // l=2 row, m1_min = 6
    CHECK(row3.rfind("s1,3,type1_complete,3|2|1,", 0) == 0);

    RunResult s2 = run("sweep --sequence s2 --l-max 4");
    CHECK(s2.exit_code == 0);
    CHECK(s2.output.find("s2,4,type1_complete,3|2|1|1,") != std::string::npos);
    CHECK(s2.output.find("s2,4,type2_complete,3|2|1|1,") != std::string::npos);
}

TEST_CASE("sweep rejects a zero row count") {
    RunResult r = run("sweep --sequence s1 --l-max 0");
    CHECK(r.exit_code == 1);
}

TEST_CASE("unknown kind is a usage error") {
    RunResult r = run("embody --cluster 2,1 --kind type9");
    CHECK(r.exit_code == 1);
}
