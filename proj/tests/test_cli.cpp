#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "edsm/eds.hpp"

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + EDSM_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(bool(out));
    out << text;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> ls;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) ls.push_back(line);
    return ls;
}

}  // namespace

TEST_CASE("match prints one end position per line") {
    write_file("cli_a.eds", "{AB}{C,X}{BA}\n");
    CliResult r = run_cli("match --eds cli_a.eds --pattern ABCB --k 1");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    r = run_cli("match --eds cli_a.eds --pattern ABCB --k 1 --algo naive");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    r = run_cli("match --eds cli_a.eds --pattern ZZZZ --k 0");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("match accepts a pattern file and strips its trailing newline") {
    write_file("cli_a.eds", "{AB}{C,X}{BA}\n");
    write_file("cli_a.pat", "ABCB\n");
    CliResult r = run_cli("match --eds cli_a.eds --pattern-file cli_a.pat --k 1");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("match json carries instance size and timing fields") {
    write_file("cli_a.eds", "{AB}{C,X}{BA}\n");
    CliResult r = run_cli("match --eds cli_a.eds --pattern ABCB --k 1 --json");
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["N"] == 6);
    CHECK(j["c"] == 4);
    CHECK(j["k"] == 1);
    CHECK(j["algo"] == "fast");
    CHECK(j["positions"] == nlohmann::json::array({2}));
    CHECK(j["wall_ms"].get<double>() >= 0.0);
}

TEST_CASE("match usage and format errors exit with 2") {
    write_file("cli_a.eds", "{AB}{C,X}{BA}\n");
    write_file("cli_bad.eds", "{AB}{C,X\n");
    CHECK(run_cli("match --eds cli_missing.eds --pattern A --k 0").code == 2);
    CHECK(run_cli("match --eds cli_bad.eds --pattern A --k 0").code == 2);
    CHECK(run_cli("match --eds cli_a.eds --k 0").code == 2);
    CHECK(run_cli("match --eds cli_a.eds --pattern A --k 9").code == 2);
    CHECK(run_cli("match --eds cli_a.eds --pattern A --pattern-file cli_a.eds --k 0").code == 2);
    write_file("cli_a.pat", "");
    CHECK(run_cli("match --eds cli_a.eds --pattern-file cli_a.pat --k 0").code == 2);
}

TEST_CASE("naive and fast agree byte for byte on a generated text") {
    CliResult g = run_cli("gen --seed 42 --n 10 --max-alts 3 --max-len 5 --out cli_g.eds");
    CHECK(g.code == 0);
    CliResult fast = run_cli("match --eds cli_g.eds --pattern ACGTACGTACGT --k 2 --algo fast");
    CliResult naive = run_cli("match --eds cli_g.eds --pattern ACGTACGTACGT --k 2 --algo naive");
    CHECK(fast.code == 0);
    CHECK(naive.code == 0);
    CHECK(fast.out == naive.out);
}

TEST_CASE("gen is deterministic per seed and emits parseable text") {
    CliResult a = run_cli("gen --seed 7 --n 12 --max-alts 3 --max-len 4 --eps-prob 0.2");
    CliResult b = run_cli("gen --seed 7 --n 12 --max-alts 3 --max-len 4 --eps-prob 0.2");
    CliResult c = run_cli("gen --seed 8 --n 12 --max-alts 3 --max-len 4 --eps-prob 0.2");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    REQUIRE(!a.out.empty());
    CHECK(a.out.back() == '\n');
    const edsm::EDString eds = edsm::parse_eds(a.out.substr(0, a.out.size() - 1));
    CHECK(eds.length() == 12);
}

TEST_CASE("selftest reports a clean run") {
    CliResult r = run_cli("selftest --cases 25 --seed 3 --k-max 2");
    CHECK(r.code == 0);
    CHECK(r.out == "selftest: 25 cases ok\n");
}

TEST_CASE("bench emits a csv block and a fitted slope") {
    CliResult r = run_cli("bench --m-list 8,16 --n 4 --k 1 --repeats 2");
    CHECK(r.code == 0);
    const std::vector<std::string> ls = lines_of(r.out);
    REQUIRE(ls.size() == 10);
    CHECK(ls[0] == "m,n,k,algo,wall_ms");
    int naive_rows = 0, fast_rows = 0;
    for (size_t i = 1; i + 1 < ls.size(); ++i) {
        std::stringstream ss(ls[i]);
        std::string m, n, k, algo, wall;
        REQUIRE(std::getline(ss, m, ','));
        REQUIRE(std::getline(ss, n, ','));
        REQUIRE(std::getline(ss, k, ','));
        REQUIRE(std::getline(ss, algo, ','));
        REQUIRE(std::getline(ss, wall, ','));
        CHECK((m == "8" || m == "16"));
        CHECK(n == "4");
        CHECK(k == "1");
        CHECK(std::stod(wall) >= 0.0);
        if (algo == "naive") ++naive_rows;
        if (algo == "fast") ++fast_rows;
    }
    CHECK(naive_rows == 4);
    CHECK(fast_rows == 4);
    CHECK(ls.back().rfind("fast ape stage log-log slope: ", 0) == 0);
}

TEST_CASE("bench writes the csv to a file when asked") {
    CliResult r = run_cli("bench --m-list 8 --n 2 --k 1 --repeats 1 --csv cli_b.csv");
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 1);
    std::ifstream in("cli_b.csv", std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::vector<std::string> ls = lines_of(ss.str());
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "m,n,k,algo,wall_ms");
}

TEST_CASE("bad bench and gen parameters exit with 2") {
    CHECK(run_cli("bench --m-list 8,oops --n 2").code == 2);
    CHECK(run_cli("bench --m-list 2 --n 2").code == 2);
    CHECK(run_cli("gen --n 0").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("match --help").code == 0);
}
