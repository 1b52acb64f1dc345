// End-to-end tests that spawn the installed CLI binary and check stdout and
// exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(DLMKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) {
        if (c == '\n') ++n;
    }
    return n;
}

} // namespace

TEST_CASE("spectrum subcommand") {
    SUBCASE("K_{2,4} by graph6") {
        // E]r? is K_{2,4} in the family emitter's labeling.
        const auto r = run_cli("spectrum --g6 'E]r?' --matrix dl");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "10×3, 8, 6, 0\n");
    }
    SUBCASE("family input") {
        const auto r = run_cli("spectrum --family k2-join-empty --n 6 --matrix dl");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "10×3, 6×2, 0\n");
    }
    SUBCASE("irrational values carry the approx marker") {
        const auto r = run_cli("spectrum --family cycle --n 5 --matrix dl");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("≈") != std::string::npos);
        CHECK(r.out.find("×2") != std::string::npos);
    }
    SUBCASE("disconnected input exits 2") {
        // Two isolated vertices: 'A?'.
        const auto r = run_cli("spectrum --g6 'A?' --matrix dl");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("parse errors exit 1") {
        const auto r = run_cli("spectrum --g6 '!!' --matrix dl");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("laplacian matrix option") {
        const auto r = run_cli("spectrum --g6 'Bw' --matrix l");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "3×2, 0\n");
    }
    SUBCASE("json format carries exact data") {
        const auto r = run_cli("spectrum --family cycle --n 5 --matrix dl --format json");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"interval\"") != std::string::npos);
        CHECK(r.out.find("\"char_poly\"") != std::string::npos);
    }
    SUBCASE("usage errors exit 2") {
        CHECK(run_cli("spectrum").exit_code == 2);
        CHECK(run_cli("spectrum --g6 Bw --matrix dq").exit_code == 2);
    }
}

TEST_CASE("enumerate subcommand") {
    const auto r = run_cli("enumerate --n 5");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 21);
    CHECK(run_cli("enumerate --n 1").exit_code == 2);
    CHECK(run_cli("enumerate --n 10").exit_code == 2);
}

TEST_CASE("family subcommand") {
    SUBCASE("classified members at n=7") {
        const auto r = run_cli("family --name classified --n 7");
        CHECK(r.exit_code == 0);
        CHECK(count_lines(r.out) == 4);
    }
    SUBCASE("small-n members") {
        const auto r = run_cli("family --name small-n --n 4");
        CHECK(r.exit_code == 0);
        CHECK(count_lines(r.out) == 3);
    }
    SUBCASE("single family") {
        const auto r = run_cli("family --name j-graph --a 2 --b 1");
        CHECK(r.exit_code == 0);
        CHECK(count_lines(r.out) == 1);
    }
    SUBCASE("parameter errors exit 2") {
        CHECK(run_cli("family --name balanced-tripartite --n 7").exit_code == 2);
        CHECK(run_cli("family --name no-such --n 5").exit_code == 2);
    }
}

TEST_CASE("verify subcommand") {
    SUBCASE("remark45 passes") {
        const auto r = run_cli("verify remark45");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"kind\": \"remark45\"") != std::string::npos);
        CHECK(r.out.find("\"verdict\": \"match\"") != std::string::npos);
    }
    SUBCASE("thm33 at n=6 passes with class size 5") {
        const auto r = run_cli("verify thm33 --n 6");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"class_size\": 5") != std::string::npos);
    }
    SUBCASE("properties need a seed") {
        CHECK(run_cli("verify properties --n 4").exit_code == 2);
        const auto r = run_cli("verify properties --n 4 --seed 9 --samples 20 --format text");
        CHECK(r.exit_code == 0);
    }
    SUBCASE("formulas") {
        const auto r = run_cli("verify formulas --max-n 8 --format text");
        CHECK(r.exit_code == 0);
    }
    SUBCASE("cospectral alias") {
        const auto r = run_cli("cospectral --n 5 --format text");
        CHECK(r.exit_code == 0);
    }
    SUBCASE("usage errors exit 2") {
        CHECK(run_cli("verify thm33").exit_code == 2);
        CHECK(run_cli("verify bogus --n 5").exit_code == 2);
    }
}

TEST_CASE("json reports are byte-stable across runs and worker counts") {
    const auto a = run_cli("verify thm33 --n 5 --workers 1");
    const auto b = run_cli("verify thm33 --n 5 --workers 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("corpus input with the connected-only filter") {
    const std::string dir = "/tmp/dlmkit-cli-test";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    const std::string corpus = dir + "/n4.g6";
    {
        const auto all = run_cli("enumerate --n 4 --out " + corpus);
        REQUIRE(all.exit_code == 0);
        // Append a disconnected 4-vertex graph (two disjoint edges).
        FILE* f = fopen(corpus.c_str(), "a");
        REQUIRE(f != nullptr);
        fputs("C`\n", f);
        fclose(f);
    }
    // Without the filter the sweep refuses the corpus.
    CHECK(run_cli("verify thm33 --n 4 --file " + corpus).exit_code == 2);
    const auto filtered =
        run_cli("verify thm33 --n 4 --file " + corpus + " --connected-only");
    CHECK(filtered.exit_code == 0);
    CHECK(filtered.out.find("\"count\": 6") != std::string::npos);
}

TEST_CASE("DLMKIT_CACHE_DIR caches sweep spectra") {
    const std::string dir = "/tmp/dlmkit-cli-cache";
    REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
    const std::string env = "DLMKIT_CACHE_DIR=" + dir + " ";
    const auto first = run_cli("verify thm33 --n 5", env);
    CHECK(first.exit_code == 0);
    const auto cached = run_cli("verify thm33 --n 5", env);
    CHECK(cached.exit_code == 0);
    CHECK(first.out == cached.out);
    CHECK(std::system(("ls " + dir + "/sweep-n5-*.tsv >/dev/null 2>&1").c_str()) == 0);
}
