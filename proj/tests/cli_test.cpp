#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BCB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path temp_cache() {
    return fs::temp_directory_path() /
           ("bcb_cli_test_" + std::to_string(std::random_device{}()) + ".json");
}

} // namespace

TEST_CASE("count: published values over both strategies") {
    auto r = run("count --n 8 --no-cache --json --threads 1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["total"] == "6");
    CHECK(j["strategy"] == "MeetInMiddle");

    auto rb = run("count --n 8 --strategy brute --no-cache --json --threads 1");
    CHECK(json::parse(rb.out)["strategy"] == "BruteForce");
    CHECK(json::parse(rb.out)["total"] == "6");

    auto r50 = run("count --n 50 --no-cache --json --threads 1");
    CHECK(r50.exit_code == 0);
    CHECK(json::parse(r50.out)["total"] == "6");
}

TEST_CASE("count: identical totals for different thread counts") {
    std::string a = run("count --n 24 --no-cache --json --threads 1").out;
    std::string b = run("count --n 24 --no-cache --json --threads 4").out;
    CHECK(json::parse(a)["total"] == json::parse(b)["total"]);
}

TEST_CASE("count: single-shard manifest output") {
    auto r = run("count --n 13 --prefix-len 1 --shard 0 --no-cache --threads 1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["n"] == 13);
    CHECK(j["prefix_len"] == 1);
    CHECK(j["prefix_bits"] == "0");
    CHECK(j["total"] == "72");
}

TEST_CASE("table: --diff against the published table") {
    auto r = run("table --max-n 14 --diff --no-cache --threads 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 mismatches") != std::string::npos);
}

TEST_CASE("table: usage error on a bad range") {
    auto r = run("table --max-n 0 --no-cache");
    CHECK(r.exit_code == 2);
}

TEST_CASE("appendix: published orbits and the empty case") {
    auto r = run("appendix --n 8 --threads 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("4\t100110001") != std::string::npos);
    auto empty = run("appendix --n 4 --threads 1");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("solutions: decreasing order, classification records") {
    auto r = run("solutions --n 8 --json --threads 1");
    CHECK(r.exit_code == 0);
    std::vector<std::string> bits;
    std::size_t pos = 0;
    while (pos < r.out.size()) {
        std::size_t eol = r.out.find('\n', pos);
        json j = json::parse(r.out.substr(pos, eol - pos));
        CHECK(j["n"] == 8);
        bits.push_back(j["bits"]);
        pos = eol + 1;
    }
    REQUIRE(bits.size() == 6);
    for (std::size_t i = 1; i < bits.size(); ++i) CHECK(bits[i - 1] > bits[i]);
    CHECK(r.out.find("\"class\":\"TrivialAlternating\"") != std::string::npos);
    CHECK(r.out.find("\"class\":\"Nontrivial\"") != std::string::npos);

    auto nt = run("solutions --n 8 --nontrivial-only --threads 1");
    CHECK(nt.out.find("100110001\n") != std::string::npos);
}

TEST_CASE("bijection and backmap commands") {
    auto r = run("bijection --n 8 --no-cache --threads 1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["equal"] == true);
    CHECK(j["j_n"] == "6");

    auto bm = run("backmap --n 8 --threads 1");
    CHECK(bm.exit_code == 0);
    CHECK(bm.out.find("\"ivp\":true") != std::string::npos);
}

TEST_CASE("families: n-list and witness records") {
    auto r = run("families --limit 110");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "13\n14\n33\n34\n61\n62\n97\n98\n103\n");

    auto w = run("families --max-n 20");
    CHECK(w.exit_code == 0);
    CHECK(w.out.find("\"family\":\"SectionOneShift\"") != std::string::npos);
    CHECK(w.out.find("\"bisection_bits\":\"11110011001000\"") != std::string::npos);
}

TEST_CASE("verify: suites and the unknown-suite error") {
    auto r = run("verify bijection --threads 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    auto bad = run("verify nonsense");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cache: written by default path flag and reused") {
    fs::path cache = temp_cache();
    auto first = run("count --n 12 --json --threads 1 --cache " + cache.string());
    CHECK(first.exit_code == 0);
    REQUIRE(fs::exists(cache));
    auto second = run("count --n 12 --json --threads 1 --cache " + cache.string());
    CHECK(json::parse(second.out)["total"] == json::parse(first.out)["total"]);
    fs::remove(cache);
}

TEST_CASE("resource refusal exits with code 3") {
    auto r = run("bijection --n 25 --no-cache --threads 1");
    CHECK(r.exit_code == 3);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("count").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("count --n 8 --strategy quantum").exit_code == 2);
}
