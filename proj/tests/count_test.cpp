#include <doctest.h>

#include <algorithm>
#include <set>

#include "bcb/count.hpp"
#include "bcb/errors.hpp"
#include "bcb/golden.hpp"

using namespace bcb;

TEST_CASE("count_bisections matches the published values") {
    CHECK(count_bisections(8).total == 6);
    CHECK(count_bisections(8).trivial == 2);
    CHECK(count_bisections(8).nontrivial == 4);
    CHECK(count_bisections(13).total == 144);
    CHECK(count_bisections(13).trivial == 128);
    CHECK(count_bisections(16).total == 2);
    CHECK(count_bisections(1).total == 2);
    CHECK(count_bisections(0).total == 0);
}

TEST_CASE("brute force and meet-in-the-middle agree for n <= 18") {
    for (int n = 0; n <= 18; ++n) {
        CountResult b = count_bisections(n, Strategy::BruteForce);
        CountResult m = count_bisections(n, Strategy::MeetInMiddle);
        CHECK(b.total == m.total);
    }
}

TEST_CASE("brute force cap is enforced") {
    CountConfig cfg;
    cfg.brute_cap = 10;
    CHECK_THROWS_AS(count_bisections(11, Strategy::BruteForce, cfg), resource_error);
}

TEST_CASE("memory budget refusal happens before any allocation") {
    CountConfig cfg;
    cfg.memory_budget = 1024;
    CHECK_THROWS_AS(count_bisections(40, Strategy::MeetInMiddle, cfg), resource_error);
}

TEST_CASE("trivial counts follow the parity law") {
    CHECK(trivial_count(5) == 8);
    CHECK(trivial_count(13) == 128);
    CHECK(trivial_count(8) == 2);
    CHECK(trivial_count(36) == 2);
}

TEST_CASE("enumeration emits every solution once, in decreasing order") {
    for (int n : {4, 8, 13, 14}) {
        auto sols = list_solutions(n, SolutionFilter::All);
        CHECK(Int(static_cast<unsigned long>(sols.size())) == count_bisections(n).total);
        for (std::size_t i = 1; i < sols.size(); ++i) CHECK(sols[i - 1].bits > sols[i].bits);
        std::set<std::string> uniq;
        for (const auto& v : sols) {
            CHECK(is_solution(v));
            uniq.insert(v.bits);
        }
        CHECK(uniq.size() == sols.size());
    }
}

TEST_CASE("nontrivial filter matches the published breakdown") {
    auto s8 = list_solutions(8, SolutionFilter::NontrivialOnly);
    CHECK(s8.size() == 4);
    CHECK(std::any_of(s8.begin(), s8.end(),
                      [](const SignVector& v) { return v.bits == "100110001"; }));
    CHECK(list_solutions(4, SolutionFilter::NontrivialOnly).empty());
    CHECK(list_solutions(14, SolutionFilter::NontrivialOnly).size() == 12);
}

TEST_CASE("solution set is closed under negation, so J_n is even") {
    for (int n : {3, 8, 12, 13}) {
        auto sols = list_solutions(n, SolutionFilter::All);
        std::set<std::string> present;
        for (const auto& v : sols) present.insert(v.bits);
        for (const auto& v : sols) CHECK(present.count(v.negated().bits) == 1);
        CHECK(sols.size() % 2 == 0);
    }
}

TEST_CASE("pair-complement and reverse-complement preserve solutionhood") {
    for (const auto& v : list_solutions(13, SolutionFilter::All)) {
        CHECK(is_solution(v.reverse_complemented()));
        for (int i = 0; 2 * i < 13; ++i) {
            if (v.bits[static_cast<std::size_t>(i)] ==
                v.bits[static_cast<std::size_t>(13 - i)])
                continue;
            SignVector w = v;
            w.bits[static_cast<std::size_t>(i)] ^= 1;
            w.bits[static_cast<std::size_t>(13 - i)] ^= 1;
            CHECK(is_solution(w));
        }
    }
}

TEST_CASE("prefix partition covers the space exactly") {
    auto shards = prefix_partition(8, 2);
    REQUIRE(shards.size() == 4);
    Int sum = 0;
    for (const auto& s : shards) sum += count_shard(s);
    CHECK(sum == 6);

    auto halves = prefix_partition(13, 1);
    REQUIRE(halves.size() == 2);
    CHECK(count_shard(halves[0]) == 72); // negation symmetry swaps the shards
    CHECK(count_shard(halves[1]) == 72);

    CHECK_THROWS_AS(prefix_partition(8, 0), std::invalid_argument);
    CHECK_THROWS_AS(prefix_partition(8, 10), std::invalid_argument);
}

TEST_CASE("shard merge is independent of prefix length and thread count") {
    for (int pl : {1, 3, 5}) {
        Int sum = 0;
        for (const auto& s : prefix_partition(13, pl)) sum += count_shard(s);
        CHECK(sum == 144);
    }
    for (int threads : {1, 2, 8}) {
        CountConfig cfg;
        cfg.threads = threads;
        CHECK(count_bisections_sharded(20, 3, cfg).total == 6);
    }
}

TEST_CASE("count_subset_sums on hand-checked instances") {
    std::vector<std::uint64_t> coeffs{3, 5, 7};
    CHECK(count_subset_sums(coeffs, 7) == 1);
    CHECK(count_subset_sums(coeffs, 8) == 1);  // 3+5
    CHECK(count_subset_sums(coeffs, 4) == 0);
    CHECK(count_subset_sums(coeffs, 0) == 1);  // empty subset
    CHECK(count_subset_sums({}, 0) == 1);
    CHECK(count_subset_sums({}, 1) == 0);
}
