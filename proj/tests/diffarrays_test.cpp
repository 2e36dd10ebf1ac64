#include <doctest.h>

#include <random>

#include "bcb/count.hpp"
#include "bcb/diffarrays.hpp"
#include "bcb/errors.hpp"
#include "bcb/golden.hpp"

using namespace bcb;

TEST_CASE("delta on the worked example and degenerate shapes") {
    DifferenceArray a = DifferenceArray::of({1, 1, 0, 0, 1, 1, 0, 1, 1});
    CHECK(delta(a) == DifferenceArray::of({0, -1, 0, 1, 0, -1, 1, 0}));
    CHECK(delta(DifferenceArray::of({5, 5, 5})) == DifferenceArray::of({0, 0}));
    CHECK(delta(DifferenceArray::of({0, 1})) == DifferenceArray::of({1}));
    CHECK_THROWS_AS(delta(DifferenceArray::of({7})), std::invalid_argument);
}

TEST_CASE("iterated differences reproduce the published chain") {
    const auto& chain = golden::worked_difference_chain();
    DifferenceArray a = DifferenceArray::of(chain[0]);
    for (std::size_t k = 1; k < chain.size(); ++k)
        CHECK(delta_k(a, static_cast<int>(k)) == DifferenceArray::of(chain[k]));
    CHECK(delta_k(a, 8) == DifferenceArray::of({0}));
    CHECK(delta_k(a, 7) == DifferenceArray::of({-7, -7}));
    CHECK(delta_k(DifferenceArray::of({3, 3, 3, 3}), 3) == DifferenceArray::of({0}));
}

TEST_CASE("iterated delta equals the direct binomial formula") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> len(2, 12);
    std::uniform_int_distribution<long> val(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> values(static_cast<std::size_t>(len(rng)));
        for (auto& v : values) v = val(rng);
        DifferenceArray a = DifferenceArray::of(values);
        std::uniform_int_distribution<int> kd(1, static_cast<int>(values.size()) - 1);
        int k = kd(rng);
        CHECK(delta_k(a, k) == delta_k_direct(a, k));
    }
}

TEST_CASE("solution_to_array on the worked n=8 solution") {
    SignVector v = SignVector::from_bits("100110001"); // delta = [1,-1,-1,1,1,-1,-1,-1,1]
    DifferenceArray a = solution_to_array(v);
    CHECK(a == DifferenceArray::of({1, 1, 0, 0, 1, 1, 0, 1, 1}));
    CHECK(delta_k(a, 8) == DifferenceArray::of({0}));

    SignVector alt = SignVector::from_bits("101010101");
    CHECK(solution_to_array(alt) == DifferenceArray::of({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(solution_to_array(alt.negated()) == DifferenceArray::of({0, 0, 0, 0, 0, 0, 0, 0, 0}));

    CHECK_THROWS_AS(solution_to_array(SignVector::from_bits("110110001")),
                    std::invalid_argument);
}

TEST_CASE("array_to_solution inverts the map and rejects non-images") {
    DifferenceArray a = DifferenceArray::of({1, 1, 0, 0, 1, 1, 0, 1, 1});
    CHECK(array_to_solution(a).bits == "100110001");
    CHECK(array_to_solution(DifferenceArray::of({1, 1, 1})).bits == "101");
    CHECK_THROWS_AS(array_to_solution(DifferenceArray::of({1, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(array_to_solution(DifferenceArray::of({1, 2, 1})), std::invalid_argument);
}

TEST_CASE("round trip over every solution up to n = 16") {
    for (int n = 1; n <= 16; ++n) {
        long images = 0;
        enumerate_solutions(n, SolutionFilter::All, [&](const SignVector& v) {
            if (array_to_solution(solution_to_array(v)).bits != v.bits)
                FAIL("round trip broke at n = " << n);
            ++images;
        });
        CHECK(Int(images) == count_bisections(n).total);
    }
}

TEST_CASE("zero-n-difference counting matches the bisection counts") {
    CHECK(count_zero_ndiff(8) == 6);
    CHECK(count_zero_ndiff(13) == 144);
    CHECK(count_zero_ndiff(2) == 2);
    CHECK_THROWS_AS(count_zero_ndiff(21), resource_error);
}
