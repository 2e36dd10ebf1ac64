#include <doctest.h>

#include "bcb/pascal.hpp"

using namespace bcb;

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// independent oracle: exact factorial quotient
Int binom_by_factorials(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

} // namespace

TEST_CASE("pascal_row small rows by hand") {
    PascalRow r4 = pascal_row(4);
    CHECK(r4.coeffs == std::vector<Int>{1, 4, 6, 4, 1});

    PascalRow r8 = pascal_row(8);
    Int sum = 0;
    for (const Int& c : r8.coeffs) sum += c;
    CHECK(sum == 256);
    CHECK(r8.at(4) == 70);
    CHECK(r8.at(0) == 1);
    CHECK(r8.at(8) == 1);
}

TEST_CASE("pascal_row against the factorial oracle") {
    PascalRow r = pascal_row(29);
    for (int k = 0; k <= 29; ++k) CHECK(r.at(k) == binom_by_factorials(29, k));
}

TEST_CASE("pascal_row invariants across a range") {
    for (int n : {0, 1, 2, 7, 12, 33, 61}) {
        PascalRow r = pascal_row(n);
        REQUIRE(static_cast<int>(r.coeffs.size()) == n + 1);
        Int sum = 0;
        for (int i = 0; i <= n; ++i) {
            CHECK(r.at(i) == r.at(n - i));
            sum += r.at(i);
        }
        CHECK(sum == pow2(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("pascal_row_u64 matches the exact row up to 62") {
    for (int n : {0, 1, 10, 34, 62}) {
        PascalRow exact = pascal_row(n);
        auto u = pascal_row_u64(n);
        REQUIRE(u.size() == exact.coeffs.size());
        for (int i = 0; i <= n; ++i) CHECK(Int(static_cast<unsigned long>(u[i])) == exact.at(i));
    }
    CHECK_THROWS_AS(pascal_row_u64(63), std::invalid_argument);
}
