#pragma once

#include <cstdint>
#include <vector>

#include "bcb/bigint.hpp"

namespace bcb {

// One row of Pascal's triangle, exact.
// Invariants: coeffs[i] = C(n,i), coeffs[i] = coeffs[n-i], sum = 2^n.
struct PascalRow {
    int n = 0;
    std::vector<Int> coeffs; // n+1 entries

    const Int& at(int i) const { return coeffs[static_cast<std::size_t>(i)]; }
};

PascalRow pascal_row(int n);

// Row as 64-bit values. Exact for n <= 62 (every entry and every subset sum
// fits, since the full row sums to 2^n). Throws std::invalid_argument beyond.
std::vector<std::uint64_t> pascal_row_u64(int n);

// Bisection target 2^{n-1} for n >= 1.
std::uint64_t bisection_target_u64(int n);

} // namespace bcb
