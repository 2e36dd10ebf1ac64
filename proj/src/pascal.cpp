#include "bcb/pascal.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bcb {

PascalRow pascal_row(int n) {
    if (n < 0) throw std::invalid_argument("pascal_row: n must be >= 0");
    PascalRow row;
    row.n = n;
    row.coeffs.resize(static_cast<std::size_t>(n) + 1);
    // Multiplicative recurrence C(n,k+1) = C(n,k)*(n-k)/(k+1); every division
    // is exact.
    Int c = 1;
    for (int k = 0; k <= n; ++k) {
        row.coeffs[static_cast<std::size_t>(k)] = c;
        if (k < n) {
            c *= n - k;
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k) + 1);
        }
    }
    return row;
}

std::vector<std::uint64_t> pascal_row_u64(int n) {
    if (n < 0 || n > 62)
        throw std::invalid_argument("pascal_row_u64: need 0 <= n <= 62, got " + std::to_string(n));
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1);
    // Same recurrence; all intermediates stay below 2^62 because the row sum
    // is 2^n.
    std::uint64_t c = 1;
    for (int k = 0; k <= n; ++k) {
        row[static_cast<std::size_t>(k)] = c;
        if (k < n) {
            // multiply before dividing would overflow near the middle of big
            // rows; split off the gcd first
            std::uint64_t num = static_cast<std::uint64_t>(n - k);
            std::uint64_t den = static_cast<std::uint64_t>(k) + 1;
            std::uint64_t g = std::gcd(c, den);
            std::uint64_t cc = c / g;
            std::uint64_t dd = den / g;
            cc *= num / dd; // num is divisible by dd once c's factor is removed
            c = cc;
        }
    }
    return row;
}

std::uint64_t bisection_target_u64(int n) {
    if (n < 1 || n > 62)
        throw std::invalid_argument("bisection_target_u64: need 1 <= n <= 62");
    return 1ull << (n - 1);
}

} // namespace bcb
