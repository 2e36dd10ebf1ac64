#pragma once

#include <cstdint>
#include <string>

#include "bcb/bigint.hpp"
#include "bcb/pascal.hpp"

namespace bcb {

enum class Classification { TrivialAlternating, TrivialAntisymmetric, Nontrivial };

const char* to_string(Classification c);

// A candidate/actual bisection sign vector, in the bit-string convention of
// the solution tables: bits[i] == '1'  <=>  delta_i = +1, leftmost character
// is index 0.
struct SignVector {
    int n = 0;
    std::string bits; // length n+1 over {'0','1'}

    // n inferred from the string length; validates the charset.
    static SignVector from_bits(std::string bits);

    // Packed form, n <= 63: bit (n-i) of the mask holds bits[i], so that
    // integer comparison of masks equals lexicographic comparison of the
    // bit strings.
    static SignVector from_packed(int n, std::uint64_t mask);
    std::uint64_t packed() const;

    int delta(int i) const { return bits[static_cast<std::size_t>(i)] == '1' ? 1 : -1; }

    SignVector negated() const;
    SignVector reverse_complemented() const;

    bool alternating() const;
    // delta_{n-i} = -delta_i for all i (only meaningful for odd n; for even n
    // the center position makes it impossible).
    bool antisymmetric() const;
};

// Sum_i delta_i * C(n,i), exact.
Int signed_row_sum(const SignVector& v);
Int signed_row_sum(const SignVector& v, const PascalRow& row);

bool is_solution(const SignVector& v);
bool is_solution(const SignVector& v, const PascalRow& row);

// Requires is_solution(v); throws std::invalid_argument otherwise.
// Alternating vectors report the more specific TrivialAlternating label;
// for even n only the two alternating vectors are trivial.
Classification classify(const SignVector& v);
Classification classify(const SignVector& v, const PascalRow& row);

// Packed-mask helpers used by the enumeration/orbit engines (n <= 63).
namespace packed {

std::uint64_t full_mask(int n);
std::uint64_t reverse_complement(std::uint64_t mask, int n);
bool is_alternating(std::uint64_t mask, int n);
bool is_antisymmetric(std::uint64_t mask, int n);

} // namespace packed

} // namespace bcb
