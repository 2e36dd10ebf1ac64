#include "bcb/sign_vector.hpp"

#include <stdexcept>
#include <utility>

namespace bcb {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::TrivialAlternating: return "TrivialAlternating";
        case Classification::TrivialAntisymmetric: return "TrivialAntisymmetric";
        case Classification::Nontrivial: return "Nontrivial";
    }
    return "?";
}

SignVector SignVector::from_bits(std::string bits) {
    if (bits.empty()) throw std::invalid_argument("SignVector: empty bit string");
    for (char c : bits)
        if (c != '0' && c != '1')
            throw std::invalid_argument("SignVector: bit string must be over {0,1}");
    SignVector v;
    v.n = static_cast<int>(bits.size()) - 1;
    v.bits = std::move(bits);
    return v;
}

SignVector SignVector::from_packed(int n, std::uint64_t mask) {
    if (n < 0 || n > 63) throw std::invalid_argument("SignVector::from_packed: need 0 <= n <= 63");
    SignVector v;
    v.n = n;
    v.bits.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        v.bits[static_cast<std::size_t>(i)] = ((mask >> (n - i)) & 1u) ? '1' : '0';
    return v;
}

std::uint64_t SignVector::packed() const {
    if (n > 63) throw std::invalid_argument("SignVector::packed: n > 63");
    std::uint64_t mask = 0;
    for (int i = 0; i <= n; ++i)
        if (bits[static_cast<std::size_t>(i)] == '1') mask |= 1ull << (n - i);
    return mask;
}

SignVector SignVector::negated() const {
    SignVector v = *this;
    for (char& c : v.bits) c = (c == '1') ? '0' : '1';
    return v;
}

SignVector SignVector::reverse_complemented() const {
    SignVector v = *this;
    for (int i = 0; i <= n; ++i) {
        char c = bits[static_cast<std::size_t>(n - i)];
        v.bits[static_cast<std::size_t>(i)] = (c == '1') ? '0' : '1';
    }
    return v;
}

bool SignVector::alternating() const {
    for (int i = 1; i <= n; ++i)
        if (bits[static_cast<std::size_t>(i)] == bits[static_cast<std::size_t>(i - 1)]) return false;
    return true;
}

bool SignVector::antisymmetric() const {
    for (int i = 0; i <= n; ++i)
        if (bits[static_cast<std::size_t>(i)] == bits[static_cast<std::size_t>(n - i)]) return false;
    return true;
}

Int signed_row_sum(const SignVector& v, const PascalRow& row) {
    if (row.n != v.n) throw std::invalid_argument("signed_row_sum: row order mismatch");
    if (static_cast<int>(v.bits.size()) != v.n + 1)
        throw std::invalid_argument("signed_row_sum: malformed sign vector (length mismatch)");
    Int sum = 0;
    for (int i = 0; i <= v.n; ++i) {
        if (v.bits[static_cast<std::size_t>(i)] == '1')
            sum += row.at(i);
        else
            sum -= row.at(i);
    }
    return sum;
}

Int signed_row_sum(const SignVector& v) { return signed_row_sum(v, pascal_row(v.n)); }

bool is_solution(const SignVector& v, const PascalRow& row) {
    return signed_row_sum(v, row) == 0;
}

bool is_solution(const SignVector& v) { return signed_row_sum(v) == 0; }

Classification classify(const SignVector& v, const PascalRow& row) {
    if (!is_solution(v, row))
        throw std::invalid_argument("classify: input is not a solution");
    if (v.alternating()) return Classification::TrivialAlternating;
    if (v.n % 2 == 1 && v.antisymmetric()) return Classification::TrivialAntisymmetric;
    return Classification::Nontrivial;
}

Classification classify(const SignVector& v) { return classify(v, pascal_row(v.n)); }

namespace packed {

std::uint64_t full_mask(int n) {
    return (n + 1 == 64) ? ~0ull : ((1ull << (n + 1)) - 1);
}

std::uint64_t reverse_complement(std::uint64_t mask, int n) {
    std::uint64_t rev = 0;
    for (int p = 0; p <= n; ++p)
        if ((mask >> p) & 1u) rev |= 1ull << (n - p);
    return ~rev & full_mask(n);
}

bool is_alternating(std::uint64_t mask, int n) {
    // adjacent string positions are adjacent mask bits
    std::uint64_t pairs = (mask ^ (mask >> 1)) | (1ull << n);
    return (pairs & full_mask(n)) == full_mask(n);
}

bool is_antisymmetric(std::uint64_t mask, int n) {
    if (n % 2 == 0) return false;
    std::uint64_t rev = 0;
    for (int p = 0; p <= n; ++p)
        if ((mask >> p) & 1u) rev |= 1ull << (n - p);
    return rev == (~mask & full_mask(n));
}

} // namespace packed

} // namespace bcb
