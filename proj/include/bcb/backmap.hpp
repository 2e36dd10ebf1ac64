#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcb/bigint.hpp"
#include "bcb/count.hpp"
#include "bcb/sign_vector.hpp"

namespace bcb {

// eta in {-1,0,+1}^{m+1}; an "identity" when Sum eta_i C(m,i) = 0.
struct TernaryVector {
    int m = 0;
    std::vector<int> entries; // m+1 entries

    bool zero() const;
    std::string str() const;  // compact "+-0" form
    static TernaryVector parse(int m, const std::string& s);
    bool operator==(const TernaryVector&) const = default;
};

Int ternary_weighted_sum(const TernaryVector& t);
bool is_identity(const TernaryVector& t);

// The backward map: eta_j = (delta_j + delta_{j+1})/2, j = 0..n-1. Requires
// is_solution(v) and n >= 1; the result is an identity of order n-1.
TernaryVector theta(const SignVector& v);

// Between any two consecutive opposite-sign nonzero entries the number of
// zeros must be odd; vectors without a sign change satisfy it vacuously.
// Requires the identity invariant.
bool has_ivp(const TernaryVector& t);

// Full range condition for theta: between consecutive nonzero entries the
// zero-run length is odd exactly when the signs differ (the forced delta
// alternation fixes the parity on same-sign runs too, which has_ivp alone
// does not see; "+0+0-0-" is an IVP identity with no preimage).
bool liftable(const TernaryVector& t);

// Inverse of theta on IVP identities: returns the solution delta of order
// m+1 with theta(delta) = t and delta_0 = first_sign. Throws on IVP failure
// or when first_sign contradicts the first nonzero entry.
SignVector lift(const TernaryVector& t, int first_sign);

// A solution viewed as the ternary identity vector it is (entries +-1).
TernaryVector as_ternary(const SignVector& v);

struct CorollaryReport {
    std::uint64_t p = 0;
    std::uint64_t nontrivial_examined = 0;
    std::uint64_t ivp_violations = 0;     // solutions where both eta candidates fail IVP
    std::uint64_t nonzero_ivp_found = 0;  // expected 0
};

// For every nontrivial solution of order p-2, checks the two ternary
// identity vectors obtained from delta and -delta: neither may be a nonzero
// IVP vector (otherwise it would lift to a nontrivial member of the
// trivial-only J_{p-1}).
CorollaryReport prime_corollary_check(std::uint64_t p, const CountConfig& cfg = {});

} // namespace bcb
