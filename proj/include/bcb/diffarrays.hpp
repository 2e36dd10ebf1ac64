#pragma once

#include <vector>

#include "bcb/bigint.hpp"
#include "bcb/count.hpp"
#include "bcb/sign_vector.hpp"

namespace bcb {

// A finite integer list under the forward difference operator.
struct DifferenceArray {
    std::vector<Int> values;

    static DifferenceArray of(std::vector<long> values);
    bool operator==(const DifferenceArray&) const = default;
};

// [a_1-a_0, a_2-a_1, ...]; length decreases by one. Requires length >= 2.
DifferenceArray delta(const DifferenceArray& a);

// k-fold delta. Requires k <= length-1.
DifferenceArray delta_k(const DifferenceArray& a, int k);

// Same values via the direct binomial formula
// Delta^k(a)[i] = Sum_t (-1)^t C(k,t) a_{i+k-t}; kept as an independent route
// for the property tests.
DifferenceArray delta_k_direct(const DifferenceArray& a, int k);

// The {0,1} array ((-1)^i delta_i + 1)/2 of length n+1; its n-th difference
// is [0]. Requires is_solution(v).
DifferenceArray solution_to_array(const SignVector& v);

// Inverse map. Requires 0/1 values and Delta^n(a) = [0]; throws
// std::invalid_argument otherwise.
SignVector array_to_solution(const DifferenceArray& a);

// Exhaustive count of {0,1} arrays of length n+1 with zero n-th difference
// (iterated differences, no reuse of the bisection machinery). Capped at
// cap_n (2^{n+1} candidates).
Int count_zero_ndiff(int n, int cap_n = 20);

} // namespace bcb
