#include "bcb/diffarrays.hpp"

#include <stdexcept>
#include <string>

#include "bcb/errors.hpp"

namespace bcb {

DifferenceArray DifferenceArray::of(std::vector<long> values) {
    DifferenceArray a;
    a.values.reserve(values.size());
    for (long v : values) a.values.emplace_back(v);
    return a;
}

DifferenceArray delta(const DifferenceArray& a) {
    if (a.values.size() < 2)
        throw std::invalid_argument("delta: need at least two elements");
    DifferenceArray d;
    d.values.reserve(a.values.size() - 1);
    for (std::size_t i = 1; i < a.values.size(); ++i)
        d.values.push_back(a.values[i] - a.values[i - 1]);
    return d;
}

DifferenceArray delta_k(const DifferenceArray& a, int k) {
    if (k < 1 || static_cast<std::size_t>(k) >= a.values.size())
        throw std::invalid_argument("delta_k: need 1 <= k <= length-1");
    DifferenceArray d = a;
    for (int i = 0; i < k; ++i) d = delta(d);
    return d;
}

DifferenceArray delta_k_direct(const DifferenceArray& a, int k) {
    if (k < 1 || static_cast<std::size_t>(k) >= a.values.size())
        throw std::invalid_argument("delta_k_direct: need 1 <= k <= length-1");
    std::size_t out_len = a.values.size() - static_cast<std::size_t>(k);
    DifferenceArray d;
    d.values.assign(out_len, 0);
    Int coeff;
    for (std::size_t i = 0; i < out_len; ++i) {
        Int acc = 0;
        for (int t = 0; t <= k; ++t) {
            coeff = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(t));
            if (t % 2 == 1) coeff = -coeff;
            acc += coeff * a.values[i + static_cast<std::size_t>(k - t)];
        }
        d.values[i] = acc;
    }
    return d;
}

DifferenceArray solution_to_array(const SignVector& v) {
    if (!is_solution(v))
        throw std::invalid_argument("solution_to_array: input is not a solution");
    DifferenceArray a;
    a.values.reserve(static_cast<std::size_t>(v.n) + 1);
    for (int i = 0; i <= v.n; ++i) {
        int sign = (i % 2 == 0) ? v.delta(i) : -v.delta(i);
        a.values.emplace_back((sign + 1) / 2);
    }
    return a;
}

SignVector array_to_solution(const DifferenceArray& a) {
    if (a.values.empty()) throw std::invalid_argument("array_to_solution: empty array");
    for (const Int& v : a.values)
        if (v != 0 && v != 1)
            throw std::invalid_argument("array_to_solution: values must be 0 or 1");
    int n = static_cast<int>(a.values.size()) - 1;
    if (n >= 1) {
        DifferenceArray d = delta_k(a, n);
        if (d.values.size() != 1 || d.values[0] != 0)
            throw std::invalid_argument("array_to_solution: nonzero " + std::to_string(n) +
                                        "-th difference, not a solution image");
    }
    SignVector v;
    v.n = n;
    v.bits.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        bool one = a.values[static_cast<std::size_t>(i)] == 1;
        // delta_i = (-1)^i (2 a_i - 1)
        bool plus = (i % 2 == 0) ? one : !one;
        v.bits[static_cast<std::size_t>(i)] = plus ? '1' : '0';
    }
    if (!is_solution(v))
        throw verification_error("array_to_solution: inverse map left the solution set");
    return v;
}

Int count_zero_ndiff(int n, int cap_n) {
    if (n < 1) throw std::invalid_argument("count_zero_ndiff: n must be >= 1");
    if (n > cap_n)
        throw resource_error("count_zero_ndiff refused: n exceeds cap " + std::to_string(cap_n));
    // Iterated differences of a 0/1 array stay below 2^n in magnitude, so
    // 64-bit scratch is exact here (n <= 20).
    const int len = n + 1;
    std::vector<long long> buf(static_cast<std::size_t>(len));
    unsigned long count = 0;
    const std::uint64_t total = 1ull << len;
    for (std::uint64_t m = 0; m < total; ++m) {
        for (int i = 0; i < len; ++i) buf[static_cast<std::size_t>(i)] = (m >> i) & 1u;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < len - 1 - k; ++i)
                buf[static_cast<std::size_t>(i)] =
                    buf[static_cast<std::size_t>(i) + 1] - buf[static_cast<std::size_t>(i)];
        if (buf[0] == 0) ++count;
    }
    return Int(count);
}

} // namespace bcb
