#include "bcb/backmap.hpp"

#include <stdexcept>

#include "bcb/errors.hpp"
#include "bcb/numtheory.hpp"
#include "bcb/pascal.hpp"

namespace bcb {

bool TernaryVector::zero() const {
    for (int e : entries)
        if (e != 0) return false;
    return true;
}

std::string TernaryVector::str() const {
    std::string s;
    s.reserve(entries.size());
    for (int e : entries) s.push_back(e > 0 ? '+' : (e < 0 ? '-' : '0'));
    return s;
}

TernaryVector TernaryVector::parse(int m, const std::string& s) {
    if (static_cast<int>(s.size()) != m + 1)
        throw std::invalid_argument("TernaryVector::parse: length mismatch");
    TernaryVector t;
    t.m = m;
    t.entries.reserve(s.size());
    for (char c : s) {
        if (c == '+') t.entries.push_back(1);
        else if (c == '-') t.entries.push_back(-1);
        else if (c == '0') t.entries.push_back(0);
        else throw std::invalid_argument("TernaryVector::parse: bad character");
    }
    return t;
}

Int ternary_weighted_sum(const TernaryVector& t) {
    if (static_cast<int>(t.entries.size()) != t.m + 1)
        throw std::invalid_argument("ternary_weighted_sum: malformed vector");
    PascalRow row = pascal_row(t.m);
    Int sum = 0;
    for (int i = 0; i <= t.m; ++i)
        if (t.entries[static_cast<std::size_t>(i)] != 0)
            sum += t.entries[static_cast<std::size_t>(i)] * row.at(i);
    return sum;
}

bool is_identity(const TernaryVector& t) { return ternary_weighted_sum(t) == 0; }

TernaryVector theta(const SignVector& v) {
    if (v.n < 1) throw std::invalid_argument("theta: need order >= 1");
    if (!is_solution(v)) throw std::invalid_argument("theta: input is not a solution");
    TernaryVector t;
    t.m = v.n - 1;
    t.entries.reserve(static_cast<std::size_t>(v.n));
    for (int j = 0; j < v.n; ++j) t.entries.push_back((v.delta(j) + v.delta(j + 1)) / 2);
    if (!is_identity(t))
        throw verification_error("theta: image failed the identity invariant");
    return t;
}

bool has_ivp(const TernaryVector& t) {
    if (!is_identity(t)) throw std::invalid_argument("has_ivp: not an identity vector");
    int prev_sign = 0;
    int prev_pos = 0;
    for (int j = 0; j <= t.m; ++j) {
        int e = t.entries[static_cast<std::size_t>(j)];
        if (e == 0) continue;
        if (prev_sign != 0 && e != prev_sign) {
            int zeros_between = j - prev_pos - 1;
            if (zeros_between % 2 == 0) return false;
        }
        prev_sign = e;
        prev_pos = j;
    }
    return true;
}

bool liftable(const TernaryVector& t) {
    if (!is_identity(t)) throw std::invalid_argument("liftable: not an identity vector");
    int prev_sign = 0;
    int prev_pos = 0;
    for (int j = 0; j <= t.m; ++j) {
        int e = t.entries[static_cast<std::size_t>(j)];
        if (e == 0) continue;
        if (prev_sign != 0) {
            int zeros_between = j - prev_pos - 1;
            bool changes = e != prev_sign;
            if (changes != (zeros_between % 2 == 1)) return false;
        }
        prev_sign = e;
        prev_pos = j;
    }
    return true;
}

SignVector lift(const TernaryVector& t, int first_sign) {
    if (first_sign != 1 && first_sign != -1)
        throw std::invalid_argument("lift: first_sign must be +1 or -1");
    if (!has_ivp(t)) throw std::invalid_argument("lift: vector lacks the IVP property");
    int n = t.m + 1;
    std::vector<int> delta(static_cast<std::size_t>(n) + 1, 0);
    delta[0] = first_sign;
    for (int j = 0; j < n; ++j) {
        int e = t.entries[static_cast<std::size_t>(j)];
        if (e == 0) {
            delta[static_cast<std::size_t>(j) + 1] = -delta[static_cast<std::size_t>(j)];
        } else {
            if (delta[static_cast<std::size_t>(j)] != e)
                throw std::invalid_argument("lift: first_sign inconsistent with a forced entry");
            delta[static_cast<std::size_t>(j) + 1] = e;
        }
    }
    SignVector v;
    v.n = n;
    v.bits.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        v.bits[static_cast<std::size_t>(i)] = delta[static_cast<std::size_t>(i)] > 0 ? '1' : '0';
    if (!is_solution(v))
        throw verification_error("lift: lifted vector is not a solution");
    return v;
}

TernaryVector as_ternary(const SignVector& v) {
    TernaryVector t;
    t.m = v.n;
    t.entries.reserve(static_cast<std::size_t>(v.n) + 1);
    for (int i = 0; i <= v.n; ++i) t.entries.push_back(v.delta(i));
    return t;
}

CorollaryReport prime_corollary_check(std::uint64_t p, const CountConfig& cfg) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("prime_corollary_check: p must be an odd prime");
    int n = static_cast<int>(p) - 2;
    CorollaryReport rep;
    rep.p = p;
    for (std::uint64_t mask : nontrivial_packed(n, cfg)) {
        SignVector v = SignVector::from_packed(n, mask);
        ++rep.nontrivial_examined;
        // the two identity candidates: delta and -delta as ternary vectors
        bool any_ivp = false;
        for (const SignVector& cand : {v, v.negated()}) {
            TernaryVector eta = as_ternary(cand);
            if (!eta.zero() && has_ivp(eta)) any_ivp = true;
        }
        if (any_ivp)
            ++rep.nonzero_ivp_found;
        else
            ++rep.ivp_violations;
    }
    return rep;
}

} // namespace bcb
