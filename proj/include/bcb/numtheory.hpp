#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bcb/bigint.hpp"
#include "bcb/count.hpp"
#include "bcb/sign_vector.hpp"

namespace bcb {

// Exponent of 2 in C(N,k): the number of borrows when subtracting k from N
// in base 2 (Kummer).
int v2_binomial(std::uint64_t N, std::uint64_t k);

// 2-adic valuations of the row N = 2^exponent, merged list
// {v2(C(2^e, k))}_{k=0..2^e}. Satisfies merged[k] + v2(k) = exponent for
// 0 < k < 2^e.
struct ValuationTableaux {
    int exponent = 0;
    std::vector<int> merged;
};
ValuationTableaux valuation_tableaux(int exponent);

// R_k = Sum_t C(2^e, (2t+1)*2^{e-k}), 1 <= k <= e. Verifies v2(R_k) = 2^k - 1
// and the closed forms for R_e and R_{e-1} before returning.
Int rk_sum(int exponent, int k);

// Solutions of X^2 - 5 Y^2 = -4 in positive integers, increasing.
struct PellSolution {
    int index = 0; // 0-based
    Int x, y;
};
std::vector<PellSolution> pell_solutions(int count);

enum class Family { SectionOneShift, TwoTermAvg, FourTermSwap, FibonacciPell, BlockInsert };

const char* to_string(Family f);

// A verified instance of one of the binomial identities together with the
// explicit nontrivial bisection it induces. lhs == rhs always holds (exact
// verification is mandatory before a witness is returned).
struct FamilyWitness {
    Family family = Family::TwoTermAvg;
    long k = 0;                  // family parameter (equals n for SectionOneShift)
    long n = 0;
    long x = 0;                  // smallest identity index (k for SectionOneShift)
    std::vector<long> positions; // row indices of the identity terms
    Int lhs, rhs;
    SignVector sample_bisection;
};

// Builds and exactly verifies a witness; nullopt when the closed form yields
// indices outside [0,n], the parity/congruence condition for nontriviality
// fails, or the induced vector is trivial. Valid parameter ranges:
//   TwoTermAvg:      k >= 4 even,  n = k^2 - 2
//   FourTermSwap:    k >= 4 even,  n = k^2 - 3
//   FibonacciPell:   k >= 1, k = 0,1 mod 3, n = (F_{4k+1} + 2 F_{4k} - 6)/5
//   BlockInsert:     k >= 0,       n = 4k^2 + 16k + 13
//   SectionOneShift: parameter is n itself, n = 2 mod 6
std::optional<FamilyWitness> family_witness(Family f, long k);

// Union over the four diophantine families of all n <= limit admitting a
// verified nontrivial witness, deduplicated and sorted.
std::vector<long> family_n_list(long limit);

bool is_prime(std::uint64_t p);

// C(p-1, j) = (-1)^j mod p for all j (the congruence step alone).
bool prime_congruence_ok(std::uint64_t p);

struct PrimeCheck {
    std::uint64_t p = 0;
    Int jn;                      // J_{p-1}
    bool jn_is_two = false;
    bool congruence_ok = false;  // C(p-1, j) = (-1)^j mod p for all j
};
PrimeCheck jp_minus_one_check(std::uint64_t p, const CountConfig& cfg = {});

} // namespace bcb
