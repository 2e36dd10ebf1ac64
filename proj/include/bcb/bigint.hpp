#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bcb {

using Int = mpz_class;

inline Int pow2(unsigned long e) { return Int(1) << e; }

// C(n,k) as an exact integer.
Int binomial(unsigned long n, unsigned long k);

// Exponent of 2 in z (z != 0).
unsigned long v2(const Int& z);

// Fibonacci number F_k, F_0 = 0, F_1 = 1.
Int fibonacci(unsigned long k);

// log2(z) for z > 0, as a double (exact mantissa + exponent from GMP).
double log2_mpz(const Int& z);

inline std::string to_decimal(const Int& z) { return z.get_str(); }

} // namespace bcb
