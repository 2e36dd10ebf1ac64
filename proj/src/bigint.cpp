#include "bcb/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace bcb {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

unsigned long v2(const Int& z) {
    if (z == 0) throw std::invalid_argument("v2(0) is undefined");
    return static_cast<unsigned long>(mpz_scan1(z.get_mpz_t(), 0));
}

Int fibonacci(unsigned long k) {
    Int r;
    mpz_fib_ui(r.get_mpz_t(), k);
    return r;
}

double log2_mpz(const Int& z) {
    if (z <= 0) throw std::invalid_argument("log2_mpz requires a positive value");
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
}

} // namespace bcb
