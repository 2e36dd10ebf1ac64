#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bcb/bigint.hpp"

namespace bcb {

// Quadrature setup for the oscillatory cosine-product integrals. The
// integrand is band-limited by its largest coefficient, so panel counts are
// sized from max_frequency and refined by doubling until two successive
// estimates agree within absolute_tolerance.
struct QuadratureSpec {
    Int max_frequency;             // largest cosine frequency in the integrand
    int nodes_per_period = 16;     // >= 8
    double absolute_tolerance = 1e-6;

    void validate() const;         // throws std::invalid_argument
};

struct QuadratureOptions {
    int nodes_per_period = 16;
    double absolute_tolerance = 1e-6;
    int jn_cap = 16;                       // largest n for jn_integral_estimate
    std::uint64_t es_sum_cap = 1u << 20;   // cap on sum of xs for es_count_integral
};

// 2^{n+1} * Integral_0^1 prod_j cos(pi*C(n,j)*s) ds, within
// opts.absolute_tolerance of the true value. Rounds to J_n.
double jn_integral_estimate(int n, const QuadratureOptions& opts = {});

// ES(x_1..x_m) = (2^m/pi) * Integral_0^pi prod_j cos(x_j t) dt: the number of
// sign choices with x_1 +- x_2 +- ... +- x_m = 0.
double es_count_integral(const std::vector<std::uint64_t>& xs,
                         const QuadratureOptions& opts = {});

struct FreimanConfig {
    std::size_t length_cap = 30;
    std::size_t state_cap = 1u << 22;  // max distinct partial sums kept by the DP
};

// Exact count of {0,1} assignments with sum a_i x_i = b, by dynamic
// programming over exact partial sums. Requires b <= (sum a_i)/2.
Int freiman_count(const std::vector<std::uint64_t>& a, const Int& b,
                  const FreimanConfig& cfg = {});

// Numerical companion: Integral_0^1 e^{-2 pi i x b} prod_j (1+e^{2 pi i x a_j}) dx.
double freiman_integral_estimate(const std::vector<std::uint64_t>& a, std::uint64_t b,
                                 const QuadratureOptions& opts = {});

// log2( sqrt(2*C(2n+1, n+1)) ), the J_n upper bound from the Hoelder chain.
double holder_upper_bound_log2(int n);

// The n >= 5 refined bound. refined_rhs_log2 is the detailed expression --
// the erf head term plus the sum of exponential tail terms over the dyadic
// subintervals -- with the o(1) correction set to 0 and every S_{n,s} taken
// as the exact sum of squared coefficients; it is informational (it can dip
// below the exact count at small n, see the n=5 row). remark_log2 =
// log2(2^{n+2}/n) is the contractual bound.
struct RefinedBound {
    int n = 0;
    double remark_log2 = 0.0;
    double refined_rhs_log2 = 0.0;
    bool o1_set_to_zero = true;
    bool exact_partial_sums = true;
};
RefinedBound refined_upper_bound(int n);

// log2 of the power-of-two bound for N = 2^exponent, exponent >= 3:
// log2(0.3258) + 3*2^{exponent-2} - 2^{(exponent-3)/2}.
double pow2_upper_bound_log2(int exponent);

// Binary entropy H(alpha); endpoints 0 and 1 return 0 by continuity.
double binary_entropy(double alpha);

// Exact partial row sum Sum_{j<=floor(n/2)-s} C(n,j) and the tail bound
// 2^n * e^{-2 s^2 / n}; holds is the strict comparison sum < bound.
struct PartialRowBound {
    Int exact_sum;
    double bound_log2 = 0.0;
    bool holds = false;
};
PartialRowBound hoeffding_partial_row_bound(int n, int s);

// Everything the bounds CLI prints for one n.
struct BoundReport {
    int n = 0;
    std::optional<Int> exact;
    double holder_log2 = 0.0;
    std::optional<double> remark_log2;       // n >= 5
    std::optional<double> refined_rhs_log2;  // n >= 5, informational
    std::optional<double> pow2_log2;         // only when n is a power of two >= 8
    // exact <= holder, exact <= remark, exact <= pow2 (when present)
    bool contractual_bounds_hold = true;
};
BoundReport bound_report(int n, const std::optional<Int>& exact);

// Exact S_{n,s} = Sum_{j<=floor(n/2)-s} C(n,j)^2.
Int sum_squared_prefix(int n, int s);

} // namespace bcb
