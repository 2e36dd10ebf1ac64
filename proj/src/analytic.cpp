#include "bcb/analytic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcb/errors.hpp"
#include "bcb/pascal.hpp"

namespace bcb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2E = std::numbers::log2e;

// 16-point Gauss-Legendre rule on [-1,1], nodes by Newton iteration on P_16.
constexpr int kGL = 16;

struct GLRule {
    double node[kGL / 2];   // positive abscissae
    double weight[kGL / 2];
};

GLRule make_gl_rule() {
    GLRule r;
    for (int i = 0; i < kGL / 2; ++i) {
        // Chebyshev-angle initial guess for the i-th largest root
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (kGL + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= kGL; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = kGL * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.node[i] = x;
        r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GLRule& gl_rule() {
    static const GLRule r = make_gl_rule();
    return r;
}

// Composite GL over [0,1] with `panels` panels; per-panel results are
// combined by pairwise summation in fixed panel order so the value is
// reproducible independent of any parallel split.
double composite_gl(const std::function<double(double)>& f, std::size_t panels) {
    const GLRule& rule = gl_rule();
    std::vector<double> part(panels);
    const double h = 1.0 / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = (static_cast<double>(p) + 0.5) * h;
        double acc = 0.0;
        for (int i = 0; i < kGL / 2; ++i) {
            const double dx = 0.5 * h * rule.node[i];
            acc += rule.weight[i] * (f(mid + dx) + f(mid - dx));
        }
        part[p] = acc * 0.5 * h;
    }
    for (std::size_t width = 1; width < part.size(); width *= 2)
        for (std::size_t i = 0; i + width < part.size(); i += 2 * width)
            part[i] += part[i + width];
    return part.empty() ? 0.0 : part[0];
}

// Panel-doubling driver: starts from enough panels to give the fastest
// oscillation its nodes_per_period samples, then refines until two successive
// scaled estimates agree within the tolerance.
double refine_to_tolerance(const std::function<double(double)>& f, double periods,
                           double scale, const QuadratureSpec& spec) {
    spec.validate();
    double nodes_needed = static_cast<double>(spec.nodes_per_period) * std::max(periods, 1.0);
    std::size_t panels = static_cast<std::size_t>(std::ceil(nodes_needed / kGL));
    panels = std::max<std::size_t>(panels, 1);

    double prev = scale * composite_gl(f, panels);
    for (int round = 0; round < 8; ++round) {
        panels *= 2;
        double cur = scale * composite_gl(f, panels);
        if (std::abs(cur - prev) <= 0.5 * spec.absolute_tolerance) return cur;
        prev = cur;
    }
    throw resource_error("quadrature did not reach the requested tolerance");
}

double cosine_product(const std::vector<std::uint64_t>& freqs, double s) {
    double prod = 1.0;
    for (std::uint64_t a : freqs) prod *= std::cos(kPi * static_cast<double>(a) * s);
    return prod;
}

double checked_exact_sum(const std::vector<std::uint64_t>& xs, const char* who) {
    if (xs.empty()) throw std::invalid_argument(std::string(who) + ": empty list");
    std::uint64_t sum = 0;
    for (std::uint64_t x : xs) {
        if (x == 0) throw std::invalid_argument(std::string(who) + ": entries must be positive");
        sum += x;
    }
    return static_cast<double>(sum);
}

} // namespace

void QuadratureSpec::validate() const {
    if (nodes_per_period < 8)
        throw std::invalid_argument("QuadratureSpec: nodes_per_period must be >= 8");
    if (!(absolute_tolerance > 0))
        throw std::invalid_argument("QuadratureSpec: absolute_tolerance must be > 0");
}

double jn_integral_estimate(int n, const QuadratureOptions& opts) {
    if (n < 0) throw std::invalid_argument("jn_integral_estimate: n must be >= 0");
    if (n > opts.jn_cap)
        throw resource_error("jn_integral_estimate refused: n exceeds cap " +
                             std::to_string(opts.jn_cap));
    const std::vector<std::uint64_t> row = pascal_row_u64(n);
    QuadratureSpec spec{Int(row[static_cast<std::size_t>(n / 2)]), opts.nodes_per_period,
                        opts.absolute_tolerance};
    // fastest factor cos(pi*b_max*s) completes b_max/2 periods on [0,1]
    double periods = static_cast<double>(row[static_cast<std::size_t>(n / 2)]) / 2.0;
    double scale = std::ldexp(1.0, n + 1);
    return refine_to_tolerance([&](double s) { return cosine_product(row, s); }, periods,
                               scale, spec);
}

double es_count_integral(const std::vector<std::uint64_t>& xs, const QuadratureOptions& opts) {
    double sum = checked_exact_sum(xs, "es_count_integral");
    if (sum > static_cast<double>(opts.es_sum_cap))
        throw resource_error("es_count_integral refused: coefficient sum exceeds cap");
    std::uint64_t fmax = *std::max_element(xs.begin(), xs.end());
    QuadratureSpec spec{Int(fmax), opts.nodes_per_period, opts.absolute_tolerance};
    double periods = static_cast<double>(fmax) / 2.0;
    double scale = std::ldexp(1.0, static_cast<int>(xs.size()));
    return refine_to_tolerance([&](double s) { return cosine_product(xs, s); }, periods,
                               scale, spec);
}

Int freiman_count(const std::vector<std::uint64_t>& a, const Int& b, const FreimanConfig& cfg) {
    if (a.empty()) throw std::invalid_argument("freiman_count: empty list");
    if (a.size() > cfg.length_cap)
        throw resource_error("freiman_count refused: list longer than cap");
    Int total = 0;
    for (std::uint64_t v : a) {
        if (v == 0) throw std::invalid_argument("freiman_count: entries must be positive");
        total += Int(static_cast<unsigned long>(v));
    }
    if (b < 0 || 2 * b > total)
        throw std::invalid_argument("freiman_count: need 0 <= b <= sum(a)/2");

    // DP over exact reachable partial sums, pruned above b.
    std::map<Int, Int> reach;
    reach[0] = 1;
    for (std::uint64_t v : a) {
        std::map<Int, Int> next = reach;
        for (const auto& [s, c] : reach) {
            Int t = s + static_cast<unsigned long>(v);
            if (t <= b) next[t] += c;
        }
        if (next.size() > cfg.state_cap)
            throw resource_error("freiman_count refused: DP state exceeds cap");
        reach.swap(next);
    }
    auto it = reach.find(b);
    return it == reach.end() ? Int(0) : it->second;
}

double freiman_integral_estimate(const std::vector<std::uint64_t>& a, std::uint64_t b,
                                 const QuadratureOptions& opts) {
    double sum = checked_exact_sum(a, "freiman_integral_estimate");
    if (sum > static_cast<double>(opts.es_sum_cap))
        throw resource_error("freiman_integral_estimate refused: coefficient sum exceeds cap");
    // integrand frequencies live in [-b, sum-b] cycles per unit length
    double fmax = std::max(static_cast<double>(b), sum - static_cast<double>(b));
    QuadratureSpec spec{Int(static_cast<unsigned long>(fmax)), opts.nodes_per_period,
                        opts.absolute_tolerance};
    auto integrand = [&](double x) {
        std::complex<double> prod = std::polar(1.0, -2.0 * kPi * x * static_cast<double>(b));
        for (std::uint64_t aj : a)
            prod *= 1.0 + std::polar(1.0, 2.0 * kPi * x * static_cast<double>(aj));
        return prod.real();
    };
    return refine_to_tolerance(integrand, fmax, 1.0, spec);
}

double holder_upper_bound_log2(int n) {
    if (n < 1) throw std::invalid_argument("holder_upper_bound: n must be >= 1");
    Int c = binomial(2 * static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(n) + 1);
    return 0.5 * (1.0 + log2_mpz(c));
}

Int sum_squared_prefix(int n, int s) {
    if (n < 1 || s < 0 || s > n / 2)
        throw std::invalid_argument("sum_squared_prefix: need 0 <= s <= floor(n/2)");
    PascalRow row = pascal_row(n);
    Int acc = 0;
    for (int j = 0; j <= n / 2 - s; ++j) acc += row.at(j) * row.at(j);
    return acc;
}

RefinedBound refined_upper_bound(int n) {
    if (n < 5) throw std::invalid_argument("refined_upper_bound: n must be >= 5");
    RefinedBound r;
    r.n = n;
    r.remark_log2 = static_cast<double>(n + 2) - std::log2(static_cast<double>(n));

    const int B = n / 2;
    PascalRow row = pascal_row(n);
    // prefix sums of squared coefficients: S_{n,s} = pref[B-s]
    std::vector<Int> pref(static_cast<std::size_t>(B) + 1);
    Int acc = 0;
    for (int j = 0; j <= B; ++j) {
        acc += row.at(j) * row.at(j);
        pref[static_cast<std::size_t>(j)] = acc;
    }

    std::vector<double> terms_log2;
    {
        // head: erf(pi*sqrt(S_{n,0})/(2 b_B)) / (2 sqrt(pi S_{n,0}))
        double lS0 = log2_mpz(pref[static_cast<std::size_t>(B)]);
        double lbB = log2_mpz(row.at(B));
        double lz = std::log2(kPi) + 0.5 * lS0 - 1.0 - lbB;
        double z = std::exp2(lz);
        double erf_z = std::erf(z);
        if (erf_z > 0)
            terms_log2.push_back(std::log2(erf_z) - 1.0 - 0.5 * (std::log2(kPi) + lS0));
    }
    for (int s = 1; s <= B - 1; ++s) {
        const Int& b = row.at(B - s + 1);
        double lb = log2_mpz(b);
        double lS = log2_mpz(pref[static_cast<std::size_t>(B - s)]);
        double larg = 2.0 * std::log2(kPi) + lS - 2.0 - 2.0 * lb;
        if (larg > 62.0) continue; // exp(-2^63) underflows any scale
        double arg = std::exp2(larg);
        double lt = -arg * kLog2E + std::log2(static_cast<double>(s)) -
                    std::log2(static_cast<double>(B - s + 1)) - lb;
        terms_log2.push_back(lt);
    }

    double lmax = *std::max_element(terms_log2.begin(), terms_log2.end());
    double sum = 0.0;
    for (double lt : terms_log2) sum += std::exp2(lt - lmax);
    r.refined_rhs_log2 = static_cast<double>(n + 2) + lmax + std::log2(sum);
    return r;
}

double pow2_upper_bound_log2(int exponent) {
    if (exponent < 3) throw std::invalid_argument("pow2_upper_bound: exponent must be >= 3");
    return std::log2(0.3258) + 3.0 * std::exp2(exponent - 2) -
           std::exp2(0.5 * static_cast<double>(exponent - 3));
}

double binary_entropy(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("binary_entropy: alpha must lie in [0,1]");
    if (alpha == 0.0 || alpha == 1.0) return 0.0;
    return -alpha * std::log2(alpha) - (1.0 - alpha) * std::log2(1.0 - alpha);
}

PartialRowBound hoeffding_partial_row_bound(int n, int s) {
    if (n < 1 || s < 0 || s > n / 2)
        throw std::invalid_argument("hoeffding_partial_row_bound: need 0 <= s <= floor(n/2)");
    PascalRow row = pascal_row(n);
    PartialRowBound out;
    out.exact_sum = 0;
    for (int j = 0; j <= n / 2 - s; ++j) out.exact_sum += row.at(j);
    out.bound_log2 = static_cast<double>(n) -
                     (2.0 * static_cast<double>(s) * static_cast<double>(s) /
                      static_cast<double>(n)) * kLog2E;
    out.holds = log2_mpz(out.exact_sum) < out.bound_log2;
    return out;
}

BoundReport bound_report(int n, const std::optional<Int>& exact) {
    BoundReport r;
    r.n = n;
    r.exact = exact;
    r.holder_log2 = holder_upper_bound_log2(n);
    if (n >= 5) {
        RefinedBound rb = refined_upper_bound(n);
        r.remark_log2 = rb.remark_log2;
        r.refined_rhs_log2 = rb.refined_rhs_log2;
    }
    if (n >= 8 && std::has_single_bit(static_cast<unsigned>(n)))
        r.pow2_log2 = pow2_upper_bound_log2(std::countr_zero(static_cast<unsigned>(n)));
    if (exact && *exact > 0) {
        double le = log2_mpz(*exact);
        r.contractual_bounds_hold = le <= r.holder_log2 &&
                                    (!r.remark_log2 || le <= *r.remark_log2) &&
                                    (!r.pow2_log2 || le <= *r.pow2_log2);
    }
    return r;
}

} // namespace bcb
