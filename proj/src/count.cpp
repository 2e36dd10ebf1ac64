#include "bcb/count.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "bcb/errors.hpp"
#include "bcb/pascal.hpp"

namespace bcb {

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// All subset sums of coeffs, by doubling. 2^|coeffs| entries.
std::vector<u64> subset_sums(std::span<const u64> coeffs) {
    std::vector<u64> sums;
    sums.reserve(1ull << coeffs.size());
    sums.push_back(0);
    for (u64 c : coeffs) {
        std::size_t sz = sums.size();
        for (std::size_t i = 0; i < sz; ++i) sums.push_back(sums[i] + c);
    }
    return sums;
}

void check_mitm_budget(std::size_t lo, std::size_t hi, std::size_t bytes_per_entry,
                       const CountConfig& cfg) {
    if (lo >= 62 || hi >= 62)
        throw resource_error("meet-in-the-middle: half size exceeds the 64-bit engine");
    std::size_t need = ((1ull << lo) + (1ull << hi)) * bytes_per_entry;
    if (need > cfg.memory_budget)
        throw resource_error("meet-in-the-middle: estimated " + std::to_string(need) +
                             " bytes exceeds the memory budget of " +
                             std::to_string(cfg.memory_budget));
}

// Exact brute-force count of sign vectors with zero signed sum: Gray-code
// walk over the delta=+1 subsets of the row.
Int brute_force_total(int n, const CountConfig& cfg) {
    if (n > cfg.brute_cap)
        throw resource_error("brute force refused: n = " + std::to_string(n) +
                             " exceeds the cap " + std::to_string(cfg.brute_cap));
    if (n == 0) return 0;
    const std::vector<u64> row = pascal_row_u64(n);
    const u64 target = bisection_target_u64(n);
    const int m = n + 1;
    u64 sum = 0;
    u64 count = (sum == target) ? 1 : 0;
    std::vector<char> in(static_cast<std::size_t>(m), 0);
    const u64 total = 1ull << m;
    for (u64 i = 1; i < total; ++i) {
        int j = std::countr_zero(i);
        if (in[static_cast<std::size_t>(j)]) {
            sum -= row[static_cast<std::size_t>(j)];
            in[static_cast<std::size_t>(j)] = 0;
        } else {
            sum += row[static_cast<std::size_t>(j)];
            in[static_cast<std::size_t>(j)] = 1;
        }
        if (sum == target) ++count;
    }
    return Int(count);
}

} // namespace

const char* to_string(Strategy s) {
    return s == Strategy::BruteForce ? "BruteForce" : "MeetInMiddle";
}

Int trivial_count(int n) {
    if (n < 0) throw std::invalid_argument("trivial_count: n must be >= 0");
    if (n == 0) return 0;
    if (n % 2 == 1) return pow2(static_cast<unsigned long>(n + 1) / 2);
    return 2;
}

Int count_subset_sums(std::span<const u64> coeffs, u64 target, const CountConfig& cfg) {
    std::size_t m = coeffs.size();
    if (m == 0) return target == 0 ? 1 : 0;
    std::size_t lo = (m + 1) / 2;
    std::size_t hi = m - lo;
    check_mitm_budget(lo, hi, sizeof(u64), cfg);

    std::vector<u64> a = subset_sums(coeffs.first(lo));
    std::vector<u64> b = subset_sums(coeffs.subspan(lo));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    // join on a[i] + b[j] == target: walk a ascending, b descending,
    // multiplying run lengths of equal sums
    Int count = 0;
    std::size_t i = 0;
    std::size_t j = b.size();
    while (i < a.size() && j > 0) {
        if (a[i] > target) break; // a sorted ascending, rest can only overshoot
        u64 need = target - a[i];
        while (j > 0 && b[j - 1] > need) --j;
        if (j == 0) break;
        if (b[j - 1] == need) {
            std::size_t ia = i;
            while (ia < a.size() && a[ia] == a[i]) ++ia;
            std::size_t jb = j;
            while (jb > 0 && b[jb - 1] == need) --jb;
            count += Int(static_cast<unsigned long>(ia - i)) *
                     static_cast<unsigned long>(j - jb);
            i = ia;
        } else {
            ++i;
        }
    }
    return count;
}

CountResult count_bisections(int n, Strategy strategy, const CountConfig& cfg) {
    if (n < 0) throw std::invalid_argument("count_bisections: n must be >= 0");
    auto t0 = Clock::now();
    CountResult r;
    r.n = n;
    r.strategy = strategy;
    if (n == 0) {
        r.total = 0;
    } else if (strategy == Strategy::BruteForce) {
        r.total = brute_force_total(n, cfg);
    } else {
        if (n > 62) throw resource_error("count_bisections: n > 62 exceeds the 64-bit engine");
        const std::vector<u64> row = pascal_row_u64(n);
        r.total = count_subset_sums(row, bisection_target_u64(n), cfg);
    }
    r.trivial = trivial_count(n);
    r.nontrivial = r.total - r.trivial;
    if (r.nontrivial < 0)
        throw verification_error("count_bisections: total below the trivial count");
    r.elapsed_ms = ms_since(t0);
    return r;
}

std::vector<ShardDescriptor> prefix_partition(int n, int prefix_len) {
    if (n < 0) throw std::invalid_argument("prefix_partition: n must be >= 0");
    if (prefix_len < 1 || prefix_len > n + 1)
        throw std::invalid_argument("prefix_partition: need 1 <= prefix_len <= n+1");
    if (prefix_len > 30)
        throw resource_error("prefix_partition: 2^prefix_len descriptors would not fit memory");
    std::vector<ShardDescriptor> shards;
    std::uint32_t count = 1u << prefix_len;
    shards.reserve(count);
    for (std::uint32_t id = 0; id < count; ++id) {
        ShardDescriptor s;
        s.n = n;
        s.prefix_len = prefix_len;
        s.shard_id = id;
        s.prefix_bits.resize(static_cast<std::size_t>(prefix_len));
        for (int t = 0; t < prefix_len; ++t)
            s.prefix_bits[static_cast<std::size_t>(t)] =
                ((id >> (prefix_len - 1 - t)) & 1u) ? '1' : '0';
        shards.push_back(std::move(s));
    }
    return shards;
}

Int count_shard(const ShardDescriptor& shard, const CountConfig& cfg) {
    if (shard.n == 0) return 0;
    if (shard.n > 62) throw resource_error("count_shard: n > 62 exceeds the 64-bit engine");
    const std::vector<u64> row = pascal_row_u64(shard.n);
    const u64 target = bisection_target_u64(shard.n);
    u64 base = 0;
    for (int t = 0; t < shard.prefix_len; ++t)
        if (shard.prefix_bits[static_cast<std::size_t>(t)] == '1')
            base += row[static_cast<std::size_t>(t)];
    if (base > target) return 0;
    std::span<const u64> rest(row.data() + shard.prefix_len,
                              row.size() - static_cast<std::size_t>(shard.prefix_len));
    return count_subset_sums(rest, target - base, cfg);
}

CountResult count_bisections_sharded(int n, int prefix_len, const CountConfig& cfg) {
    auto t0 = Clock::now();
    auto shards = prefix_partition(n, prefix_len);
    int workers = std::max(1, cfg.threads);
    std::vector<Int> totals(shards.size());
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= shards.size()) return;
                totals[i] = count_shard(shards[i], cfg);
            }
        });
    }
    for (auto& th : pool) th.join();

    CountResult r;
    r.n = n;
    r.strategy = Strategy::MeetInMiddle;
    r.total = 0;
    for (const Int& t : totals) r.total += t; // shard order: deterministic merge
    r.trivial = trivial_count(n);
    r.nontrivial = r.total - r.trivial;
    r.shards = ShardManifestRef{prefix_len, static_cast<std::uint32_t>(shards.size())};
    r.elapsed_ms = ms_since(t0);
    return r;
}

namespace {

// Suffix table for lexicographic enumeration: subset sums of the high
// indices, grouped by sum, each group's packed suffixes descending.
struct SuffixTable {
    std::vector<std::pair<u64, u64>> entries; // (sum, packed suffix)
    std::vector<u64> group_sums;              // ascending unique sums
    std::vector<std::size_t> group_off;       // offsets into entries, +sentinel
};

SuffixTable build_suffix_table(const std::vector<u64>& row, int n, int h,
                               const CountConfig& cfg) {
    std::size_t hi = static_cast<std::size_t>(n - h);
    std::size_t lo = static_cast<std::size_t>(h + 1);
    check_mitm_budget(lo, hi, sizeof(std::pair<u64, u64>), cfg);

    SuffixTable t;
    t.entries.reserve(1ull << hi);
    t.entries.emplace_back(0, 0);
    for (int i = h + 1; i <= n; ++i) {
        u64 bit = 1ull << (n - i);
        u64 c = row[static_cast<std::size_t>(i)];
        std::size_t sz = t.entries.size();
        for (std::size_t e = 0; e < sz; ++e)
            t.entries.emplace_back(t.entries[e].first + c, t.entries[e].second | bit);
    }
    std::sort(t.entries.begin(), t.entries.end(),
              [](const std::pair<u64, u64>& a, const std::pair<u64, u64>& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second > b.second; // suffixes descending within a sum
              });
    for (std::size_t e = 0; e < t.entries.size(); ++e) {
        if (e == 0 || t.entries[e].first != t.entries[e - 1].first) {
            t.group_sums.push_back(t.entries[e].first);
            t.group_off.push_back(e);
        }
    }
    t.group_off.push_back(t.entries.size());
    return t;
}

// DFS over delta_0..delta_h trying +1 before -1, so completed vectors come
// out in decreasing bit-string order.
template <typename Emit>
void enumerate_packed(int n, const CountConfig& cfg, Emit&& emit) {
    if (n == 0) return;
    const std::vector<u64> row = pascal_row_u64(n);
    const u64 target = bisection_target_u64(n);
    const int h = n / 2;

    SuffixTable table = build_suffix_table(row, n, h, cfg);

    // tail[i] = row[i] + ... + row[n]: interval bound for pruning
    std::vector<u64> tail(static_cast<std::size_t>(n) + 2, 0);
    for (int i = n; i >= 0; --i)
        tail[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i) + 1] +
                                            row[static_cast<std::size_t>(i)];

    auto rec = [&](auto&& self, int i, u64 sum, u64 prefix) -> void {
        if (sum > target || sum + tail[static_cast<std::size_t>(i)] < target) return;
        if (i > h) {
            u64 need = target - sum;
            auto it = std::lower_bound(table.group_sums.begin(), table.group_sums.end(), need);
            if (it == table.group_sums.end() || *it != need) return;
            std::size_t g = static_cast<std::size_t>(it - table.group_sums.begin());
            for (std::size_t e = table.group_off[g]; e < table.group_off[g + 1]; ++e)
                emit(prefix | table.entries[e].second);
            return;
        }
        u64 bit = 1ull << (n - i);
        self(self, i + 1, sum + row[static_cast<std::size_t>(i)], prefix | bit);
        self(self, i + 1, sum, prefix);
    };
    rec(rec, 0, 0, 0);
}

} // namespace

void enumerate_solutions(int n, SolutionFilter filter,
                         const std::function<void(const SignVector&)>& sink,
                         const CountConfig& cfg) {
    if (n < 0) throw std::invalid_argument("enumerate_solutions: n must be >= 0");
    if (n > 62) throw resource_error("enumerate_solutions: n > 62 unsupported");
    const std::vector<u64> row = (n > 0) ? pascal_row_u64(n) : std::vector<u64>{1};
    const u64 target = (n > 0) ? bisection_target_u64(n) : 0;
    enumerate_packed(n, cfg, [&](u64 mask) {
        // re-verify exactly before emission
        u64 sum = 0;
        for (int i = 0; i <= n; ++i)
            if ((mask >> (n - i)) & 1u) sum += row[static_cast<std::size_t>(i)];
        if (sum != target)
            throw verification_error("enumerate_solutions: emitted vector failed re-verification");
        if (filter == SolutionFilter::NontrivialOnly &&
            (packed::is_alternating(mask, n) || packed::is_antisymmetric(mask, n)))
            return;
        sink(SignVector::from_packed(n, mask));
    });
}

std::vector<SignVector> list_solutions(int n, SolutionFilter filter, const CountConfig& cfg) {
    std::vector<SignVector> out;
    enumerate_solutions(n, filter, [&](const SignVector& v) { out.push_back(v); }, cfg);
    return out;
}

std::vector<std::uint64_t> nontrivial_packed(int n, const CountConfig& cfg) {
    if (n < 0) throw std::invalid_argument("nontrivial_packed: n must be >= 0");
    if (n > 62) throw resource_error("nontrivial_packed: n > 62 unsupported");
    std::vector<u64> out;
    enumerate_packed(n, cfg, [&](u64 mask) {
        if (!packed::is_alternating(mask, n) && !packed::is_antisymmetric(mask, n))
            out.push_back(mask);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bcb
