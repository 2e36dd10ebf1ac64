#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcb/bigint.hpp"
#include "bcb/sign_vector.hpp"

namespace bcb {

enum class Strategy { BruteForce, MeetInMiddle };

const char* to_string(Strategy s);

struct CountConfig {
    int brute_cap = 24;                          // max n for brute force (2^{n+1} candidates)
    std::size_t memory_budget = 8ull << 30;      // bytes for MITM tables
    int threads = 1;                             // worker threads for sharded counting
};

struct ShardManifestRef {
    int prefix_len = 0;
    std::uint32_t shard_count = 0;
};

struct CountResult {
    int n = 0;
    Int total;
    Int trivial;
    Int nontrivial;
    Strategy strategy = Strategy::MeetInMiddle;
    double elapsed_ms = 0.0;
    std::optional<ShardManifestRef> shards;
};

// 2^{(n+1)/2} for odd n, 2 for even n >= 1, 0 for n = 0.
Int trivial_count(int n);

// Exact J_n. BruteForce walks all 2^{n+1} sign vectors (Gray code) and is
// capped by cfg.brute_cap; MeetInMiddle splits the index set at floor(n/2),
// enumerates exact subset sums of both halves and joins on the target
// 2^{n-1}. Counting refuses up front (resource_error) when the a-priori
// table-size estimate exceeds cfg.memory_budget.
CountResult count_bisections(int n, Strategy strategy = Strategy::MeetInMiddle,
                             const CountConfig& cfg = {});

// One fixed delta-prefix of the search space.
struct ShardDescriptor {
    int n = 0;
    int prefix_len = 0;
    std::uint32_t shard_id = 0;  // bit (prefix_len-1-t) holds bits[t]
    std::string prefix_bits;     // first prefix_len characters of every member
};

// 2^prefix_len disjoint shards; summing count_shard over all of them equals
// count_bisections(n).total, in any order.
std::vector<ShardDescriptor> prefix_partition(int n, int prefix_len);
Int count_shard(const ShardDescriptor& shard, const CountConfig& cfg = {});

// Shard-parallel count: dispatches 2^prefix_len shards onto cfg.threads
// workers and merges in shard order. Result is independent of cfg.threads.
CountResult count_bisections_sharded(int n, int prefix_len, const CountConfig& cfg = {});

enum class SolutionFilter { All, NontrivialOnly };

// Emits every solution exactly once, in lexicographically decreasing
// bit-string order. Each vector is re-verified exactly before emission.
void enumerate_solutions(int n, SolutionFilter filter,
                         const std::function<void(const SignVector&)>& sink,
                         const CountConfig& cfg = {});

std::vector<SignVector> list_solutions(int n, SolutionFilter filter,
                                       const CountConfig& cfg = {});

// Packed variant used by the orbit machinery: nontrivial solutions only,
// ascending mask order.
std::vector<std::uint64_t> nontrivial_packed(int n, const CountConfig& cfg = {});

// Exact number of subsets of coeffs with the given sum. Core engine behind
// MITM counting and shards; coeffs and target must be exact (they are, for
// n <= 62 rows).
Int count_subset_sums(std::span<const std::uint64_t> coeffs, std::uint64_t target,
                      const CountConfig& cfg = {});

} // namespace bcb
