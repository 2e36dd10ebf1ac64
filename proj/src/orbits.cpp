#include "bcb/orbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bcb/errors.hpp"

namespace bcb {

namespace {

using u64 = std::uint64_t;

// Neighbors under the two generators. Both preserve the exact signed sum
// (C(n,i) = C(n,n-i)) and keep nontrivial vectors nontrivial, so every
// neighbor is again a member of the nontrivial solution set.
template <typename Visit>
void for_each_neighbor(u64 mask, int n, Visit&& visit) {
    for (int p = 0; 2 * p < n; ++p) {
        u64 lobit = 1ull << p;
        u64 hibit = 1ull << (n - p);
        bool lo = mask & lobit;
        bool hi = mask & hibit;
        if (lo != hi) visit(mask ^ (lobit | hibit));
    }
    visit(packed::reverse_complement(mask, n));
}

} // namespace

std::vector<OrbitSummary> canonical_orbits(int n, const CountConfig& cfg) {
    std::vector<u64> masks = nontrivial_packed(n, cfg); // ascending
    std::vector<char> visited(masks.size(), 0);

    auto index_of = [&](u64 m) -> std::size_t {
        auto it = std::lower_bound(masks.begin(), masks.end(), m);
        if (it == masks.end() || *it != m)
            throw verification_error("canonical_orbits: symmetry op left the solution set");
        return static_cast<std::size_t>(it - masks.begin());
    };

    std::vector<OrbitSummary> orbits;
    std::vector<std::size_t> stack;
    // Scanning from the largest mask down makes the seed of each orbit its
    // lexicographically greatest member.
    for (std::size_t s = masks.size(); s-- > 0;) {
        if (visited[s]) continue;
        u64 rep = masks[s];
        std::uint64_t size = 0;
        stack.assign(1, s);
        visited[s] = 1;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            ++size;
            for_each_neighbor(masks[cur], n, [&](u64 nb) {
                std::size_t idx = index_of(nb);
                if (!visited[idx]) {
                    visited[idx] = 1;
                    stack.push_back(idx);
                }
            });
        }
        orbits.push_back({SignVector::from_packed(n, rep), size});
    }
    return orbits;
}

} // namespace bcb
