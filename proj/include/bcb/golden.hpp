#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bcb::golden {

// Published exact counts J_n for 1 <= n <= 51.
struct TableEntry {
    int n;
    std::uint64_t jn;
};
const std::vector<TableEntry>& table1();
std::optional<std::uint64_t> table1_jn(int n);

// Published orbit listing: per n, the highest-lexicographic representative of
// each nontrivial orbit and the number of solutions it generates.
struct OrbitEntry {
    std::uint64_t orbit_size;
    std::string representative;
};
struct AppendixRow {
    int n;
    std::vector<OrbitEntry> orbits;
};
const std::vector<AppendixRow>& appendix_orbits();
std::optional<AppendixRow> appendix_row(int n);

// Published list of n <= 10000 with family-generated nontrivial bisections.
const std::vector<long>& appendix_n_list();

// The n=8 worked example: the 0/1 array and its full difference chain down
// to [0].
const std::vector<std::vector<long>>& worked_difference_chain();

} // namespace bcb::golden
