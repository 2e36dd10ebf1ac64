#pragma once

#include <cstdint>
#include <vector>

#include "bcb/count.hpp"
#include "bcb/sign_vector.hpp"

namespace bcb {

// One equivalence class of nontrivial solutions under the symmetry group
// generated by (a) complementing both bits at positions (i, n-i) when they
// differ and (b) reverse-then-complement of the whole vector.
struct OrbitSummary {
    SignVector representative; // lexicographically greatest member
    std::uint64_t orbit_size = 0;
};

// Partition of the nontrivial solutions of order n into orbits, sorted by
// descending representative. Sum of orbit sizes equals the nontrivial count.
std::vector<OrbitSummary> canonical_orbits(int n, const CountConfig& cfg = {});

} // namespace bcb
