#pragma once

// Independent brute-force oracles used only by tests. None of these share
// algorithmic machinery with the library paths they check.

#include <cstdint>
#include <string>
#include <vector>

#include "dsarr/arrangement.hpp"
#include "dsarr/ds_core.hpp"

namespace dsarr::test {

// Longest alternating subsequence between a and b by dynamic programming
// over positions: state = (last symbol taken).
int dp_pair_alternation(const std::vector<ds::Symbol>& items, ds::Symbol a,
                        ds::Symbol b);

// Max over all pairs of dp_pair_alternation.
int dp_max_alternation(const std::vector<ds::Symbol>& items);

// Brute-force planar subdivision of a bounded segment set: split every
// segment at every pairwise crossing, count V and E directly, get F from
// Euler's relation with union-find components, and read face boundaries off
// an independent rotation-system walker.
struct SubdivisionSummary {
    long v = 0;
    long e = 0;
    long f = 0;  // including the unbounded face
    std::vector<long> face_complexities;       // sorted
    std::vector<std::string> face_signatures;  // sorted canonical walk bundles
};

SubdivisionSummary oracle_subdivision(const CurveSet& cs);

// The same summary read off a built Arrangement, for comparison.
SubdivisionSummary arrangement_summary(const Arrangement& arr);

// Tiny deterministic RNG (splitmix64); keeps test data identical everywhere.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() %
                                              static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace dsarr::test
