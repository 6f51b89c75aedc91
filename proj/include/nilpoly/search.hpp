#pragma once

#include <set>
#include <vector>

#include "nilpoly/interpolate.hpp"

namespace nilpoly {

struct SearchConfig {
    Int start;                    // nonzero
    unsigned long max_index = 0;  // 0 selects the default m_max_formula(start) + 2
    bool emit_families = false;
};

struct EnumerationResult {
    Int start;
    // Complete, lexicographically sorted list of realizable sequences
    // (start, r_1, ..., r_{m-1}, 0) with 1 <= m <= max_index.
    std::vector<std::vector<Int>> sequences;
    std::vector<SequenceFamily> families;  // parallel to sequences when requested
    unsigned long max_index_found = 0;
    unsigned long long nodes_explored = 0;
};

// max{s >= 0 : r >= s! - s - 1}; bounds the initial +1 staircase run of any
// nilpotent sequence at r. Error(domain) for r < 2.
unsigned long c_r(const Int& r);

// Length of the initial run of +1 steps of a sequence.
unsigned long staircase_run(const std::vector<Int>& seq);

// Largest index m for which some polynomial is nilpotent at r of index m:
// 2 for r = 0, 3 for |r| = 1, 4 for |r| = 2, |r| for |r| >= 3.
Int m_max_formula(const Int& r);

// Depth-first search over difference chains: each step d_k divides the current
// value, is a multiple of the previous step, avoids revisits, and ascending
// +1 runs from the start are cut beyond c_r (mirrored for negative starts).
// Branches reaching 0 are kept exactly when an integer interpolant exists.
// Error(zero_start) for start = 0 (the index-2 families there form an infinite
// parameterized set; the CLI prints the closed form instead).
EnumerationResult enumerate_nilpotent_sequences(const SearchConfig& cfg);

// Independent check: iterate every u with deg <= deg_max and |coeffs| <= coeff_max
// and collect the associated sequence of each one found nilpotent at r with index
// <= step_cap. Costs (2*coeff_max+1)^(deg_max+1) orbit classifications.
std::set<std::vector<Int>> brute_force_oracle(const Int& r, unsigned deg_max,
                                              unsigned long coeff_max,
                                              unsigned long step_cap);

// All families of the maximal index |r|, |r| >= 4: the sign-staircase family,
// plus one extra family at |r| = 4. Error(domain) for |r| < 4.
std::vector<SequenceFamily> max_index_families(const Int& r);

} // namespace nilpoly
