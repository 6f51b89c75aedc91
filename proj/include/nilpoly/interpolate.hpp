#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "nilpoly/poly.hpp"

namespace nilpoly {

// Finite map node -> value with pairwise-distinct nodes.
struct PointMap {
    std::vector<std::pair<Int, Int>> points;
};

// Unique interpolant of degree <= n-1 through all n points, computed by Newton
// divided differences in exact rationals. Error(duplicate_node) on repeated
// nodes, Error(domain) on an empty map.
RatPoly lagrange(const PointMap& pm);

// Lowest exponent whose coefficient has denominator != 1.
struct NonIntegral {
    std::size_t exponent;
};

// The same polynomial over Z iff every coefficient is integral.
std::variant<IntPoly, NonIntegral> integral_part(const RatPoly& p);

// Exact decision: an integer polynomial through the points exists iff the
// minimal-degree interpolant is integral, in which case it is returned.
std::optional<IntPoly> realizable_by_int_poly(const PointMap& pm);

/* A finite sequence (r_0, ..., r_{m-1}, 0) together with the coset of integer
 * polynomials attached to it: interpolant L of minimal degree mapping each
 * entry to the next, and the canonical monic modulus x * prod_i (x - r_i)
 * (degree m+1, vanishing at every orbit point including 0).
 */
struct SequenceFamily {
    std::vector<Int> sequence;
    IntPoly interpolant;
    IntPoly modulus;

    bool operator==(const SequenceFamily& o) const = default;
};

// Error(invalid_sequence) unless the entries before the final 0 are pairwise
// distinct and nonzero; Error(not_realizable) when no integer polynomial
// realizes the step map.
SequenceFamily family_from_sequence(const std::vector<Int>& seq);

// interpolant + p * modulus; realizes f.sequence for every integer p.
IntPoly family_member(const SequenceFamily& f, const IntPoly& p);

} // namespace nilpoly
