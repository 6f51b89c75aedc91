#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "nilpoly/poly.hpp"

namespace nilpoly {

struct Nilpotent {
    Int index;  // least n >= 1 with u^(n)(r) = 0
    bool operator==(const Nilpotent&) const = default;
};

struct EventuallyPeriodic {
    std::size_t preperiod;   // values[preperiod..] repeat with the cycle below
    std::vector<Int> cycle;  // nonempty; never contains 0
    bool operator==(const EventuallyPeriodic&) const = default;
};

struct Divergent {
    std::size_t escape_step;  // index into values where divergence was certified
    Int bound;                // escape radius used; 0 for the linear closed-form certificate
    bool operator==(const Divergent&) const = default;
};

using OrbitStatus = std::variant<Nilpotent, EventuallyPeriodic, Divergent>;

/* Full record of iterating u at r. values is the prefix of the orbit actually
 * computed (values[0] = r, values[i+1] = u(values[i])); differences[i] =
 * values[i+1] - values[i]. Nilpotent orbits record through the first 0, except
 * that closed-form linear orbits with index > 4096 keep only a short prefix --
 * the status always carries the exact index.
 */
struct OrbitReport {
    Int start;
    std::vector<Int> values;
    std::vector<Int> differences;
    OrbitStatus status;
};

// Smallest B >= 1 with |u(x)| > |x| for every integer |x| >= B; once an orbit
// value reaches the radius its absolute value grows forever, so 0 is out of
// reach. nullopt for deg <= 0 and for linear u with |leading| = 1 (no such
// radius exists; orbit_classify decides those analytically).
std::optional<Int> escape_bound(const IntPoly& u);

// Total decision of the fate of the orbit of u at r.
OrbitReport orbit_classify(const IntPoly& u, const Int& r);

std::optional<Int> nilpotency_index(const IntPoly& u, const Int& r);

// [u_0(r), ..., u_{n-1}(r)] where u_i(r) = u^(i+1)(r) - u^(i)(r).
std::vector<Int> differences(const IntPoly& u, const Int& r, unsigned long n);

// True iff the orbit hits 0 and 0 is a periodic point (u(0) = 0 or u(u(0)) = 0),
// i.e. the orbit keeps returning to 0 forever.
bool is_recurringly_nilpotent(const IntPoly& u, const Int& r);

} // namespace nilpoly
