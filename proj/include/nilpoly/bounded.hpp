#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "nilpoly/interpolate.hpp"
#include "nilpoly/orbit.hpp"

namespace nilpoly {

/* The seven shapes every bounded integer polynomial sequence takes, keyed by
 * the literal templates (preperiod, cycle):
 *   1: [],            [S]          5: [],        [S, R]
 *   2: [R],           [S]          6: [S+e],     [S, R]   with R - S != e
 *   3: [S+e, S+2e],   [S]          7: [S+2e, S+e], [S, S+3e]
 *   4: [S+2e, S+4e],  [S]
 * R is carried by forms 2, 5, 6 and e (= +1 or -1) by forms 3, 4, 6, 7.
 */
struct BoundedForm {
    int form = 0;  // 1..7
    Int S;
    std::optional<Int> R;
    std::optional<int> eps;
    bool operator==(const BoundedForm&) const = default;
};

/* Eventually periodic integer sequence in minimal form: the cycle has primitive
 * period and the last preperiod entry does not already extend the cycle.
 */
struct EventualOrbit {
    std::vector<Int> preperiod;
    std::vector<Int> cycle;  // nonempty

    void normalize();
    bool is_minimal() const;
    bool operator==(const EventualOrbit&) const = default;
};

// Pure template match against the seven forms; nullopt means no integer
// polynomial generates such a bounded sequence. Error(non_minimal_input) if
// the orbit is not in minimal form.
std::optional<BoundedForm> classify_bounded(const EventualOrbit& o);

// The infinite value pattern of a form, starting from its first element.
// preperiod/cycle of the orbit any generating polynomial produces.
EventualOrbit form_pattern(const BoundedForm& f);

// An integer polynomial whose orbit from the pattern's first element realizes
// exactly the pattern: the integral interpolant of the pattern's functional
// graph (guaranteed to exist for every valid form). Error(invalid_form) when
// the parameters violate the form's constraints.
IntPoly witness_for_form(const BoundedForm& f);

struct Unbounded {
    bool operator==(const Unbounded&) const = default;
};

// A bounded orbit matching none of the seven templates. Producing one would
// mean a bug (or a counterexample to the classification); the scan reports it
// instead of crashing.
struct NoMatchingForm {
    EventualOrbit orbit;
    bool operator==(const NoMatchingForm&) const = default;
};

using OrbitClassification = std::variant<BoundedForm, Unbounded, NoMatchingForm>;

// Classifies the full (infinite) orbit of u at r, continuing through a first
// zero when 0 is periodic and stitching in the orbit of 0 otherwise.
OrbitClassification classify_orbit_of(const IntPoly& u, const Int& r);

struct ScanReport {
    unsigned long long total = 0;
    unsigned long long bounded = 0;
    unsigned long long unbounded = 0;
    std::array<unsigned long long, 7> form_counts{};
    struct Counterexample {
        IntPoly poly;
        Int r;
        EventualOrbit orbit;
    };
    std::vector<Counterexample> counterexamples;
};

// Classifies every orbit of every u with deg <= deg_max, |coeffs| <= coeff_max
// at every r in [r_lo, r_hi]; any bounded orbit that fails to classify lands in
// counterexamples.
ScanReport scan_bounded_orbits(unsigned deg_max, unsigned long coeff_max,
                               const Int& r_lo, const Int& r_hi);

enum class RecurringKind {
    one_zero_tail,    // r_0, ..., r_{m-1}, 0, 0, 0, ...
    alternating_zero  // r_0, ..., r_{m-1}, 0, w, 0, w, ...
};

// Decides whether a recurringly nilpotent pattern is realizable by an integer
// polynomial (the case lists are exhaustive: m <= 2 for the constant-zero tail,
// m <= 3 for the alternating tail) and returns a witness when it is.
// recurring_value supplies the nonzero w of the alternating tail.
// Error(domain) on m/prefix mismatch or a missing/zero recurring value;
// Error(invalid_sequence) on zero prefix entries.
std::optional<IntPoly> recurring_pattern_check(unsigned long m, RecurringKind kind,
                                               const std::vector<Int>& prefix,
                                               const std::optional<Int>& recurring_value);

} // namespace nilpoly
