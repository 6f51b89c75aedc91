#include "nilpoly/bounded.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nilpoly/error.hpp"

namespace nilpoly {

void EventualOrbit::normalize() {
    if (cycle.empty())
        throw Error(Errc::non_minimal_input, "empty cycle");
    // primitive period
    for (std::size_t p = 1; p < cycle.size(); ++p) {
        if (cycle.size() % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < cycle.size() && periodic; ++i)
            periodic = cycle[i] == cycle[i % p];
        if (periodic) {
            cycle.resize(p);
            break;
        }
    }
    // fold preperiod entries that already extend the cycle
    while (!preperiod.empty() && preperiod.back() == cycle.back()) {
        preperiod.pop_back();
        std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
    }
}

bool EventualOrbit::is_minimal() const {
    if (cycle.empty()) return false;
    EventualOrbit copy = *this;
    copy.normalize();
    return copy == *this;
}

std::optional<BoundedForm> classify_bounded(const EventualOrbit& o) {
    if (!o.is_minimal())
        throw Error(Errc::non_minimal_input, "orbit is not in minimal preperiod/cycle form");

    const auto& pre = o.preperiod;
    if (o.cycle.size() == 1) {
        const Int& s = o.cycle[0];
        if (pre.empty()) return BoundedForm{1, s, std::nullopt, std::nullopt};
        if (pre.size() == 1) return BoundedForm{2, s, pre[0], std::nullopt};
        if (pre.size() == 2) {
            Int step = pre[0] - s;
            if (abs_of(step) == 1 && pre[1] == s + 2 * step)
                return BoundedForm{3, s, std::nullopt, static_cast<int>(step.get_si())};
            if (abs_of(step) == 2 && pre[1] == s + 2 * step) {
                int e = step > 0 ? 1 : -1;
                return BoundedForm{4, s, std::nullopt, e};
            }
        }
        return std::nullopt;
    }
    if (o.cycle.size() == 2) {
        const Int& s = o.cycle[0];
        const Int& t = o.cycle[1];
        if (pre.empty()) return BoundedForm{5, s, t, std::nullopt};
        if (pre.size() == 1) {
            Int step = pre[0] - s;
            if (abs_of(step) == 1 && t - s != step)
                return BoundedForm{6, s, t, static_cast<int>(step.get_si())};
            return std::nullopt;
        }
        if (pre.size() == 2) {
            Int jump = t - s;
            if (abs_of(jump) == 3) {
                int e = jump > 0 ? 1 : -1;
                if (pre[0] == s + 2 * e && pre[1] == s + e)
                    return BoundedForm{7, s, std::nullopt, e};
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(Errc::invalid_form, what);
}

void validate_form(const BoundedForm& f) {
    require(f.form >= 1 && f.form <= 7, "form tag must be 1..7");
    bool wants_r = f.form == 2 || f.form == 5 || f.form == 6;
    bool wants_eps = f.form == 3 || f.form == 4 || f.form == 6 || f.form == 7;
    require(f.R.has_value() == wants_r, "R is carried by forms 2, 5, 6 only");
    require(f.eps.has_value() == wants_eps, "eps is carried by forms 3, 4, 6, 7 only");
    if (wants_eps) require(*f.eps == 1 || *f.eps == -1, "eps must be +1 or -1");
    if (wants_r) require(*f.R != f.S, "R must differ from S");
    if (f.form == 6) require(*f.R - f.S != *f.eps, "form 6 requires R - S != eps");
}

} // namespace

EventualOrbit form_pattern(const BoundedForm& f) {
    validate_form(f);
    const Int& s = f.S;
    Int e = f.eps ? *f.eps : 0;
    switch (f.form) {
        case 1: return {{}, {s}};
        case 2: return {{*f.R}, {s}};
        case 3: return {{s + e, s + 2 * e}, {s}};
        case 4: return {{s + 2 * e, s + 4 * e}, {s}};
        case 5: return {{}, {s, *f.R}};
        case 6: return {{s + e}, {s, *f.R}};
        case 7: return {{s + 2 * e, s + e}, {s, s + 3 * e}};
    }
    throw Error(Errc::invalid_form, "form tag must be 1..7");
}

IntPoly witness_for_form(const BoundedForm& f) {
    EventualOrbit pattern = form_pattern(f);
    // successor map of the pattern's finitely many values
    std::vector<Int> values = pattern.preperiod;
    values.insert(values.end(), pattern.cycle.begin(), pattern.cycle.end());
    PointMap pm;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Int& succ = i + 1 < values.size() ? values[i + 1] : pattern.cycle.front();
        pm.points.emplace_back(values[i], succ);
    }
    auto witness = realizable_by_int_poly(pm);
    if (!witness)
        throw std::logic_error("bounded-form pattern has no integral interpolant");
    return *witness;
}

OrbitClassification classify_orbit_of(const IntPoly& u, const Int& r) {
    OrbitReport rep = orbit_classify(u, r);
    if (std::holds_alternative<Divergent>(rep.status)) return Unbounded{};

    EventualOrbit orbit;
    if (auto* per = std::get_if<EventuallyPeriodic>(&rep.status)) {
        orbit.preperiod.assign(rep.values.begin(),
                               rep.values.begin() + static_cast<long>(per->preperiod));
        orbit.cycle = per->cycle;
    } else {
        // Nilpotent: the recorded orbit stops at the first 0, the real one
        // continues with the orbit of 0.
        OrbitReport zero_rep = orbit_classify(u, Int(0));
        if (std::holds_alternative<Divergent>(zero_rep.status)) return Unbounded{};
        auto prefix_of = [](const OrbitReport& report, std::size_t count) {
            return std::vector<Int>(report.values.begin(),
                                    report.values.begin() + static_cast<long>(count));
        };
        std::size_t steps = rep.values.size() - 1;  // index; values are complete here
        orbit.preperiod = prefix_of(rep, steps);
        if (auto* znil = std::get_if<Nilpotent>(&zero_rep.status)) {
            // 0 is periodic with period znil->index (1 or 2)
            std::size_t period = static_cast<std::size_t>(to_long(znil->index));
            orbit.cycle = prefix_of(zero_rep, period);
        } else {
            auto& zper = std::get<EventuallyPeriodic>(zero_rep.status);
            auto tail = prefix_of(zero_rep, zper.preperiod);
            orbit.preperiod.insert(orbit.preperiod.end(), tail.begin(), tail.end());
            orbit.cycle = zper.cycle;
        }
    }
    orbit.normalize();
    if (auto form = classify_bounded(orbit)) return *form;
    return NoMatchingForm{std::move(orbit)};
}

ScanReport scan_bounded_orbits(unsigned deg_max, unsigned long coeff_max,
                               const Int& r_lo, const Int& r_hi) {
    ScanReport report;
    long cmax = static_cast<long>(coeff_max);
    std::vector<long> odo(deg_max + 1, -cmax);
    for (;;) {
        std::vector<Int> coeffs(odo.begin(), odo.end());
        IntPoly u = IntPoly::from_coeffs(std::move(coeffs));
        for (Int r = r_lo; r <= r_hi; ++r) {
            ++report.total;
            OrbitClassification cls = classify_orbit_of(u, r);
            if (std::holds_alternative<Unbounded>(cls)) {
                ++report.unbounded;
            } else if (auto* form = std::get_if<BoundedForm>(&cls)) {
                ++report.bounded;
                ++report.form_counts[static_cast<std::size_t>(form->form - 1)];
            } else {
                ++report.bounded;
                report.counterexamples.push_back(
                    {u, r, std::get<NoMatchingForm>(cls).orbit});
            }
        }
        std::size_t i = 0;
        while (i < odo.size() && odo[i] == cmax) odo[i++] = -cmax;
        if (i == odo.size()) break;
        ++odo[i];
    }
    return report;
}

std::optional<IntPoly> recurring_pattern_check(unsigned long m, RecurringKind kind,
                                               const std::vector<Int>& prefix,
                                               const std::optional<Int>& recurring_value) {
    if (prefix.size() != m)
        throw Error(Errc::domain, "prefix length does not match m");
    for (const Int& entry : prefix)
        if (entry == 0)
            throw Error(Errc::invalid_sequence, "prefix entries must be nonzero");

    auto realize = [&](const std::vector<std::pair<Int, Int>>& steps) -> std::optional<IntPoly> {
        std::map<Int, Int> graph;
        for (const auto& [from, to] : steps) {
            auto [it, inserted] = graph.emplace(from, to);
            if (!inserted && it->second != to) return std::nullopt;  // contradictory pattern
        }
        PointMap pm;
        for (const auto& [from, to] : graph) pm.points.emplace_back(from, to);
        auto witness = realizable_by_int_poly(pm);
        if (!witness)
            throw std::logic_error("realizable recurring pattern has no integral interpolant");
        return witness;
    };

    if (kind == RecurringKind::one_zero_tail) {
        // r_0, ..., r_{m-1}, 0, 0, ...: possible only for m <= 2, and at m = 2
        // only when r_0 | 2 and r_1 = 2 r_0.
        if (m == 0) return realize({{0, 0}});
        if (m == 1) return realize({{prefix[0], 0}, {0, 0}});
        if (m == 2) {
            if (!divides(prefix[0], 2) || prefix[1] != 2 * prefix[0]) return std::nullopt;
            return realize({{prefix[0], prefix[1]}, {prefix[1], 0}, {0, 0}});
        }
        return std::nullopt;
    }

    // alternating-zero: r_0, ..., r_{m-1}, 0, w, 0, w, ...
    if (!recurring_value || *recurring_value == 0)
        throw Error(Errc::domain, "alternating-zero patterns need a nonzero recurring value");
    const Int& w = *recurring_value;
    auto tail = [&](std::vector<std::pair<Int, Int>> steps) {
        steps.emplace_back(0, w);
        steps.emplace_back(w, 0);
        return steps;
    };
    if (m == 0) return realize(tail({}));
    if (m == 1) {
        if (prefix[0] != w && abs_of(prefix[0]) != 1) return std::nullopt;
        return realize(tail({{prefix[0], 0}}));
    }
    if (m == 2) {
        const Int& r0 = prefix[0];
        const Int& r1 = prefix[1];
        bool drift = (w == r1) && abs_of(r1 - r0) == 1;                     // r_3 = r_1 = r_0 + e
        bool spike = abs_of(r1) == 1 && r0 == 2 * r1 && w == 3 * r1;        // r_0 = 2e, r_1 = e, r_3 = 3e
        if (!drift && !spike) return std::nullopt;
        return realize(tail({{r0, r1}, {r1, 0}}));
    }
    if (m == 3) {
        const Int& e = prefix[0];
        if (abs_of(e) != 1 || prefix[1] != 2 * e || prefix[2] != 3 * e || w != 3 * e)
            return std::nullopt;
        return realize(tail({{prefix[0], prefix[1]}, {prefix[1], prefix[2]}, {prefix[2], 0}}));
    }
    return std::nullopt;
}

} // namespace nilpoly
