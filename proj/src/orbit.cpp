#include "nilpoly/orbit.hpp"

#include <map>
#include <utility>

#include "nilpoly/error.hpp"

namespace nilpoly {

namespace {

// Longest prefix of the closed-form linear orbit worth materializing.
constexpr unsigned long kLinearValuesCap = 4096;

// Tail inequality |a_d| B^d - sum_{i<d} |a_i| B^i - B at integer B >= 1.
// Positive at B implies |u(x)| > |x| for every real |x| >= B (the normalized
// form is nondecreasing in B), so a sign change is crossed exactly once.
Int tail_margin(const IntPoly& u, const Int& b) {
    std::size_t d = *u.degree();
    Int acc = abs_of(u.coeff(d));
    for (std::size_t i = d; i-- > 0;)
        acc = acc * b - abs_of(u.coeff(i));
    return acc - b;
}

bool pointwise_escapes(const IntPoly& u, const Int& x) {
    return abs_of(u.eval(x)) > abs_of(x);
}

void fill_differences(OrbitReport& rep) {
    rep.differences.clear();
    for (std::size_t i = 0; i + 1 < rep.values.size(); ++i)
        rep.differences.push_back(rep.values[i + 1] - rep.values[i]);
}

OrbitReport finish(OrbitReport rep, OrbitStatus status) {
    rep.status = std::move(status);
    fill_differences(rep);
    return rep;
}

} // namespace

std::optional<Int> escape_bound(const IntPoly& u) {
    auto deg = u.degree();
    if (!deg || *deg == 0) return std::nullopt;
    if (*deg == 1 && abs_of(u.leading()) == 1) return std::nullopt;

    // Smallest B with a positive tail margin, by doubling then binary search.
    Int lo = 1, hi = 1;
    while (tail_margin(u, hi) <= 0) {
        lo = hi + 1;
        hi *= 2;
    }
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (tail_margin(u, mid) > 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    Int b = lo;
    // Tighten to the true minimum: stepping down by one stays valid exactly
    // when both new integer points still escape.
    while (b > 1 && pointwise_escapes(u, b - 1) && pointwise_escapes(u, 1 - b))
        --b;
    return b;
}

OrbitReport orbit_classify(const IntPoly& u, const Int& r) {
    OrbitReport rep;
    rep.start = r;
    rep.values.push_back(r);

    if (u.is_zero()) {  // nilpotent at every r with index 1
        rep.values.emplace_back(0);
        return finish(std::move(rep), Nilpotent{1});
    }

    std::size_t deg = *u.degree();
    if (deg == 0) {  // nonzero constant: fixed from the first step
        const Int& c = u.coeff(0);
        if (r == c) return finish(std::move(rep), EventuallyPeriodic{0, {c}});
        rep.values.push_back(c);
        return finish(std::move(rep), EventuallyPeriodic{1, {c}});
    }

    if (deg == 1 && abs_of(u.leading()) == 1) {
        const Int& b = u.coeff(0);
        if (u.leading() == 1) {
            // x + b: arithmetic progression
            if (b == 0) {
                if (r == 0) {  // the identity fixes 0, so 0 is in the orbit
                    rep.values.emplace_back(0);
                    return finish(std::move(rep), Nilpotent{1});
                }
                return finish(std::move(rep), EventuallyPeriodic{0, {r}});
            }
            if (r != 0 && divides(b, r) && sign_of(r) != sign_of(b)) {
                Int index = -(r / b);
                Int v = r;
                for (Int i = 0; i < index && i < kLinearValuesCap; ++i) {
                    v += b;
                    rep.values.push_back(v);
                }
                return finish(std::move(rep), Nilpotent{index});
            }
            return finish(std::move(rep), Divergent{0, 0});
        }
        // -x + b: involution, orbit alternates r, b - r
        Int s = b - r;
        if (s == 0) {  // u(r) = 0
            rep.values.emplace_back(0);
            return finish(std::move(rep), Nilpotent{1});
        }
        if (r == 0) {  // 0 -> b -> 0
            rep.values.push_back(s);
            rep.values.emplace_back(0);
            return finish(std::move(rep), Nilpotent{2});
        }
        if (s == r) return finish(std::move(rep), EventuallyPeriodic{0, {r}});
        rep.values.push_back(s);
        return finish(std::move(rep), EventuallyPeriodic{0, {r, s}});
    }

    // General case: an escape radius exists; the orbit either reaches it,
    // hits 0, or revisits a value inside the disk.
    Int bound = *escape_bound(u);
    std::map<Int, std::size_t> seen;
    seen.emplace(r, 0);
    Int cur = r;
    for (;;) {
        if (cur != 0 && abs_of(cur) >= bound)
            return finish(std::move(rep), Divergent{rep.values.size() - 1, bound});
        Int next = u.eval(cur);
        if (next == 0) {
            rep.values.push_back(next);
            Int index(static_cast<unsigned long>(rep.values.size() - 1));
            return finish(std::move(rep), Nilpotent{index});
        }
        auto it = seen.find(next);
        if (it != seen.end()) {
            std::vector<Int> cycle(rep.values.begin() + static_cast<long>(it->second),
                                   rep.values.end());
            return finish(std::move(rep), EventuallyPeriodic{it->second, std::move(cycle)});
        }
        rep.values.push_back(next);
        seen.emplace(next, rep.values.size() - 1);
        cur = std::move(next);
    }
}

std::optional<Int> nilpotency_index(const IntPoly& u, const Int& r) {
    OrbitReport rep = orbit_classify(u, r);
    if (auto* nil = std::get_if<Nilpotent>(&rep.status)) return nil->index;
    return std::nullopt;
}

std::vector<Int> differences(const IntPoly& u, const Int& r, unsigned long n) {
    std::vector<Int> out;
    out.reserve(n);
    Int cur = r;
    for (unsigned long i = 0; i < n; ++i) {
        Int next = u.eval(cur);
        out.push_back(next - cur);
        cur = std::move(next);
    }
    return out;
}

bool is_recurringly_nilpotent(const IntPoly& u, const Int& r) {
    if (!nilpotency_index(u, r)) return false;
    Int at_zero = u.eval(Int(0));
    return at_zero == 0 || u.eval(at_zero) == 0;
}

} // namespace nilpoly
