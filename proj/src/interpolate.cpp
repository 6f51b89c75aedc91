#include "nilpoly/interpolate.hpp"

#include <set>

#include "nilpoly/error.hpp"

namespace nilpoly {

RatPoly lagrange(const PointMap& pm) {
    const auto& pts = pm.points;
    if (pts.empty())
        throw Error(Errc::domain, "empty point map");
    std::set<Int> nodes;
    for (const auto& [node, value] : pts)
        if (!nodes.insert(node).second)
            throw Error(Errc::duplicate_node, "repeated node " + to_string(node));

    // Divided differences: after pass j, table[i] = f[x_{i-j}..x_i].
    std::size_t n = pts.size();
    std::vector<Rat> table;
    table.reserve(n);
    for (const auto& [node, value] : pts) table.emplace_back(value);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            Int span = pts[i].first - pts[i - j].first;
            table[i] = (table[i] - table[i - 1]) / Rat(span);
        }

    // Newton form: sum_k table[k] * prod_{j<k} (x - x_j).
    RatPoly result;
    IntPoly basis = IntPoly::constant(1);
    for (std::size_t k = 0; k < n; ++k) {
        result.add_scaled(basis, table[k]);
        if (k + 1 < n)
            basis = basis * IntPoly::from_coeffs({-pts[k].first, 1});
    }
    return result;
}

std::variant<IntPoly, NonIntegral> integral_part(const RatPoly& p) {
    std::vector<Int> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rat& c = p.coeffs()[i];
        if (!is_integer(c)) return NonIntegral{i};
        coeffs.push_back(c.get_num());
    }
    return IntPoly::from_coeffs(std::move(coeffs));
}

std::optional<IntPoly> realizable_by_int_poly(const PointMap& pm) {
    auto result = integral_part(lagrange(pm));
    if (auto* poly = std::get_if<IntPoly>(&result)) return *poly;
    return std::nullopt;
}

SequenceFamily family_from_sequence(const std::vector<Int>& seq) {
    if (seq.size() < 2 || seq.back() != 0)
        throw Error(Errc::invalid_sequence, "sequence must end in 0 and have at least one step");
    std::set<Int> seen;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i] == 0)
            throw Error(Errc::invalid_sequence, "zero entry before the end of the sequence");
        if (!seen.insert(seq[i]).second)
            throw Error(Errc::invalid_sequence, "repeated entry " + to_string(seq[i]));
    }

    PointMap pm;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        pm.points.emplace_back(seq[i], seq[i + 1]);
    auto interpolant = realizable_by_int_poly(pm);
    if (!interpolant)
        throw Error(Errc::not_realizable, "no integer polynomial realizes the sequence");

    IntPoly modulus = IntPoly::x();  // root at 0
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        modulus = modulus * IntPoly::from_coeffs({-seq[i], 1});

    return SequenceFamily{seq, *interpolant, modulus};
}

IntPoly family_member(const SequenceFamily& f, const IntPoly& p) {
    return f.interpolant + p * f.modulus;
}

} // namespace nilpoly
