#include "nilpoly/search.hpp"

#include <algorithm>
#include <set>

#include "nilpoly/error.hpp"
#include "nilpoly/orbit.hpp"

namespace nilpoly {

unsigned long c_r(const Int& r) {
    if (r < 2)
        throw Error(Errc::domain, "c_r requires r >= 2");
    unsigned long s = 0;
    Int factorial = 1;
    for (;;) {
        unsigned long next = s + 1;
        factorial *= next;                        // (s+1)!
        if (r < factorial - Int(next) - 1) break; // r < (s+1)! - (s+1) - 1
        s = next;
    }
    return s;
}

unsigned long staircase_run(const std::vector<Int>& seq) {
    unsigned long run = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i + 1] != seq[i] + 1) break;
        ++run;
    }
    return run;
}

Int m_max_formula(const Int& r) {
    Int a = abs_of(r);
    if (a == 0) return 2;
    if (a == 1) return 3;
    if (a == 2) return 4;
    return a;
}

namespace {

struct SearchState {
    unsigned long max_index;
    int stair_dir;          // +1 for start >= 2, -1 for start <= -2, 0 otherwise
    unsigned long stair_cap;
    bool emit_families;
    std::vector<Int> path;  // r_0 .. r_k, all nonzero
    std::set<Int> visited;
    std::vector<Int> point_nodes;  // r_0 .. r_{k-1}: nodes of the step map so far
    std::vector<Rat> newton;       // its Newton coefficients, one per point
    std::vector<std::pair<std::vector<Int>, SequenceFamily>> found;
    unsigned long long nodes = 0;
};

// Newton coefficient of the step map extended by (node -> value). A fractional
// coefficient means no integer polynomial passes through the extended map, and
// since every extension contains this prefix, the whole branch is dead.
std::optional<Rat> extend_newton(const SearchState& st, const Int& node, const Int& value) {
    Rat t(value);
    for (std::size_t j = 0; j < st.newton.size(); ++j) {
        Int gap = node - st.point_nodes[j];
        t = (t - st.newton[j]) / Rat(gap);
    }
    if (!is_integer(t)) return std::nullopt;
    return t;
}

void accept_leaf(SearchState& st) {
    std::vector<Int> seq = st.path;
    seq.emplace_back(0);
    PointMap pm;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        pm.points.emplace_back(seq[i], seq[i + 1]);
    auto interpolant = realizable_by_int_poly(pm);
    if (!interpolant) return;  // exact filter: no integer polynomial takes these steps
    IntPoly modulus;
    if (st.emit_families) {
        modulus = IntPoly::x();
        for (const Int& node : st.path)
            modulus = modulus * IntPoly::from_coeffs({-node, 1});
    }
    st.found.emplace_back(seq, SequenceFamily{seq, *interpolant, modulus});
}

// Steps admissible from cur after a step of d_prev: divisors of cur that are
// multiples of d_prev, i.e. d_prev * e for e dividing cur / d_prev. Enumerating
// e keeps the factored quantity small (|cur / d_prev| grows by at most one per
// level) even when the values themselves double down a long chain.
std::vector<Int> candidate_steps(const Int& cur, const Int& d_prev, bool has_prev) {
    if (!has_prev) return signed_divisors(cur);
    if (!divides(d_prev, cur)) return {};  // d | cur and d_prev | d would force d_prev | cur
    std::vector<Int> steps;
    for (const Int& e : signed_divisors(cur / d_prev)) steps.push_back(d_prev * e);
    return steps;
}

// path holds k+1 entries; d_prev is the step that led here (absent at the root);
// pure_stair says every step so far moved by stair_dir.
void dfs(SearchState& st, const Int& d_prev, bool has_prev, bool pure_stair) {
    ++st.nodes;
    Int cur = st.path.back();  // by value: the path vector reallocates below
    for (const Int& d : candidate_steps(cur, d_prev, has_prev)) {
        Int next = cur + d;
        if (next == 0) {
            if (st.path.size() <= st.max_index && extend_newton(st, cur, 0)) accept_leaf(st);
            continue;
        }
        if (st.path.size() + 1 >= st.max_index + 1) continue;  // no room left to reach 0
        if (st.visited.count(next)) continue;                  // revisits never reach 0
        bool stair_step = st.stair_dir != 0 && d == st.stair_dir;
        bool next_pure = pure_stair && stair_step;
        if (next_pure && st.path.size() > st.stair_cap) continue;  // staircase bound
        auto coef = extend_newton(st, cur, next);
        if (!coef) continue;  // prefix already unrealizable
        st.path.push_back(next);
        st.visited.insert(next);
        st.point_nodes.push_back(cur);
        st.newton.push_back(std::move(*coef));
        dfs(st, d, true, next_pure);
        st.newton.pop_back();
        st.point_nodes.pop_back();
        st.visited.erase(next);
        st.path.pop_back();
    }
}

} // namespace

EnumerationResult enumerate_nilpotent_sequences(const SearchConfig& cfg) {
    if (cfg.start == 0)
        throw Error(Errc::zero_start,
                    "start 0 has an infinite parameterized family; no finite enumeration exists");

    SearchState st;
    st.max_index = cfg.max_index != 0
                       ? cfg.max_index
                       : to_long(m_max_formula(cfg.start)) + 2ul;
    st.emit_families = cfg.emit_families;
    Int a = abs_of(cfg.start);
    if (a >= 2) {
        st.stair_dir = sign_of(cfg.start);
        st.stair_cap = c_r(a);
    } else {
        st.stair_dir = 0;
        st.stair_cap = 0;
    }
    st.path.push_back(cfg.start);
    st.visited.insert(cfg.start);
    dfs(st, 0, false, true);

    std::sort(st.found.begin(), st.found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    EnumerationResult result;
    result.start = cfg.start;
    result.nodes_explored = st.nodes;
    for (auto& [seq, family] : st.found) {
        result.max_index_found =
            std::max(result.max_index_found, static_cast<unsigned long>(seq.size() - 1));
        result.sequences.push_back(seq);
        if (cfg.emit_families) result.families.push_back(std::move(family));
    }
    return result;
}

std::set<std::vector<Int>> brute_force_oracle(const Int& r, unsigned deg_max,
                                              unsigned long coeff_max,
                                              unsigned long step_cap) {
    std::set<std::vector<Int>> sequences;
    long cmax = static_cast<long>(coeff_max);
    std::vector<long> odo(deg_max + 1, -cmax);
    for (;;) {
        std::vector<Int> coeffs(odo.begin(), odo.end());
        IntPoly u = IntPoly::from_coeffs(std::move(coeffs));
        OrbitReport rep = orbit_classify(u, r);
        if (auto* nil = std::get_if<Nilpotent>(&rep.status)) {
            if (nil->index <= step_cap) {
                std::vector<Int> seq = rep.values;
                if (nil->index + 1 != Int(static_cast<unsigned long>(seq.size()))) {
                    // linear closed form capped the recorded prefix; rebuild
                    seq.assign(1, r);
                    Int v = r;
                    while (v != 0) {
                        v = u.eval(v);
                        seq.push_back(v);
                    }
                }
                sequences.insert(std::move(seq));
            }
        }
        std::size_t i = 0;
        while (i < odo.size() && odo[i] == cmax) odo[i++] = -cmax;
        if (i == odo.size()) break;
        ++odo[i];
    }
    return sequences;
}

std::vector<SequenceFamily> max_index_families(const Int& r) {
    Int a = abs_of(r);
    if (a < 4)
        throw Error(Errc::domain, "max_index_families requires |r| >= 4");
    unsigned long target = static_cast<unsigned long>(to_long(a));
    SearchConfig cfg{r, target, true};
    EnumerationResult all = enumerate_nilpotent_sequences(cfg);
    std::vector<SequenceFamily> out;
    for (std::size_t i = 0; i < all.sequences.size(); ++i)
        if (all.sequences[i].size() == target + 1) out.push_back(all.families[i]);
    return out;
}

} // namespace nilpoly
