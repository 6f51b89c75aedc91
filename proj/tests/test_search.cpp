#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilpoly/error.hpp"
#include "nilpoly/orbit.hpp"
#include "nilpoly/search.hpp"

using namespace nilpoly;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<std::vector<Int>> sorted(std::vector<std::vector<Int>> seqs) {
    std::sort(seqs.begin(), seqs.end());
    return seqs;
}

std::vector<std::vector<Int>> negated(const std::vector<std::vector<Int>>& seqs) {
    std::vector<std::vector<Int>> out;
    for (const auto& seq : seqs) {
        std::vector<Int> neg;
        for (const Int& v : seq) neg.push_back(-v);
        out.push_back(neg);
    }
    return sorted(out);
}

} // namespace

TEST_CASE("c_r") {
    CHECK(c_r(2) == 3);
    CHECK(c_r(5) == 3);
    CHECK(c_r(19) == 4);
    CHECK(c_r(18) == 3);
    CHECK(c_r(113) == 4);
    CHECK(c_r(114) == 5);  // 5! - 5 - 1
    CHECK(c_r(713) == 6);  // 6! - 6 - 1
    CHECK_THROWS_AS(c_r(1), Error);
    CHECK_THROWS_AS(c_r(0), Error);
}

TEST_CASE("staircase_run") {
    CHECK(staircase_run(ints({2, 3, 4, 5, 0})) == 3);
    CHECK(staircase_run(ints({5, 0})) == 0);
    CHECK(staircase_run(ints({3, 4, 5, 0})) == 2);
    CHECK(staircase_run(ints({7})) == 0);
}

TEST_CASE("m_max_formula") {
    CHECK(m_max_formula(0) == 2);
    CHECK(m_max_formula(1) == 3);
    CHECK(m_max_formula(-1) == 3);
    CHECK(m_max_formula(-2) == 4);
    CHECK(m_max_formula(7) == 7);
    CHECK(m_max_formula(-9) == 9);
}

TEST_CASE("enumerate: complete lists at small starts") {
    EnumerationResult at2 = enumerate_nilpotent_sequences({2, 6, false});
    CHECK(at2.sequences ==
          sorted({ints({2, 0}), ints({2, 1, 0}), ints({2, 3, 0}), ints({2, 4, 0}),
                  ints({2, 4, 6, 0}), ints({2, 3, 4, 5, 0})}));
    CHECK(at2.max_index_found == 4);

    EnumerationResult at3 = enumerate_nilpotent_sequences({3, 6, false});
    CHECK(at3.sequences ==
          sorted({ints({3, 0}), ints({3, 2, 0}), ints({3, 6, 0}), ints({3, 4, 0}),
                  ints({3, 2, 1, 0}), ints({3, 4, 2, 0}), ints({3, 4, 5, 0}),
                  ints({3, 2, 4, 0})}));

    EnumerationResult at1 = enumerate_nilpotent_sequences({1, 6, false});
    CHECK(at1.sequences == sorted({ints({1, 0}), ints({1, 2, 0}), ints({1, 2, 3, 0})}));
}

TEST_CASE("enumerate: default depth comes from the index-bound formula") {
    EnumerationResult r = enumerate_nilpotent_sequences({2, 0, false});
    CHECK(r.max_index_found == 4);  // headroom above the formula finds nothing longer
    CHECK(r.sequences.size() == 6);
}

TEST_CASE("enumerate: deterministic and sorted") {
    EnumerationResult a = enumerate_nilpotent_sequences({4, 7, true});
    EnumerationResult b = enumerate_nilpotent_sequences({4, 7, true});
    CHECK(a.sequences == b.sequences);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(std::is_sorted(a.sequences.begin(), a.sequences.end()));
    REQUIRE(a.families.size() == a.sequences.size());
    for (std::size_t i = 0; i < a.sequences.size(); ++i)
        CHECK(a.families[i].sequence == a.sequences[i]);
}

TEST_CASE("enumerate: depth one finds only the direct drop") {
    EnumerationResult res = enumerate_nilpotent_sequences({7, 1, true});
    REQUIRE(res.sequences.size() == 1);
    CHECK(res.sequences[0] == ints({7, 0}));
    CHECK(res.families[0].interpolant == IntPoly());
    CHECK(res.families[0].modulus == IntPoly::x() * parse_poly("x-7"));
    CHECK(res.max_index_found == 1);
}

TEST_CASE("enumerate: rejects start 0") {
    CHECK_THROWS_AS(enumerate_nilpotent_sequences({0, 4, false}), Error);
    try {
        enumerate_nilpotent_sequences({0, 4, false});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::zero_start);
    }
}

TEST_CASE("enumerate: every sequence obeys the staircase bound") {
    for (long r = 2; r <= 8; ++r) {
        unsigned long cap = c_r(r);
        EnumerationResult res = enumerate_nilpotent_sequences({r, 0, false});
        for (const auto& seq : res.sequences) CHECK(staircase_run(seq) <= cap);
        // mirrored: negated sequences at -r obey the same cap
        EnumerationResult neg = enumerate_nilpotent_sequences({-r, 0, false});
        for (const auto& seq : neg.sequences) {
            std::vector<Int> mirrored;
            for (const Int& v : seq) mirrored.push_back(-v);
            CHECK(staircase_run(mirrored) <= cap);
        }
    }
}

TEST_CASE("enumerate: reflection symmetry of sequence sets") {
    for (long r = 1; r <= 8; ++r) {
        EnumerationResult pos = enumerate_nilpotent_sequences({r, 0, false});
        EnumerationResult neg = enumerate_nilpotent_sequences({-r, 0, false});
        CHECK(neg.sequences == negated(pos.sequences));
    }
}

TEST_CASE("enumerate: soundness of emitted families") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    for (long r : {2L, -3L, 5L}) {
        EnumerationResult res = enumerate_nilpotent_sequences({r, 0, true});
        for (std::size_t i = 0; i < res.sequences.size(); ++i) {
            for (int round = 0; round < 3; ++round) {
                std::vector<Int> pc;
                int d = deg(rng);
                for (int j = 0; j <= d; ++j) pc.emplace_back(coeff(rng));
                IntPoly member = family_member(res.families[i], IntPoly::from_coeffs(pc));
                CHECK(nilpotency_index(member, r) ==
                      Int(static_cast<unsigned long>(res.sequences[i].size() - 1)));
            }
        }
    }
}

TEST_CASE("the staircase-bound example family lands in the enumeration") {
    // (x + 1) - (x - 2)(x - 3)(x - 4) has the longest possible +1 run at 2
    IntPoly u = parse_poly("x+1") -
                parse_poly("x-2") * parse_poly("x-3") * parse_poly("x-4");
    CHECK(u == parse_poly("-x^3+9x^2-25x+25"));
    CHECK(nilpotency_index(u, 2) == Int(4));
    EnumerationResult at2 = enumerate_nilpotent_sequences({2, 0, false});
    CHECK(std::count(at2.sequences.begin(), at2.sequences.end(), ints({2, 3, 4, 5, 0})) == 1);
}

TEST_CASE("brute_force_oracle: examples") {
    auto at1 = brute_force_oracle(1, 1, 4, 16);
    CHECK(at1.count(ints({1, 0})) == 1);
    CHECK(at1.count(ints({1, 2, 0})) == 1);

    auto constants = brute_force_oracle(5, 0, 3, 16);
    // the box contains the zero polynomial, nilpotent everywhere with index 1
    CHECK(constants == std::set<std::vector<Int>>{ints({5, 0})});

    auto at2 = brute_force_oracle(2, 3, 25, 64);
    CHECK(at2.count(ints({2, 3, 4, 5, 0})) == 1);
}

TEST_CASE("oracle containment in the enumerator") {
    for (long r : {1L, -1L, 2L, -2L, 3L, -3L}) {
        auto oracle = brute_force_oracle(r, 2, 6, 32);
        EnumerationResult res = enumerate_nilpotent_sequences({r, 0, false});
        for (const auto& seq : oracle) {
            CAPTURE(r);
            CHECK(std::count(res.sequences.begin(), res.sequences.end(), seq) == 1);
        }
    }
}

TEST_CASE("enumerate: stays cheap when chains double the values") {
    // the step chain forces factoring only cur/d_prev, which stays small even
    // when the orbit values themselves grow geometrically down a branch
    EnumerationResult far = enumerate_nilpotent_sequences({100, 103, false});
    CHECK(far.max_index_found == 100);  // the descending staircase, and nothing longer
    std::vector<Int> staircase;
    for (long v = 100; v >= 0; --v) staircase.emplace_back(v);
    CHECK(std::count(far.sequences.begin(), far.sequences.end(), staircase) == 1);
    for (const auto& seq : far.sequences) CHECK(seq.size() <= 101);
}

TEST_CASE("max_index_families") {
    auto at4 = max_index_families(4);
    REQUIRE(at4.size() == 2);
    CHECK(at4[0].sequence == ints({4, 3, 2, 1, 0}));
    CHECK(at4[1].sequence == ints({4, 5, 6, 3, 0}));
    CHECK(at4[0].interpolant == parse_poly("x-1"));
    CHECK(at4[1].interpolant == parse_poly("-2x^2+19x-39"));

    auto at5 = max_index_families(5);
    REQUIRE(at5.size() == 1);
    CHECK(at5[0].sequence == ints({5, 4, 3, 2, 1, 0}));
    CHECK(at5[0].interpolant == parse_poly("x-1"));

    auto atm5 = max_index_families(-5);
    REQUIRE(atm5.size() == 1);
    CHECK(atm5[0].sequence == ints({-5, -4, -3, -2, -1, 0}));
    CHECK(atm5[0].interpolant == parse_poly("x+1"));

    CHECK_THROWS_AS(max_index_families(3), Error);
    CHECK_THROWS_AS(max_index_families(-2), Error);
}
