#include "nilpoly/verify.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nilpoly/bounded.hpp"
#include "nilpoly/error.hpp"
#include "nilpoly/orbit.hpp"
#include "nilpoly/search.hpp"

namespace nilpoly {

namespace {

std::string join_sequences(const std::vector<std::vector<Int>>& seqs) {
    std::ostringstream out;
    for (const auto& seq : seqs) {
        out << " {";
        for (std::size_t i = 0; i < seq.size(); ++i)
            out << (i ? "," : "") << to_string(seq[i]);
        out << "}";
    }
    return out.str();
}

// Remainder of num modulo a monic divisor is zero?
bool divisible_by_monic(const IntPoly& num, const IntPoly& div) {
    std::vector<Int> rem = num.coeffs();
    std::size_t dd = *div.degree();
    while (rem.size() > dd) {
        Int lead = rem.back();
        std::size_t shift = rem.size() - 1 - dd;
        if (lead != 0)
            for (std::size_t i = 0; i <= dd; ++i)
                rem[shift + i] -= lead * div.coeff(i);
        rem.pop_back();
    }
    return std::all_of(rem.begin(), rem.end(), [](const Int& c) { return c == 0; });
}

nlohmann::json load_golden(const std::string& goldens_dir, const std::string& file) {
    std::ifstream in(goldens_dir + "/" + file);
    if (!in)
        throw Error(Errc::domain, "cannot open golden table " + goldens_dir + "/" + file);
    nlohmann::json j;
    in >> j;
    return j;
}

std::vector<Int> json_sequence(const nlohmann::json& arr) {
    std::vector<Int> seq;
    for (const auto& v : arr) seq.emplace_back(static_cast<long>(v.get<std::int64_t>()));
    return seq;
}

} // namespace

std::vector<CheckResult> verify_classification(const std::string& goldens_dir) {
    std::vector<CheckResult> results;
    for (const char* file : {"n1.json", "n-1.json", "n2.json", "n-2.json", "n3.json", "n4.json"}) {
        nlohmann::json golden = load_golden(goldens_dir, file);
        Int start(static_cast<long>(golden["start"].get<std::int64_t>()));

        std::vector<std::vector<Int>> expected;
        for (const auto& s : golden["sequences"]) expected.push_back(json_sequence(s));
        std::sort(expected.begin(), expected.end());

        EnumerationResult found =
            enumerate_nilpotent_sequences({start, 0, /*emit_families=*/true});

        std::string label = "classification r=" + to_string(start);
        if (found.sequences != expected) {
            results.push_back({label, false,
                               "expected" + join_sequences(expected) + " got" +
                                   join_sequences(found.sequences)});
            continue;
        }
        results.push_back({label + " (" + std::to_string(expected.size()) + " sequences)", true, ""});

        // Representatives: re-derive the orbit and check coset membership
        // modulo the node product (the ideal that fixes the interpolation data).
        bool reps_ok = true;
        std::string rep_detail;
        for (const auto& rep : golden["representatives"]) {
            std::vector<Int> seq = json_sequence(rep["sequence"]);
            IntPoly poly = parse_poly(rep["poly"].get<std::string>());

            OrbitReport orbit = orbit_classify(poly, seq.front());
            bool orbit_ok = std::holds_alternative<Nilpotent>(orbit.status) &&
                            orbit.values == seq;

            auto it = std::find(found.sequences.begin(), found.sequences.end(), seq);
            bool member = false;
            if (it != found.sequences.end()) {
                const SequenceFamily& family =
                    found.families[static_cast<std::size_t>(it - found.sequences.begin())];
                IntPoly node_product = IntPoly::constant(1);
                for (std::size_t i = 0; i + 1 < seq.size(); ++i)
                    node_product = node_product * IntPoly::from_coeffs({-seq[i], 1});
                member = divisible_by_monic(poly - family.interpolant, node_product);
            }
            if (!orbit_ok || !member) {
                reps_ok = false;
                rep_detail += " " + rep["poly"].get<std::string>() +
                              (orbit_ok ? "" : " [orbit mismatch]") +
                              (member ? "" : " [not in coset]");
            }
        }
        results.push_back({label + " representatives", reps_ok, rep_detail});
    }
    return results;
}

std::vector<CheckResult> verify_index_bound() {
    std::vector<CheckResult> results;
    for (long a = 1; a <= 8; ++a) {
        for (long r : {a, -a}) {
            Int start(r);
            unsigned long headroom = static_cast<unsigned long>(a) + 3;
            EnumerationResult found = enumerate_nilpotent_sequences({start, headroom, false});
            unsigned long expected = static_cast<unsigned long>(to_long(m_max_formula(start)));
            std::size_t longest = 0;
            for (const auto& seq : found.sequences) longest = std::max(longest, seq.size());
            bool ok = found.max_index_found == expected && longest == expected + 1;
            std::ostringstream detail;
            if (!ok)
                detail << "max index " << found.max_index_found << ", expected " << expected;
            results.push_back({"index bound r=" + to_string(start) + " (max index " +
                                   std::to_string(expected) + ")",
                               ok, detail.str()});
        }
    }
    return results;
}

std::vector<CheckResult> verify_nrr_structure() {
    std::vector<CheckResult> results;
    for (long a = 4; a <= 8; ++a) {
        for (long r : {a, -a}) {
            Int start(r);
            int eps = r > 0 ? 1 : -1;
            std::vector<SequenceFamily> families = max_index_families(start);

            std::vector<std::vector<Int>> expected_sequences;
            std::vector<Int> staircase;
            for (long v = r; v != 0; v -= eps) staircase.emplace_back(v);
            staircase.emplace_back(0);
            expected_sequences.push_back(staircase);
            if (a == 4) {
                std::vector<Int> extra;  // mirror of 4,5,6,3,0
                for (long v : {4, 5, 6, 3, 0}) extra.emplace_back(v * eps);
                expected_sequences.push_back(extra);
            }
            std::sort(expected_sequences.begin(), expected_sequences.end());

            std::vector<std::vector<Int>> got;
            for (const auto& f : families) got.push_back(f.sequence);
            std::sort(got.begin(), got.end());

            IntPoly stair_interpolant = IntPoly::from_coeffs({Int(-eps), Int(1)});  // x - eps
            bool interpolant_ok = false;
            for (const auto& f : families)
                if (f.sequence == staircase) interpolant_ok = f.interpolant == stair_interpolant;

            bool ok = got == expected_sequences && interpolant_ok;
            results.push_back({"max-index families r=" + to_string(start) + " (" +
                                   std::to_string(expected_sequences.size()) + " expected)",
                               ok,
                               ok ? "" : "got" + join_sequences(got)});
        }
    }
    return results;
}

std::vector<CheckResult> verify_bounded_forms() {
    std::vector<CheckResult> results;

    ScanReport scan = scan_bounded_orbits(3, 4, -6, 6);
    {
        std::ostringstream detail;
        detail << scan.total << " orbits, " << scan.bounded << " bounded, "
               << scan.counterexamples.size() << " unclassified";
        results.push_back({"bounded-orbit scan deg<=3 |coeff|<=4 |r|<=6",
                           scan.counterexamples.empty(), detail.str()});
    }

    std::mt19937_64 rng(20240517);
    auto draw = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    unsigned failures = 0;
    unsigned trials = 0;
    for (int form = 1; form <= 7; ++form) {
        for (int round = 0; round < 20; ++round) {
            BoundedForm f;
            f.form = form;
            f.S = draw(-10, 10);
            int eps = draw(0, 1) ? 1 : -1;
            if (form == 3 || form == 4 || form == 6 || form == 7) f.eps = eps;
            if (form == 2 || form == 5 || form == 6) {
                Int r;
                do {
                    r = draw(-10, 10);
                } while (r == f.S || (form == 6 && r - f.S == eps));
                f.R = r;
            }
            ++trials;
            IntPoly witness = witness_for_form(f);
            EventualOrbit pattern = form_pattern(f);
            Int first = pattern.preperiod.empty() ? pattern.cycle.front()
                                                  : pattern.preperiod.front();
            OrbitClassification cls = classify_orbit_of(witness, first);
            const auto* back = std::get_if<BoundedForm>(&cls);
            if (!back || !(*back == f)) ++failures;
        }
    }
    results.push_back({"witness round trip (" + std::to_string(trials) + " parameterizations)",
                       failures == 0,
                       failures ? std::to_string(failures) + " mismatches" : ""});
    return results;
}

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = {
        "classification", "index-bound", "nrr-structure", "bounded-forms", "all"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const std::string& goldens_dir) {
    if (name == "classification") return verify_classification(goldens_dir);
    if (name == "index-bound") return verify_index_bound();
    if (name == "nrr-structure") return verify_nrr_structure();
    if (name == "bounded-forms") return verify_bounded_forms();
    if (name == "all") {
        std::vector<CheckResult> all;
        for (const char* sub : {"classification", "index-bound", "nrr-structure", "bounded-forms"}) {
            auto part = run_suite(sub, goldens_dir);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    std::string known;
    for (const auto& s : known_suites()) known += (known.empty() ? "" : ", ") + s;
    throw Error(Errc::unknown_suite, "unknown suite '" + name + "' (known: " + known + ")");
}

} // namespace nilpoly
