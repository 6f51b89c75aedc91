#pragma once

#include <string>
#include <vector>

namespace nilpoly {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // empty when passing, or a short summary
};

// Golden-table comparison for the classification lists at r = 1, -1, 2, -2, 3, 4:
// exact sequence-set equality plus, for every listed representative polynomial,
// a direct orbit re-derivation and coset membership modulo the node product.
std::vector<CheckResult> verify_classification(const std::string& goldens_dir);

// Index bound: enumeration at every r with 1 <= |r| <= 8 and headroom |r|+3
// tops out at exactly m_max_formula(r).
std::vector<CheckResult> verify_index_bound();

// Maximal-index family structure: two families at r = +-4, exactly the
// sign-staircase family for 5 <= |r| <= 8.
std::vector<CheckResult> verify_nrr_structure();

// Bounded-orbit classification: the deg <= 3, |coeff| <= 4, |r| <= 6 scan has
// no unclassifiable bounded orbit, and every form witness round-trips.
std::vector<CheckResult> verify_bounded_forms();

// name in {classification, index-bound, nrr-structure, bounded-forms, all};
// Error(unknown_suite) otherwise.
std::vector<CheckResult> run_suite(const std::string& name, const std::string& goldens_dir);

const std::vector<std::string>& known_suites();

} // namespace nilpoly
