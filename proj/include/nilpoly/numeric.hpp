#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nilpoly {

using Int = mpz_class;  // arbitrary-precision integer
using Rat = mpq_class;  // exact rational; canonical form is reduced with positive denominator

// Strict decimal integer: optional leading '-', then digits. Throws Error(syntax).
Int int_from_string(std::string_view text);

std::string to_string(const Int& n);

inline int sign_of(const Int& n) { return sgn(n); }
inline Int abs_of(const Int& n) { return abs(n); }

// d | n (d must be nonzero).
bool divides(const Int& d, const Int& n);

bool fits_long(const Int& n);
long to_long(const Int& n);  // Error(domain) when out of range

// Reduced rational num/den with den > 0. Error(domain) on den == 0.
Rat make_rat(const Int& num, const Int& den);
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Prime divisors of |n| in ascending order; empty for n = ±1. Error(zero_argument) on 0.
std::vector<Int> prime_support(const Int& n);

// All d != 0 with d | n, sorted ascending: -|n|,...,-1,1,...,|n|. Error(zero_argument) on 0.
std::vector<Int> signed_divisors(const Int& n);

} // namespace nilpoly
