#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilpoly/numeric.hpp"

namespace nilpoly {

/* Dense integer polynomial, coefficients ascending by exponent.
 * Canonical form: the highest-index coefficient is nonzero; the zero
 * polynomial is the empty list and has no degree. Values are immutable
 * after construction, so sharing across threads is safe.
 */
class IntPoly {
public:
    IntPoly() = default;  // zero polynomial

    static IntPoly from_coeffs(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, std::size_t exponent);
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(std::size_t i) const;   // 0 beyond the stored range
    const Int& leading() const;              // Error(domain) on the zero polynomial

    Int eval(const Int& x) const;            // Horner

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& c) const;
    bool operator==(const IntPoly& o) const = default;

private:
    std::vector<Int> coeffs_;
};

/* Rational-coefficient polynomial in the same canonical shape; every
 * coefficient is reduced with positive denominator (mpq canonical form).
 */
class RatPoly {
public:
    RatPoly() = default;

    static RatPoly from_coeffs(std::vector<Rat> coeffs);
    static RatPoly from_int_poly(const IntPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(std::size_t i) const;

    Rat eval(const Rat& x) const;

    // this += q * p, used to accumulate Newton terms.
    void add_scaled(const IntPoly& p, const Rat& q);

    bool operator==(const RatPoly& o) const = default;

private:
    std::vector<Rat> coeffs_;
};

// Text form: either a sum of monomials in x ("-x^3+9x^2-25x+25", '*' and spaces
// optional) or a bracketed ascending coefficient list ("[25,-25,9,-1]").
// Rejects anything else with Error(syntax) carrying the byte offset.
IntPoly parse_poly(std::string_view text);

// Deterministic rendering, descending powers with explicit signs; round-trips
// through parse_poly.
std::string format_poly(const IntPoly& u);

inline Int eval(const IntPoly& u, const Int& x) { return u.eval(x); }

// u^(n)(r); n = 0 gives r.
Int iterate_value(const IntPoly& u, const Int& r, unsigned long n);

// u(v(x)).
IntPoly compose(const IntPoly& u, const IntPoly& v);

// v(x) = -u(-x); carries nilpotency at r to nilpotency at -r.
IntPoly negate_reflect(const IntPoly& u);

// v(x) = u(a*x)/a. Error(non_integral_reduction) when a does not divide the
// constant term (all other coefficients stay integral by construction).
IntPoly scale_reduce(const IntPoly& u, const Int& a);

// Exact reduced value u(q).
Rat rational_eval(const IntPoly& u, const Rat& q);

} // namespace nilpoly
