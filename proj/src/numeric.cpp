#include "nilpoly/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "nilpoly/error.hpp"

namespace nilpoly {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::syntax: return "SyntaxError";
        case Errc::non_integral_reduction: return "NonIntegralReduction";
        case Errc::zero_argument: return "ZeroArgument";
        case Errc::duplicate_node: return "DuplicateNode";
        case Errc::not_realizable: return "NotRealizable";
        case Errc::invalid_sequence: return "InvalidSequence";
        case Errc::zero_start: return "ZeroStart";
        case Errc::domain: return "DomainError";
        case Errc::unknown_suite: return "UnknownSuite";
        case Errc::non_minimal_input: return "NonMinimalInput";
        case Errc::invalid_form: return "InvalidForm";
    }
    return "Error";
}

Int int_from_string(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    if (i == text.size())
        throw Error(Errc::syntax, "expected an integer", i);
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw Error(Errc::syntax, "invalid digit in integer", j);
    return Int(std::string(text), 10);
}

std::string to_string(const Int& n) { return n.get_str(10); }

bool divides(const Int& d, const Int& n) {
    if (d == 0)
        throw Error(Errc::domain, "division by zero in divisibility test");
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool fits_long(const Int& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

long to_long(const Int& n) {
    if (!fits_long(n))
        throw Error(Errc::domain, "integer too large: " + to_string(n));
    return n.get_si();
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw Error(Errc::domain, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::vector<Int> prime_support(const Int& n) {
    if (n == 0)
        throw Error(Errc::zero_argument, "prime_support(0) is undefined");
    std::vector<Int> primes;
    Int m = abs_of(n);
    auto strip = [&](const Int& p) {
        if (divides(p, m)) {
            primes.push_back(p);
            do m /= p; while (divides(p, m) && m != 1);
        }
    };
    strip(2);
    strip(3);
    // remaining factors are 6k +- 1
    for (Int d = 5; d * d <= m;) {
        strip(d);
        strip(d + 2);
        d += 6;
    }
    if (m > 1) primes.push_back(m);
    return primes;
}

std::vector<Int> signed_divisors(const Int& n) {
    if (n == 0)
        throw Error(Errc::zero_argument, "divisors of 0 are not enumerable");
    Int m = abs_of(n);
    std::vector<Int> low, high;
    for (Int d = 1; d * d <= m; ++d) {
        if (!divides(d, m)) continue;
        low.push_back(d);
        Int q = m / d;
        if (q != d) high.push_back(q);
    }
    std::vector<Int> out;
    out.reserve(2 * (low.size() + high.size()));
    for (auto it = high.begin(); it != high.end(); ++it) out.push_back(-*it);
    for (auto it = low.rbegin(); it != low.rend(); ++it) out.push_back(-*it);
    for (const Int& d : low) out.push_back(d);
    for (auto it = high.rbegin(); it != high.rend(); ++it) out.push_back(*it);
    return out;
}

} // namespace nilpoly
