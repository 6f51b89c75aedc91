#include "nilpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "nilpoly/error.hpp"

namespace nilpoly {

namespace {

const Int kZeroInt = 0;
const Rat kZeroRat = 0;

void strip_trailing_zeros(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void strip_trailing_zeros(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

IntPoly IntPoly::from_coeffs(std::vector<Int> coeffs) {
    strip_trailing_zeros(coeffs);
    IntPoly p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

IntPoly IntPoly::constant(Int c) {
    std::vector<Int> v;
    if (c != 0) v.push_back(std::move(c));
    return from_coeffs(std::move(v));
}

IntPoly IntPoly::monomial(Int c, std::size_t exponent) {
    if (c == 0) return IntPoly();
    std::vector<Int> v(exponent + 1, Int(0));
    v[exponent] = std::move(c);
    return from_coeffs(std::move(v));
}

std::optional<std::size_t> IntPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZeroInt;
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty())
        throw Error(Errc::domain, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(coeffs_);
    for (Int& c : v) c = -c;
    return from_coeffs(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return from_coeffs(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(v));
}

IntPoly IntPoly::operator*(const Int& c) const {
    if (c == 0) return IntPoly();
    std::vector<Int> v(coeffs_);
    for (Int& a : v) a *= c;
    return from_coeffs(std::move(v));
}

RatPoly RatPoly::from_coeffs(std::vector<Rat> coeffs) {
    strip_trailing_zeros(coeffs);
    RatPoly p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

RatPoly RatPoly::from_int_poly(const IntPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) v.emplace_back(c);
    return from_coeffs(std::move(v));
}

std::optional<std::size_t> RatPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Rat& RatPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZeroRat;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

void RatPoly::add_scaled(const IntPoly& p, const Rat& q) {
    if (q == 0 || p.is_zero()) return;
    if (coeffs_.size() < p.coeffs().size()) coeffs_.resize(p.coeffs().size(), Rat(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        coeffs_[i] += Rat(p.coeffs()[i]) * q;
    strip_trailing_zeros(coeffs_);
}

/* Parser. Two accepted shapes:
 *   poly := ['+'|'-'] term (('+'|'-') term)*
 *   term := digits ['*'] [xpart] | xpart       xpart := 'x' ['^' digits]
 *   list := '[' int (',' int)* ']'
 * Whitespace is insignificant between tokens.
 */
namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntPoly parse() {
        skip_ws();
        IntPoly result = (peek() == '[') ? parse_list() : parse_expression();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return result;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::syntax, what + " at offset " + std::to_string(pos_), pos_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Int parse_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::size_t parse_exponent() {
        std::size_t start = pos_;
        Int e = parse_digits();
        if (e > 100000) {
            pos_ = start;
            fail("exponent too large");
        }
        return static_cast<std::size_t>(e.get_ui());
    }

    IntPoly parse_list() {
        ++pos_;  // '['
        std::vector<Int> coeffs;
        for (;;) {
            skip_ws();
            bool neg = false;
            if (peek() == '-') { neg = true; ++pos_; skip_ws(); }
            Int c = parse_digits();
            coeffs.push_back(neg ? Int(-c) : c);
            skip_ws();
            if (peek() == ',') { ++pos_; continue; }
            if (peek() == ']') { ++pos_; break; }
            fail("expected ',' or ']'");
        }
        return IntPoly::from_coeffs(std::move(coeffs));
    }

    // One signed term added into coeffs.
    void parse_term(std::vector<Int>& coeffs, bool negative) {
        Int coefficient = 1;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = parse_digits();
            saw_number = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'x') fail("expected 'x' after '*'");
            }
        }
        std::size_t exponent = 0;
        if (peek() == 'x') {
            ++pos_;
            exponent = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                exponent = parse_exponent();
            }
        } else if (!saw_number) {
            fail("expected a term");
        }
        if (negative) coefficient = -coefficient;
        if (coeffs.size() < exponent + 1) coeffs.resize(exponent + 1, Int(0));
        coeffs[exponent] += coefficient;
    }

    IntPoly parse_expression() {
        std::vector<Int> coeffs;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = (peek() == '-');
            ++pos_;
            skip_ws();
        }
        parse_term(coeffs, negative);
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) break;
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            skip_ws();
            parse_term(coeffs, c == '-');
        }
        return IntPoly::from_coeffs(std::move(coeffs));
    }
};

} // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_poly(const IntPoly& u) {
    if (u.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = u.coeffs().size(); k-- > 0;) {
        const Int& c = u.coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int m = abs_of(c);
        if (k == 0) {
            out << m.get_str();
        } else {
            if (m != 1) out << m.get_str();
            out << 'x';
            if (k > 1) out << '^' << k;
        }
    }
    return out.str();
}

Int iterate_value(const IntPoly& u, const Int& r, unsigned long n) {
    Int v = r;
    for (unsigned long i = 0; i < n; ++i) v = u.eval(v);
    return v;
}

IntPoly compose(const IntPoly& u, const IntPoly& v) {
    IntPoly acc;
    for (auto it = u.coeffs().rbegin(); it != u.coeffs().rend(); ++it)
        acc = acc * v + IntPoly::constant(*it);
    return acc;
}

IntPoly negate_reflect(const IntPoly& u) {
    std::vector<Int> v(u.coeffs());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i % 2 == 0) v[i] = -v[i];
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly scale_reduce(const IntPoly& u, const Int& a) {
    if (a == 0)
        throw Error(Errc::domain, "scale_reduce requires a nonzero scale");
    if (u.is_zero()) return u;
    if (!divides(a, u.coeff(0)))
        throw Error(Errc::non_integral_reduction,
                    "constant term " + to_string(u.coeff(0)) + " is not divisible by " + to_string(a));
    // v_i = u_i * a^(i-1)
    std::vector<Int> v(u.coeffs().size());
    v[0] = u.coeff(0) / a;
    Int power = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        v[i] = u.coeff(i) * power;
        power *= a;
    }
    return IntPoly::from_coeffs(std::move(v));
}

Rat rational_eval(const IntPoly& u, const Rat& q) {
    Rat acc = 0;
    for (auto it = u.coeffs().rbegin(); it != u.coeffs().rend(); ++it)
        acc = acc * q + Rat(*it);
    return acc;
}

} // namespace nilpoly
