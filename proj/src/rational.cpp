#include "slcoset/rational.hpp"

#include <cctype>
#include <ostream>

namespace slcoset {

Rational make_rational(long num, long den) {
    return make_rational(mpz_class(num), mpz_class(den));
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw OpError("ZeroDivision", "rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) {
        throw OpError("ZeroDivision", "inverse of zero in Q(i)");
    }
    const Rational n = norm();
    return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    *this = *this / o;
    return *this;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    a += b;
    return a;
}

GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    a -= b;
    return a;
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
}

bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
}

bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
}

GaussianRational flat(const GaussianRational& a) {
    return GaussianRational(-1) - a;
}

bool in_k_flat(const GaussianRational& a) {
    static const Rational minus_half = make_rational(-1, 2);
    const int c = cmp(a.re, minus_half);
    if (c > 0) return true;
    if (c < 0) return false;
    return sgn(a.im) >= 0;
}

GaussianRational kflat_rep(const GaussianRational& a) {
    return in_k_flat(a) ? a : flat(a);
}

std::string to_string(const Rational& r) {
    return r.get_str(); // GMP prints "p/q", omitting "/q" when q == 1
}

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string out = to_string(z.re);
    if (sgn(z.im) >= 0) {
        out += '+';
        out += to_string(z.im);
    } else {
        out += '-';
        out += to_string(Rational(-z.im));
    }
    out += "*i";
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool accept(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

[[noreturn]] void parse_fail(std::string_view text) {
    throw OpError("ParseError", "bad scalar '" + std::string(text) + "'");
}

mpz_class parse_integer_digits(Cursor& c, std::string_view whole) {
    const size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) parse_fail(whole);
    return mpz_class(std::string(c.text.substr(start, c.pos - start)), 10);
}

// sign? digits ('/' digits)?
Rational parse_signed_rational(Cursor& c, std::string_view whole) {
    bool negative = false;
    if (c.accept('-')) {
        negative = true;
    } else {
        c.accept('+');
    }
    mpz_class num = parse_integer_digits(c, whole);
    mpz_class den = 1;
    if (c.accept('/')) den = parse_integer_digits(c, whole);
    if (negative) num = -num;
    return make_rational(num, den);
}

} // namespace

Rational parse_rational(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    Rational r = parse_signed_rational(c, text);
    c.skip_ws();
    if (!c.done()) parse_fail(text);
    return r;
}

GaussianRational parse_gaussian(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    Rational first = parse_signed_rational(c, text);
    c.skip_ws();
    if (c.done()) return {first, Rational(0)};
    if (c.accept('*')) { // pure imaginary "b*i"
        if (!c.accept('i')) parse_fail(text);
        c.skip_ws();
        if (!c.done()) parse_fail(text);
        return {Rational(0), first};
    }
    char sign;
    if (c.accept('+')) {
        sign = '+';
    } else if (c.accept('-')) {
        sign = '-';
    } else {
        parse_fail(text);
    }
    c.skip_ws();
    Rational mag = parse_signed_rational(c, text);
    c.skip_ws();
    if (!c.accept('*')) parse_fail(text);
    if (!c.accept('i')) parse_fail(text);
    c.skip_ws();
    if (!c.done()) parse_fail(text);
    if (sign == '-') mag = -mag;
    return {first, mag};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

} // namespace slcoset
