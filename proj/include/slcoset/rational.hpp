#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "slcoset/errors.hpp"

namespace slcoset {

// Exact rational scalar. GMP keeps the canonical form we rely on everywhere:
// lowest terms, denominator > 0.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Element of Q(i), the exact coefficient field of the whole library.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long x) : re(x), im(0) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {} // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    // |z|^2 = re^2 + im^2, exact.
    Rational norm() const { return re * re + im * im; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
bool operator!=(const GaussianRational& a, const GaussianRational& b);

inline GaussianRational gaussian_i() { return {Rational(0), Rational(1)}; }

// The involution b(a) = -1 - a; b(b(a)) = a.
GaussianRational flat(const GaussianRational& a);

// Fundamental half-plane for the flat involution: re > -1/2, plus the part
// of the boundary line with im >= 0. Exactly one of {a, flat(a)} passes,
// except the fixed point a = -1/2.
bool in_k_flat(const GaussianRational& a);

// Representative of {a, flat(a)} inside the fundamental domain.
GaussianRational kflat_rep(const GaussianRational& a);

// Canonical text form: "p/q" (q omitted when 1) for rationals,
// "a+b*i" / "a-b*i" when the imaginary part is nonzero.
std::string to_string(const Rational& r);
std::string to_string(const GaussianRational& z);

// Parses the canonical form, tolerating surrounding whitespace.
// Throws OpError("ParseError", ...) on malformed input.
Rational parse_rational(std::string_view text);
GaussianRational parse_gaussian(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace slcoset
