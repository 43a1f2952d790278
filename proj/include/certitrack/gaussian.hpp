#pragma once

#include <gmpxx.h>
#include <string>

namespace certitrack {

// Parse a rational literal "p/q" or "p" (decimal digits, optional leading sign).
// Result is canonical: lowest terms, positive denominator.  Throws ParseError.
mpq_class parse_rational(const std::string& text);

// Inverse of parse_rational: "p" for integers, "p/q" otherwise, always lowest terms.
std::string format_rational(const mpq_class& q);

// Exact complex number with rational real and imaginary parts.  GMP keeps each
// part in lowest terms with positive denominator as long as values are built
// through these operators (raw mpq_class construction must canonicalize first;
// parse_rational does).
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianRational conj() const { return {re, -im}; }
    mpq_class abs_sq() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

    // scaling by a real rational (the common case in the tracker loop)
    GaussianRational& operator*=(const mpq_class& q) {
        re *= q;
        im *= q;
        return *this;
    }
    friend GaussianRational operator*(const mpq_class& q, GaussianRational a) { return a *= q; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// "re" / "re+im*i" text form for messages and test output.
std::string to_string(const GaussianRational& g);

} // namespace certitrack
