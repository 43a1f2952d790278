#include "certitrack/gaussian.hpp"

#include <cctype>

#include "certitrack/errors.hpp"

namespace certitrack {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

// Accepted grammar: [+-]digits[/digits].  A sign is only allowed on the
// numerator and the denominator must be a positive integer.
mpq_class parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    size_t num_end = slash == std::string::npos ? text.size() : slash;
    size_t start = 0;
    bool neg = false;
    if (num_end > 0 && (text[0] == '+' || text[0] == '-')) {
        neg = text[0] == '-';
        start = 1;
    }
    bool ok = all_digits(text, start, num_end) &&
              (slash == std::string::npos || all_digits(text, slash + 1, text.size()));
    if (!ok) throw ParseError("invalid rational literal: \"" + text + "\"");

    mpz_class num(text.substr(start, num_end - start), 10);
    if (neg) num = -num;
    mpz_class den =
        slash == std::string::npos ? mpz_class(1) : mpz_class(text.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in rational literal: \"" + text + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const mpq_class& q) {
    return q.get_str(10);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    mpq_class d = o.abs_sq();
    if (sgn(d) == 0) throw Error("division by zero Gaussian rational");
    mpq_class r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

std::string to_string(const GaussianRational& g) {
    if (sgn(g.im) == 0) return format_rational(g.re);
    std::string s = format_rational(g.re);
    s += (sgn(g.im) < 0) ? "-" : "+";
    mpq_class a = abs(g.im);
    s += format_rational(a);
    s += "i";
    return s;
}

} // namespace certitrack
