#include "restrikt/rational.hpp"

#include <cmath>
#include <sstream>
#include <iomanip>

namespace restrikt {

std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

std::string to_decimal_string(const Rational& q) {
    std::ostringstream os;
    os << std::setprecision(17) << to_double(q);
    return os.str();
}

Rational rat_pow(const Rational& base, long long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rational(1) / rat_pow(base, -exp);
    }
    Rational result(1), b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
}

Rational rational_from_double(double x, const Int& max_den) {
    if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
    if (std::fabs(x) > 1e15) throw std::domain_error("rational_from_double: magnitude too large");
    bool neg = x < 0;
    double r = std::fabs(x);

    // continued fraction convergents p/q until the denominator cap
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = r;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9.0e17) break;
        Int a = static_cast<long long>(fl);
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    Rational result(p1, q1 == 0 ? Int(1) : q1);
    return neg ? -result : result;
}

} // namespace restrikt
