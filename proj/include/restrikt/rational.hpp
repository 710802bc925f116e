#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <stdexcept>

namespace restrikt {

using Int = boost::multiprecision::cpp_int;

// Exact rational arithmetic. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the canonical form we need for
// weights, heights and exponent coordinates.
using Rational = boost::multiprecision::cpp_rational;

std::string to_fraction_string(const Rational& q);   // always "num/den"
std::string to_decimal_string(const Rational& q);    // 17 significant digits
double to_double(const Rational& q);

// Nearest rational with denominator <= max_den (continued fractions).
Rational rational_from_double(double x, const Int& max_den = Int(1000000));

// "p/q" or "p" with optional sign.
Rational parse_rational(const std::string& text);

Rational rat_pow(const Rational& base, long long exp);
bool is_integer(const Rational& q);

// Rational extended with a single point at +infinity. Arithmetic follows
// x + inf = inf and finite/inf = 0; inf only ever arises from degenerate
// weights (edges lying on a coordinate axis).
class ExtRational {
public:
    ExtRational() : inf_(false), v_(0) {}
    ExtRational(const Rational& v) : inf_(false), v_(v) {}
    ExtRational(int v) : inf_(false), v_(v) {}
    static ExtRational infinity() { ExtRational e; e.inf_ = true; return e; }

    bool is_infinite() const { return inf_; }
    const Rational& value() const {
        if (inf_) throw std::logic_error("ExtRational: value() on infinity");
        return v_;
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) {
        return a == b || a < b;
    }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return b <= a; }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRational(a.v_ + b.v_);
    }

    std::string str() const { return inf_ ? "inf" : to_fraction_string(v_); }

private:
    bool inf_;
    Rational v_;
};

} // namespace restrikt
