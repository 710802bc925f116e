#include "restrikt/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace restrikt {

BivariatePolynomial BivariatePolynomial::monomial(LatticePoint p, const Rational& c) {
    BivariatePolynomial out;
    out.set(p, c);
    return out;
}

Rational BivariatePolynomial::coeff(LatticePoint p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::set(LatticePoint p, const Rational& c) {
    if (c == 0) terms_.erase(p);
    else terms_[p] = c;
}

void BivariatePolynomial::add(LatticePoint p, const Rational& c) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::vector<LatticePoint> BivariatePolynomial::support() const {
    std::vector<LatticePoint> s;
    s.reserve(terms_.size());
    for (const auto& [p, c] : terms_) s.push_back(p);
    return s;
}

long long BivariatePolynomial::max_exponent() const {
    long long m = 0;
    for (const auto& [p, c] : terms_) m = std::max({m, p.t1, p.t2});
    return m;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [p, c] : o.terms_) r.add(p, c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [p, c] : o.terms_) r.add(p, -c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    BivariatePolynomial r;
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : o.terms_)
            r.add({p.t1 + q.t1, p.t2 + q.t2}, c * d);
    return r;
}

Rational BivariatePolynomial::evaluate(const Rational& x1, const Rational& x2) const {
    Rational acc(0);
    for (const auto& [p, c] : terms_)
        acc += c * rat_pow(x1, p.t1) * rat_pow(x2, p.t2);
    return acc;
}

double BivariatePolynomial::evaluate(double x1, double x2) const {
    double acc = 0.0;
    for (const auto& [p, c] : terms_) {
        double t = to_double(c);
        for (long long i = 0; i < p.t1; ++i) t *= x1;
        for (long long i = 0; i < p.t2; ++i) t *= x2;
        acc += t;
    }
    return acc;
}

BivariatePolynomial BivariatePolynomial::derivative(int var) const {
    BivariatePolynomial r;
    for (const auto& [p, c] : terms_) {
        if (var == 1 && p.t1 > 0) r.add({p.t1 - 1, p.t2}, c * Rational(p.t1));
        if (var == 2 && p.t2 > 0) r.add({p.t1, p.t2 - 1}, c * Rational(p.t2));
    }
    return r;
}

UnivariatePolynomial BivariatePolynomial::x1_coefficient_of_x2_power(long long k) const {
    std::vector<Rational> c;
    for (const auto& [p, v] : terms_) {
        if (p.t2 != k) continue;
        if (static_cast<long long>(c.size()) <= p.t1) c.resize(static_cast<size_t>(p.t1) + 1, Rational(0));
        c[static_cast<size_t>(p.t1)] = v;
    }
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial BivariatePolynomial::restrict_x1(const Rational& s) const {
    std::vector<Rational> c;
    for (const auto& [p, v] : terms_) {
        if (static_cast<long long>(c.size()) <= p.t2) c.resize(static_cast<size_t>(p.t2) + 1, Rational(0));
        c[static_cast<size_t>(p.t2)] += v * rat_pow(s, p.t1);
    }
    return UnivariatePolynomial(std::move(c));
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool has_var = p.t1 > 0 || p.t2 > 0;
        bool unit = (a == 1) && has_var;
        if (!unit) {
            os << numerator(a).str();
            if (denominator(a) != 1) os << "/" << denominator(a).str();
        }
        if (p.t1 > 0) {
            if (!unit) os << " ";
            os << "x1";
            if (p.t1 > 1) os << "^" << p.t1;
        }
        if (p.t2 > 0) {
            if (p.t1 > 0 || !unit) os << " ";
            os << "x2";
            if (p.t2 > 1) os << "^" << p.t2;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Tokenizer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
};

Int parse_integer(Tokenizer& tk) {
    tk.skip_ws();
    size_t start = tk.pos;
    while (tk.pos < tk.text.size() && std::isdigit(static_cast<unsigned char>(tk.text[tk.pos]))) ++tk.pos;
    if (tk.pos == start) throw ParseError("expected a number", start);
    return Int(std::string(tk.text.substr(start, tk.pos - start)));
}

long long parse_exponent(Tokenizer& tk) {
    tk.skip_ws();
    size_t at = tk.pos;
    bool neg = false;
    if (tk.peek() == '-') { neg = true; ++tk.pos; }
    Int e = parse_integer(tk);
    if (neg) throw ParseError("negative exponent rejected", at);
    if (e > 100000) throw ParseError("exponent too large", at);
    return e.convert_to<long long>();
}

// One monomial: optional rational constant and variable powers in any order.
std::pair<LatticePoint, Rational> parse_monomial(Tokenizer& tk) {
    LatticePoint p;
    Rational coeff(1);
    bool any = false;
    for (;;) {
        char c = tk.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_integer(tk);
            Int den = 1;
            if (tk.peek() == '/') {
                ++tk.pos;
                size_t at = tk.pos;
                den = parse_integer(tk);
                if (den == 0) throw ParseError("zero denominator", at);
            }
            coeff *= Rational(num, den);
            any = true;
        } else if (c == 'x') {
            size_t at = tk.pos;
            ++tk.pos;
            char v = tk.pos < tk.text.size() ? tk.text[tk.pos] : '\0';
            if (v != '1' && v != '2') throw ParseError("expected x1 or x2", at);
            ++tk.pos;
            long long e = 1;
            if (tk.peek() == '^') {
                ++tk.pos;
                e = parse_exponent(tk);
            }
            if (v == '1') p.t1 += e; else p.t2 += e;
            any = true;
        } else if (c == '*') {
            ++tk.pos;
        } else {
            break;
        }
    }
    if (!any) throw ParseError("expected a monomial", tk.pos);
    return {p, coeff};
}

} // namespace

BivariatePolynomial parse_polynomial(std::string_view text) {
    Tokenizer tk{text};
    BivariatePolynomial out;
    bool first = true;
    while (!tk.done()) {
        int sign = 1;
        char c = tk.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++tk.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between monomials", tk.pos);
        }
        // allow chained signs like "- -" to be rejected naturally by monomial parse
        auto [pt, coeff] = parse_monomial(tk);
        out.add(pt, sign * coeff);
        first = false;
    }
    if (first) throw ParseError("empty input", 0);
    return out;
}

const char* OriginCheck::violation_name() const {
    switch (violation) {
        case Violation::None: return "None";
        case Violation::NonzeroConstant: return "NonzeroConstant";
        case Violation::NonzeroGradient: return "NonzeroGradient";
        case Violation::IdenticallyZero: return "IdenticallyZero";
    }
    return "?";
}

OriginCheck check_origin_conditions(const BivariatePolynomial& p) {
    OriginCheck r;
    if (p.is_zero()) {
        r.violation = OriginCheck::Violation::IdenticallyZero;
        return r;
    }
    if (p.coeff({0, 0}) != 0) {
        r.violation = OriginCheck::Violation::NonzeroConstant;
        return r;
    }
    if (p.coeff({1, 0}) != 0 || p.coeff({0, 1}) != 0) {
        r.violation = OriginCheck::Violation::NonzeroGradient;
        return r;
    }
    r.ok = true;
    return r;
}

BivariatePolynomial normalize_gradient(const BivariatePolynomial& p) {
    BivariatePolynomial r = p;
    r.set({1, 0}, Rational(0));
    r.set({0, 1}, Rational(0));
    return r;
}

BivariatePolynomial swap_variables(const BivariatePolynomial& p) {
    BivariatePolynomial r;
    for (const auto& [pt, c] : p.terms()) r.set({pt.t2, pt.t1}, c);
    return r;
}

ShearMap::ShearMap(UnivariatePolynomial f) : psi(std::move(f)) {
    if (psi.coeff(0) != 0)
        throw std::invalid_argument("ShearMap: psi must vanish at 0");
}

BivariatePolynomial apply_shear(const BivariatePolynomial& p, const ShearMap& s) {
    if (s.psi.is_zero()) return p;

    // Powers of psi as bivariate polynomials in x1.
    long long max_b = 0;
    for (const auto& [pt, c] : p.terms()) max_b = std::max(max_b, pt.t2);
    BivariatePolynomial psi_poly;
    for (int k = 0; k <= s.psi.degree(); ++k)
        psi_poly.add({k, 0}, s.psi.coeff(k));
    std::vector<BivariatePolynomial> psi_pow(static_cast<size_t>(max_b) + 1);
    psi_pow[0] = BivariatePolynomial::monomial({0, 0}, Rational(1));
    for (long long k = 1; k <= max_b; ++k)
        psi_pow[static_cast<size_t>(k)] = psi_pow[static_cast<size_t>(k - 1)] * psi_poly;

    // (y2 + psi)^b expanded with binomial coefficients.
    BivariatePolynomial out;
    for (const auto& [pt, c] : p.terms()) {
        Rational binom(1);
        for (long long k = 0; k <= pt.t2; ++k) {
            // binom = C(b, k)
            const BivariatePolynomial& pw = psi_pow[static_cast<size_t>(pt.t2 - k)];
            for (const auto& [q, d] : pw.terms())
                out.add({pt.t1 + q.t1, k}, c * binom * d);
            binom = binom * Rational(pt.t2 - k) / Rational(k + 1);
        }
    }
    return out;
}

} // namespace restrikt
