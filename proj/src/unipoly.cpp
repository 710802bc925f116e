#include "restrikt/unipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <sstream>

namespace restrikt {

namespace {
const Rational kZero(0);
}

void UnivariatePolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& coeff, int degree) {
    if (coeff == 0) return zero();
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    c.back() = coeff;
    return UnivariatePolynomial(std::move(c));
}

const Rational& UnivariatePolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rational& UnivariatePolynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
}

Rational UnivariatePolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UnivariatePolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long long>(k));
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& o) const {
    return *this + (-o);
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v = -v;
    return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return UnivariatePolynomial(std::move(r));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial>
UnivariatePolynomial::divrem(const UnivariatePolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UnivariatePolynomial rem = *this;
    std::vector<Rational> q;
    int dd = d.degree();
    if (rem.degree() >= dd) q.assign(static_cast<size_t>(rem.degree() - dd) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rational f = rem.leading() / d.leading();
        q[static_cast<size_t>(k)] = f;
        rem = rem - d * monomial(f, k);
    }
    return {UnivariatePolynomial(std::move(q)), rem};
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
    if (is_zero()) return zero();
    std::vector<Rational> r = c_;
    Rational lc = c_.back();
    for (auto& v : r) v /= lc;
    return UnivariatePolynomial(std::move(r));
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1) && k > 0;
        if (!unit) {
            os << numerator(a).str();
            if (denominator(a) != 1) os << "/" << denominator(a).str();
        }
        if (k > 0) {
            if (!unit) os << " ";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divrem(y);
        (void)q;
        x = y;
        y = r;
    }
    return x.monic();
}

std::vector<std::pair<UnivariatePolynomial, int>>
squarefree_decomposition(const UnivariatePolynomial& f) {
    std::vector<std::pair<UnivariatePolynomial, int>> out;
    if (f.degree() < 1) return out;
    UnivariatePolynomial a = gcd(f, f.derivative());
    UnivariatePolynomial b = f.divrem(a).first;
    UnivariatePolynomial c = f.derivative().divrem(a).first;
    UnivariatePolynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UnivariatePolynomial g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.monic(), i);
        b = b.divrem(g).first;
        c = d.divrem(g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// Divisors of |n| by trial division. Inputs here come from small lattice
// geometry; guard against pathological sizes anyway.
std::vector<Int> divisors(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return {};
    if (n > Int("1000000000000000000"))
        throw std::runtime_error("rational_roots: coefficient too large for divisor search");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Clear denominators and content: primitive integer coefficients.
std::vector<Int> primitive_integer_coeffs(const UnivariatePolynomial& f) {
    Int den_lcm = 1;
    for (const auto& c : f.coeffs()) {
        Int d = denominator(c);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    std::vector<Int> ic;
    ic.reserve(f.coeffs().size());
    Int content = 0;
    for (const auto& c : f.coeffs()) {
        Int v = numerator(c) * (den_lcm / denominator(c));
        ic.push_back(v);
        content = boost::multiprecision::gcd(content, boost::multiprecision::abs(v));
    }
    if (content > 1)
        for (auto& v : ic) v /= content;
    return ic;
}

std::vector<Rational> rational_roots_squarefree(const UnivariatePolynomial& f) {
    std::vector<Rational> roots;
    if (f.degree() < 1) return roots;
    UnivariatePolynomial g = f;
    // strip zero roots
    int zero_ord = 0;
    while (g.coeff(0) == 0 && g.degree() >= 1) {
        std::vector<Rational> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = UnivariatePolynomial(std::move(shifted));
        ++zero_ord;
    }
    if (zero_ord > 0) roots.push_back(Rational(0));
    if (g.degree() < 1) return roots;

    auto ic = primitive_integer_coeffs(g);
    for (const Int& p : divisors(ic.front())) {
        for (const Int& q : divisors(ic.back())) {
            if (boost::multiprecision::gcd(p, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                if (g(cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UnivariatePolynomial& f) {
    std::vector<std::pair<Rational, int>> out;
    for (const auto& [factor, mult] : squarefree_decomposition(f))
        for (const auto& r : rational_roots_squarefree(factor))
            out.emplace_back(r, mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Rational root_bound(const UnivariatePolynomial& f) {
    if (f.degree() < 1) return Rational(1);
    Rational m(0);
    for (int k = 0; k < f.degree(); ++k) {
        Rational r = boost::multiprecision::abs(f.coeff(k) / f.leading());
        if (r > m) m = r;
    }
    return m + 1;
}

namespace {

int sign_of(const Rational& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

std::vector<UnivariatePolynomial> sturm_chain(const UnivariatePolynomial& f) {
    std::vector<UnivariatePolynomial> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        if (b.is_zero()) break;
        UnivariatePolynomial r = a.divrem(b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<UnivariatePolynomial>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.is_zero() ? 0 : sign_of(p(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

} // namespace

int count_real_roots(const UnivariatePolynomial& f, const Rational& a, const Rational& b) {
    if (f.degree() < 1) return 0;
    // Sturm counts distinct roots in (a, b]; use the square-free part.
    UnivariatePolynomial sf = f.divrem(gcd(f, f.derivative())).first;
    auto chain = sturm_chain(sf);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_real_roots(const UnivariatePolynomial& f) {
    Rational b = root_bound(f);
    return count_real_roots(f, -b, b);
}

std::pair<Rational, Rational> bisect_root(const UnivariatePolynomial& f,
                                          Rational lo, Rational hi, const Rational& width) {
    int slo = sign_of(f(lo));
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int sm = sign_of(f(mid));
        if (sm == 0) return {mid, mid};
        if (sm == slo) lo = mid; else hi = mid;
    }
    return {lo, hi};
}

} // namespace restrikt
