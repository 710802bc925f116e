#pragma once

#include "restrikt/rational.hpp"
#include <vector>
#include <string>
#include <utility>

namespace restrikt {

// Dense univariate polynomial over the rationals. Degrees stay tiny here
// (root jets, edge polynomials), so dense storage is the simple choice.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UnivariatePolynomial zero() { return UnivariatePolynomial(); }
    static UnivariatePolynomial monomial(const Rational& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    UnivariatePolynomial derivative() const;
    UnivariatePolynomial operator+(const UnivariatePolynomial&) const;
    UnivariatePolynomial operator-(const UnivariatePolynomial&) const;
    UnivariatePolynomial operator*(const UnivariatePolynomial&) const;
    UnivariatePolynomial operator-() const;
    bool operator==(const UnivariatePolynomial&) const = default;

    // Euclidean division; the divisor must be nonzero.
    std::pair<UnivariatePolynomial, UnivariatePolynomial> divrem(const UnivariatePolynomial& d) const;

    UnivariatePolynomial monic() const;
    std::string to_string(const std::string& var = "x1") const;

private:
    void trim();
    std::vector<Rational> c_;  // c_[k] is the coefficient of x^k
};

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

// Yun square-free decomposition: f = lc * prod_i f_i^i with the f_i monic,
// square-free and pairwise coprime. Only the f_i with positive degree are
// returned, as (factor, multiplicity) pairs.
std::vector<std::pair<UnivariatePolynomial, int>> squarefree_decomposition(const UnivariatePolynomial& f);

// All rational roots of f (with multiplicities), exact.
std::vector<std::pair<Rational, int>> rational_roots(const UnivariatePolynomial& f);

// Number of distinct real roots of f in (a, b] via Sturm chains.
int count_real_roots(const UnivariatePolynomial& f, const Rational& a, const Rational& b);
// Distinct real roots on the whole line (f nonzero).
int count_real_roots(const UnivariatePolynomial& f);

// Cauchy bound: all real roots lie in [-B, B].
Rational root_bound(const UnivariatePolynomial& f);

// Shrinks [lo, hi] (which must bracket a sign change of f) by bisection
// until hi - lo <= width. Diagnostic helper for irrational roots.
std::pair<Rational, Rational> bisect_root(const UnivariatePolynomial& f,
                                          Rational lo, Rational hi, const Rational& width);

} // namespace restrikt
