#pragma once

#include "restrikt/rational.hpp"
#include "restrikt/unipoly.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace restrikt {

// Exponent pair of a monomial x1^t1 x2^t2.
struct LatticePoint {
    long long t1 = 0;
    long long t2 = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

// Sparse bivariate polynomial over Q. Zero coefficients are never stored,
// so the key set of terms() is exactly the Taylor support.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;

    static BivariatePolynomial zero() { return {}; }
    static BivariatePolynomial monomial(LatticePoint p, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<LatticePoint, Rational>& terms() const { return terms_; }
    Rational coeff(LatticePoint p) const;
    void set(LatticePoint p, const Rational& c);
    void add(LatticePoint p, const Rational& c);
    std::vector<LatticePoint> support() const;
    long long max_exponent() const;  // max over support of max(t1, t2)

    BivariatePolynomial operator+(const BivariatePolynomial&) const;
    BivariatePolynomial operator-(const BivariatePolynomial&) const;
    BivariatePolynomial operator*(const BivariatePolynomial&) const;
    bool operator==(const BivariatePolynomial&) const = default;

    Rational evaluate(const Rational& x1, const Rational& x2) const;
    double evaluate(double x1, double x2) const;
    BivariatePolynomial derivative(int var) const;  // var is 1 or 2

    // Coefficient of x2^k as a polynomial in x1.
    UnivariatePolynomial x1_coefficient_of_x2_power(long long k) const;
    // p(s, z) as a polynomial in z for fixed rational s (typically +-1).
    UnivariatePolynomial restrict_x1(const Rational& s) const;

    std::string to_string() const;  // canonical: terms ordered by (t1, t2)

private:
    std::map<LatticePoint, Rational> terms_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

// Grammar: sum of monomials  c * x1^a * x2^b  with integer or rational c;
// multiplication is a '*' or plain juxtaposition.
BivariatePolynomial parse_polynomial(std::string_view text);

struct OriginCheck {
    enum class Violation { None, NonzeroConstant, NonzeroGradient, IdenticallyZero };
    bool ok = false;
    Violation violation = Violation::None;
    const char* violation_name() const;
};

// Accepts iff p is nonzero, p(0) = 0 and grad p(0) = 0 (finite type at the
// origin is automatic for nonzero polynomials).
OriginCheck check_origin_conditions(const BivariatePolynomial& p);

// Subtracts the linear part; requires p(0) = 0.
BivariatePolynomial normalize_gradient(const BivariatePolynomial& p);

BivariatePolynomial swap_variables(const BivariatePolynomial& p);

// Non-linear shear y2 = x2 - psi(x1). psi must vanish at 0.
struct ShearMap {
    UnivariatePolynomial psi;
    explicit ShearMap(UnivariatePolynomial f = UnivariatePolynomial());
    ShearMap inverse() const { return ShearMap(-psi); }
};

// p expressed in sheared coordinates: result(y1, y2) = p(y1, y2 + psi(y1)).
BivariatePolynomial apply_shear(const BivariatePolynomial& p, const ShearMap& s);

} // namespace restrikt
