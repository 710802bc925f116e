#include "restrikt/classify.hpp"

namespace restrikt {

std::string SingularityClass::label() const {
    switch (kind) {
        case Kind::A: return "A" + std::to_string(n - 1);
        case Kind::AInf: return "Ainf";
        case Kind::D: return "D" + std::to_string(n + 1);
        case Kind::DInf: return "Dinf";
        case Kind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

SingularityClass classify(const PhaseAnalysis& a) {
    SingularityClass c;
    if (a.adapted || a.heights.h_lin >= 2) return c;

    const ExtRational& m_ext = a.heights.m;
    if (m_ext.is_infinite() || !is_integer(m_ext.value()))
        throw MalformedNormalForm("non-adapted phase with non-integer m");
    c.m = m_ext.value().convert_to<long long>();

    const BivariatePolynomial& pa = a.trace.phi_a;
    bool has02 = pa.coeff({0, 2}) != 0;
    bool has12 = pa.coeff({1, 2}) != 0;
    if (!has02 && !has12)
        throw MalformedNormalForm(
            "adapted-coordinate support carries neither (0,2) nor (1,2)");

    long long n = -1;
    for (const auto& [pt, coef] : pa.terms()) {
        (void)coef;
        if (pt.t2 == 0 && (n < 0 || pt.t1 < n)) n = pt.t1;
    }

    if (has02) {
        c.kind = (n < 0) ? SingularityClass::Kind::AInf : SingularityClass::Kind::A;
    } else {
        c.kind = (n < 0) ? SingularityClass::Kind::DInf : SingularityClass::Kind::D;
    }
    if (n >= 0) {
        c.n = n;
        long long min_n = has02 ? 2 * c.m + 1 : 2 * c.m + 2;
        if (n < min_n)
            throw MalformedNormalForm("b0 order " + std::to_string(n) +
                                      " below the normal-form minimum " + std::to_string(min_n));
    }
    return c;
}

CriticalExponent critical_exponent(const SingularityClass& c) {
    if (!c.applicable())
        throw std::logic_error("critical_exponent: class not applicable");
    bool a_type = c.kind == SingularityClass::Kind::A || c.kind == SingularityClass::Kind::AInf;
    Rational x = a_type ? Rational(1, 2 * c.m + 2) : Rational(1, 4 * c.m + 4);
    return CriticalExponent{{x, Rational(1, 4)}};
}

ExpectedInvariants expected_invariants(const SingularityClass& c) {
    if (!c.finite())
        throw std::logic_error("expected_invariants: requires a finite class");
    ExpectedInvariants e;
    if (c.kind == SingularityClass::Kind::A) {
        e.kappa = {Rational(1, 2 * c.m), ExtRational(Rational(1, 2))};
        e.kappa_la = {Rational(1, c.n), ExtRational(Rational(1, 2))};
        e.d = Rational(2 * c.m, c.m + 1);
        e.h = Rational(2 * c.n, c.n + 2);
    } else {
        e.kappa = {Rational(1, 2 * c.m + 1), ExtRational(Rational(c.m, 2 * c.m + 1))};
        e.kappa_la = {Rational(1, c.n), ExtRational(Rational(c.n - 1, 2 * c.n))};
        e.d = Rational(2 * c.m + 1, c.m + 1);
        e.h = Rational(2 * c.n, c.n + 1);
    }
    return e;
}

BivariatePolynomial a_type_phase(long long m, long long n) {
    // (x2 - x1^m)^2 + x1^n
    BivariatePolynomial p;
    p.add({0, 2}, Rational(1));
    p.add({m, 1}, Rational(-2));
    p.add({2 * m, 0}, Rational(1));
    p.add({n, 0}, Rational(1));
    return p;
}

BivariatePolynomial d_type_phase(long long m, long long n) {
    // x1 (x2 - x1^m)^2 + x1^n
    BivariatePolynomial p;
    p.add({1, 2}, Rational(1));
    p.add({m + 1, 1}, Rational(-2));
    p.add({2 * m + 1, 0}, Rational(1));
    p.add({n, 0}, Rational(1));
    return p;
}

} // namespace restrikt
