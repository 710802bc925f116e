#pragma once

#include "restrikt/conditions.hpp"

namespace restrikt {

// Siersma-type classification for non-adapted phases with h_lin < 2. The
// class is read off the Taylor support of phi^a: (0,2) present means A,
// otherwise (1,2) present means D; n is the smallest pure-x1 exponent,
// infinite when no pure-x1 term exists (b0 identically zero).
struct SingularityClass {
    enum class Kind { A, AInf, D, DInf, NotApplicable };
    Kind kind = Kind::NotApplicable;
    long long m = 0;
    long long n = 0;        // finite classes only
    std::string label() const;  // "A4", "Ainf", "D7", ...
    bool finite() const { return kind == Kind::A || kind == Kind::D; }
    bool applicable() const { return kind != Kind::NotApplicable; }
};

struct MalformedNormalForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SingularityClass classify(const PhaseAnalysis& a);

struct CriticalExponent {
    ExponentPair q;
};

// (1/(2m+2), 1/4) for A-type, (1/(4m+4), 1/4) for D-type; the infinite
// classes share the exponents of their finite counterparts.
CriticalExponent critical_exponent(const SingularityClass& c);

struct ExpectedInvariants {
    Weight kappa;
    Weight kappa_la;
    Rational d;
    Rational h;
};

// Closed-form invariants of the A/D normal forms with finite n; these must
// agree with the geometric pipeline exactly.
ExpectedInvariants expected_invariants(const SingularityClass& c);

// The normal-form phases themselves: (x2 - x1^m)^2 + x1^n for A and
// x1 (x2 - x1^m)^2 + x1^n for D. Used for cross-validation sweeps.
BivariatePolynomial a_type_phase(long long m, long long n);
BivariatePolynomial d_type_phase(long long m, long long n);

} // namespace restrikt
