#pragma once

#include "restrikt/newton.hpp"

#include <optional>

namespace restrikt {

struct AdaptednessReport {
    enum class Reason {
        PrincipalFaceVertex,
        PrincipalFaceUnbounded,
        NonIntegerM,
        NoExcessRoot,
        ExcessRootFound,
    };
    bool adapted = true;
    Reason reason = Reason::NoExcessRoot;
    // Witness for non-adaptedness: a real root x2 = c x1^m of the principal
    // part with multiplicity strictly greater than d.
    std::optional<Rational> root;
    int multiplicity = 0;
    long long m = 0;
    const char* reason_name() const;
};

struct IrrationalRootEncountered : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CalledOnAdapted : std::logic_error {
    using std::logic_error::logic_error;
};

// Decides adaptedness. Expects canonical orientation and origin conditions.
AdaptednessReport adaptedness_test(const BivariatePolynomial& p);

// Shear increment (b, m) of one Varchenko step; requires a non-adapted input.
std::pair<Rational, long long> varchenko_step(const BivariatePolynomial& p);

struct VarchenkoTrace {
    struct Step {
        Rational b;
        long long m = 0;
        BivariatePolynomial phase_after;
        Rational d_after;
    };
    std::vector<Step> steps;
    UnivariatePolynomial psi;     // accumulated principal root jet
    BivariatePolynomial phi_a;    // the phase in adapted coordinates
    bool converged = true;
};

struct IterationCapReached : std::runtime_error {
    VarchenkoTrace partial;
    IterationCapReached(const std::string& msg, VarchenkoTrace t)
        : std::runtime_error(msg), partial(std::move(t)) {}
};

VarchenkoTrace to_adapted(const BivariatePolynomial& p, int max_iter = 64);

// h = d(phi^a).
Rational height(const BivariatePolynomial& p);

struct LinearHeightResult {
    Rational h_lin;
    // Witness reaching h_lin: optional swap followed by x2 -> x2 - c*x1.
    bool swap_first = false;
    std::optional<Rational> shear_c;
};

// Max of d over the identity, the variable swap, and linear shears by the
// rational roots of the compact-edge polynomials (in both orientations).
LinearHeightResult linear_height(const BivariatePolynomial& p);

// 1 iff h >= 2 and the principal face of the computed adapted polyhedron is
// a vertex. The full definition quantifies over all adapted systems; this
// reads the one Varchenko system, which reports flag as heuristic.
int varchenko_exponent(const BivariatePolynomial& p);

struct Heights {
    Rational d;
    Rational h;
    Rational h_lin;
    int nu = 0;
    ExtRational m;
};

} // namespace restrikt
