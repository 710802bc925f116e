#pragma once

#include "restrikt/augmented.hpp"

#include <optional>

namespace restrikt {

// Everything the geometric pipeline computes for one phase. The analysis
// runs in coordinates that are canonically oriented and linearly adapted,
// matching the standing assumptions of the estimates (d = h_lin there).
struct PhaseAnalysis {
    BivariatePolynomial input;              // after parsing / gradient normalization
    bool swapped = false;                   // canonical orientation of the input
    bool lin_swap = false;                  // linear adaptation: swap applied?
    std::optional<Rational> lin_shear_c;    // linear adaptation: x2 -> x2 - c x1
    Rational d_input;                       // Newton distance before linear adaptation

    BivariatePolynomial phi;                // analysis coordinates
    NewtonPolyhedron np_phi;
    PrincipalFaceInfo pf;

    AdaptednessReport adaptedness;
    bool adapted = false;
    VarchenkoTrace trace;                   // psi and phi^a (trivial when adapted)
    NewtonPolyhedron np_phia;
    PrincipalFaceInfo pf_a;

    Heights heights;

    std::optional<AugmentedPolyhedron> aug; // non-adapted only
    std::optional<KFunction> kfun;
};

struct ValidationError : std::runtime_error {
    std::string code;
    ValidationError(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

// Full geometric pipeline: origin checks, canonical orientation, linear
// adaptation, Varchenko's algorithm, heights, augmented polyhedron and K.
PhaseAnalysis analyze_phase(const BivariatePolynomial& p, bool normalize_grad = false);

} // namespace restrikt
