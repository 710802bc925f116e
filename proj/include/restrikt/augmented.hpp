#pragma once

#include "restrikt/adapted.hpp"

namespace restrikt {

// Newton polyhedron of phi^a augmented by the ray of the principal line
// L_kappa above the anchor vertex. l0 is the first edge index with slope
// ratio a_l > m; la the edge of (or left of) the principal face of phi^a.
struct AugmentedPolyhedron {
    NewtonPolyhedron base;
    Weight kappa;       // principal weight of phi, kappa2 finite
    Rational m;         // kappa2/kappa1
    LatticePoint anchor;
    size_t l0 = 0;
    size_t la = 0;      // may be n+1 when the principal face is the horizontal edge
};

struct CalledOnAdaptedInput : std::logic_error {
    using std::logic_error::logic_error;
};

AugmentedPolyhedron build_augmented(const NewtonPolyhedron& base, const Weight& kappa);

// Supporting-line map u = ktilde1 -> ktilde2 of the augmented polyhedron,
// piecewise linear and convex on [u_min, kappa1], +infinity on [0, u_min)
// when the polyhedron touches the t1-axis.
struct KFunction {
    Rational u_min;
    Rational u_max;                                      // = kappa1
    std::vector<std::pair<Rational, Rational>> breakpoints;  // (u, K(u)), u ascending
    bool infinite_left = false;

    Rational operator()(const Rational& u) const;        // u in [u_min, u_max]
};

KFunction k_function(const AugmentedPolyhedron& aug);

// L(K)[w] = sup_{u in finite domain} (w u - K(u)); attained at a breakpoint.
Rational legendre_transform(const KFunction& k, const Rational& w);

struct RestrictionHeight {
    Rational r;
    Rational value;
    std::string argmax_label;  // "d", "edge l", or "horizontal"
};

// h^res_r by the max formula over d(phi)+1/r-1 and the edge quantities h^l_r.
RestrictionHeight restriction_height(const AugmentedPolyhedron& aug, const Rational& d,
                                     const Rational& r);

// The same number read off geometrically: t2-coordinate of the intersection
// of the line t2 = t1 + (1+m)/r with the augmented Newton diagram, minus 1.
Rational restriction_height_geometric(const AugmentedPolyhedron& aug, const Rational& r);

} // namespace restrikt
