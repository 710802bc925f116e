#pragma once

#include "restrikt/analysis.hpp"

namespace restrikt {

// A point (1/p1', 1/p3') of the dual exponent plane.
struct ExponentPair {
    Rational x;  // 1/p1'
    Rational y;  // 1/p3'
    bool operator==(const ExponentPair&) const = default;
};

// Condition a*x + b*y <= c. Condition lines carry b = 1; the axis caps
// x <= 1/2 and y <= 1/(2h) use b = 0 resp. a = 0.
struct HalfPlane {
    enum class Label { KappaLine, EdgeLine, AdaptedLine, AxisP1, AxisP3 };
    Rational a;
    Rational b;
    Rational c;
    Label label = Label::KappaLine;
    size_t edge_index = 0;  // for EdgeLine
    bool contains(const ExponentPair& q) const { return a * q.x + b * q.y <= c; }
    bool boundary(const ExponentPair& q) const { return a * q.x + b * q.y == c; }
    const char* label_name() const;
};

// Knapp necessary conditions: the kappa condition plus the edge conditions
// l0..la for a non-adapted phase, the single adapted-line condition
// otherwise, and the two axis caps in both cases.
std::vector<HalfPlane> condition_halfplanes(const PhaseAnalysis& a);

struct AdmissiblePolygon {
    enum class ExclusionReason { HEqualsOne, NuEqualsOne };
    std::vector<ExponentPair> vertices;  // counterclockwise from the origin
    bool ptilde_included = true;
    std::optional<ExclusionReason> excluded_reason;
    bool degenerate_fallback = false;  // vertex formulas hit parallel lines
};

struct DegenerateIntersection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The polygon of admissible exponents, built from the closed-form vertex
// formulas (falls back to half-plane clipping if two condition lines are
// parallel, which cannot happen for genuine polyhedra).
AdmissiblePolygon admissible_polygon(const PhaseAnalysis& a);

// Exact intersection of the half planes with the positive quadrant,
// as a counterclockwise polygon starting at the origin.
std::vector<ExponentPair> polygon_from_halfplanes(const std::vector<HalfPlane>& hs);

struct Admissibility {
    enum class Proven { Yes, No, OpenEndpoint, OutsideTheorem };
    bool necessary = false;
    Proven proven = Proven::No;
    const char* proven_name() const;
};

Admissibility is_admissible(const PhaseAnalysis& a, const ExponentPair& q);

// The Legendre-transform form of the necessary conditions,
// y <= -(1/2) L(K)[(2+2m) x - 1]; non-adapted phases only.
bool legendre_condition(const PhaseAnalysis& a, const ExponentPair& q);

} // namespace restrikt
