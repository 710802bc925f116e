#pragma once

#include "restrikt/polynomial.hpp"

#include <optional>
#include <vector>

namespace restrikt {

// Weight of a supporting line k1*t1 + k2*t2 = 1. k2 is extended so the
// horizontal edge lying on the t1-axis can be written as (k1, +inf).
struct Weight {
    Rational k1;
    ExtRational k2;
    bool operator==(const Weight&) const = default;
};

struct Face {
    enum class Kind { Vertex, CompactEdge, UnboundedVerticalEdge, UnboundedHorizontalEdge };
    Kind kind = Kind::Vertex;
    LatticePoint a;                 // the vertex, or the left endpoint of an edge
    LatticePoint b;                 // right endpoint (compact edges only)
    std::optional<Weight> weight;   // for edges whose line misses the origin
};

// Newton polyhedron of a bivariate polynomial: the staircase-shaped convex
// region conv(union over the support of alpha + R^2_+). Vertices are stored
// left to right (t1 increasing, t2 decreasing); compact edge l joins
// vertices l-1 and l, edge 0 is the unbounded vertical edge and edge n+1
// the unbounded horizontal one.
class NewtonPolyhedron {
public:
    static NewtonPolyhedron from_support(const std::vector<LatticePoint>& support);
    static NewtonPolyhedron of(const BivariatePolynomial& p) { return from_support(p.support()); }

    const std::vector<LatticePoint>& vertices() const { return v_; }
    size_t vertex_count() const { return v_.size(); }
    size_t compact_edge_count() const { return v_.size() - 1; }

    // Weight of compact edge l, l in [1, n].
    const Weight& edge_weight(size_t l) const;
    // a_l = k2^l / k1^l for l in [0, n+1]; a_0 = 0, a_{n+1} = +inf.
    ExtRational slope_ratio(size_t l) const;
    // (0, 1/B_n), with k2 = +inf when B_n = 0.
    Weight horizontal_weight() const;
    // (1/A_0, 0) when A_0 > 0; no supporting line of this form otherwise.
    std::optional<Weight> vertical_weight() const;

    Face vertex_face(size_t i) const;
    Face compact_edge_face(size_t l) const;
    Face vertical_face() const;
    Face horizontal_face() const;

    bool contains(LatticePoint t) const;

private:
    std::vector<LatticePoint> v_;
    std::vector<Weight> ew_;  // ew_[l-1] is the weight of compact edge l
};

struct PrincipalFaceInfo {
    Face face;
    Weight kappa;    // principal weight (of the face line, or the edge right of a principal vertex)
    ExtRational m;   // kappa2 / kappa1
    Rational d;      // Newton distance
};

PrincipalFaceInfo principal_face(const NewtonPolyhedron& np);

struct OrientationResult {
    BivariatePolynomial poly;
    bool swapped = false;
};

// Swaps the variables iff the principal weight has kappa2 < kappa1, so that
// afterwards kappa2 >= kappa1 holds; ties keep the original orientation.
OrientationResult canonical_orientation(const BivariatePolynomial& p);

struct FaceNotOnPolyhedron : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Restriction of p to the terms lying on the face.
BivariatePolynomial face_series(const BivariatePolynomial& p, const Face& f);

} // namespace restrikt
