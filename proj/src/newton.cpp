#include "restrikt/newton.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace restrikt {

namespace {

long long cross(LatticePoint o, LatticePoint a, LatticePoint b) {
    return (a.t1 - o.t1) * (b.t2 - o.t2) - (a.t2 - o.t2) * (b.t1 - o.t1);
}

Weight line_through(LatticePoint p, LatticePoint q) {
    // Solve k1*t1 + k2*t2 = 1 through two staircase vertices (p left of q).
    Int det = Int(q.t1) * p.t2 - Int(p.t1) * q.t2;
    assert(det > 0);
    Rational k1(Int(p.t2) - q.t2, det);
    Rational k2(Int(q.t1) - p.t1, det);
    return Weight{k1, ExtRational(k2)};
}

} // namespace

NewtonPolyhedron NewtonPolyhedron::from_support(const std::vector<LatticePoint>& support) {
    if (support.empty()) throw std::invalid_argument("EmptySupport");

    // Keep, per t1, the smallest t2, and drop points dominated by an
    // earlier staircase point; then a monotone chain removes non-vertices.
    std::vector<LatticePoint> pts = support;
    std::sort(pts.begin(), pts.end());
    std::vector<LatticePoint> minimal;
    long long best_t2 = -1;
    for (const auto& p : pts) {
        if (!minimal.empty() && minimal.back().t1 == p.t1) continue;  // larger t2, same t1
        if (best_t2 >= 0 && p.t2 >= best_t2) continue;                // dominated
        minimal.push_back(p);
        best_t2 = p.t2;
    }

    std::vector<LatticePoint> hull;
    for (const auto& p : minimal) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }

    NewtonPolyhedron np;
    np.v_ = std::move(hull);
    np.ew_.reserve(np.v_.size() - 1);
    for (size_t l = 1; l < np.v_.size(); ++l)
        np.ew_.push_back(line_through(np.v_[l - 1], np.v_[l]));
    return np;
}

const Weight& NewtonPolyhedron::edge_weight(size_t l) const {
    if (l < 1 || l > compact_edge_count()) throw std::out_of_range("edge_weight index");
    return ew_[l - 1];
}

ExtRational NewtonPolyhedron::slope_ratio(size_t l) const {
    if (l == 0) return ExtRational(Rational(0));
    if (l == compact_edge_count() + 1) return ExtRational::infinity();
    const Weight& w = edge_weight(l);
    return ExtRational(w.k2.value() / w.k1);
}

Weight NewtonPolyhedron::horizontal_weight() const {
    long long bn = v_.back().t2;
    if (bn == 0) return Weight{Rational(0), ExtRational::infinity()};
    return Weight{Rational(0), ExtRational(Rational(1, bn))};
}

std::optional<Weight> NewtonPolyhedron::vertical_weight() const {
    long long a0 = v_.front().t1;
    if (a0 == 0) return std::nullopt;
    return Weight{Rational(1, a0), ExtRational(Rational(0))};
}

Face NewtonPolyhedron::vertex_face(size_t i) const {
    return Face{Face::Kind::Vertex, v_.at(i), v_.at(i), std::nullopt};
}

Face NewtonPolyhedron::compact_edge_face(size_t l) const {
    return Face{Face::Kind::CompactEdge, v_.at(l - 1), v_.at(l), edge_weight(l)};
}

Face NewtonPolyhedron::vertical_face() const {
    return Face{Face::Kind::UnboundedVerticalEdge, v_.front(), v_.front(), vertical_weight()};
}

Face NewtonPolyhedron::horizontal_face() const {
    std::optional<Weight> w;
    if (v_.back().t2 > 0) w = horizontal_weight();
    return Face{Face::Kind::UnboundedHorizontalEdge, v_.back(), v_.back(), w};
}

bool NewtonPolyhedron::contains(LatticePoint t) const {
    if (t.t1 < v_.front().t1) return false;
    if (t.t2 < v_.back().t2) return false;
    for (const auto& w : ew_) {
        if (w.k1 * t.t1 + w.k2.value() * t.t2 < 1) return false;
    }
    return true;
}

PrincipalFaceInfo principal_face(const NewtonPolyhedron& np) {
    const auto& v = np.vertices();
    const size_t n = np.compact_edge_count();

    // Weight assigned to a principal vertex v_i: the edge having it as its
    // left endpoint, i.e. the compact edge i+1, or the horizontal edge.
    auto vertex_info = [&](size_t i) {
        PrincipalFaceInfo info;
        info.face = np.vertex_face(i);
        info.d = Rational(v[i].t1);
        if (i + 1 <= n) {
            info.kappa = np.edge_weight(i + 1);
            info.m = ExtRational(info.kappa.k2.value() / info.kappa.k1);
        } else {
            // A principal vertex (B, B) on the t1-axis would be the origin,
            // which origin conditions exclude.
            if (v[i].t2 == 0)
                throw std::logic_error("principal_face: bisectrix vertex on the t1-axis");
            info.kappa = np.horizontal_weight();
            info.m = ExtRational::infinity();
        }
        return info;
    };

    // Vertices on the bisectrix take priority (minimal dimension).
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i].t1 == v[i].t2) return vertex_info(i);

    // Vertical unbounded edge {t1 = A0, t2 >= B0}: crossed iff A0 > B0.
    if (v.front().t1 > v.front().t2) {
        PrincipalFaceInfo info;
        info.face = np.vertical_face();
        info.d = Rational(v.front().t1);
        if (auto w = np.vertical_weight()) {
            info.kappa = *w;
            info.m = ExtRational(Rational(0));
        } else {
            throw std::logic_error("principal_face: vertical edge on the t2-axis cannot meet the bisectrix");
        }
        return info;
    }

    // Compact edges: bisectrix point d = 1/(k1+k2), interior iff strictly
    // between the endpoint abscissas.
    for (size_t l = 1; l <= n; ++l) {
        const Weight& w = np.edge_weight(l);
        Rational d = Rational(1) / (w.k1 + w.k2.value());
        if (Rational(v[l - 1].t1) < d && d < Rational(v[l].t1)) {
            PrincipalFaceInfo info;
            info.face = np.compact_edge_face(l);
            info.kappa = w;
            info.m = ExtRational(w.k2.value() / w.k1);
            info.d = d;
            return info;
        }
    }

    // Horizontal unbounded edge {t1 >= A_n, t2 = B_n}: crossed iff B_n > A_n.
    if (v.back().t2 > v.back().t1) {
        PrincipalFaceInfo info;
        info.face = np.horizontal_face();
        info.d = Rational(v.back().t2);
        info.kappa = np.horizontal_weight();
        info.m = ExtRational::infinity();
        return info;
    }

    throw std::logic_error("principal_face: bisectrix crossing not found");
}

OrientationResult canonical_orientation(const BivariatePolynomial& p) {
    NewtonPolyhedron np = NewtonPolyhedron::of(p);
    PrincipalFaceInfo pf = principal_face(np);
    bool swap;
    if (pf.kappa.k2.is_infinite()) swap = false;       // kappa2 = inf >= kappa1
    else swap = pf.kappa.k2.value() < pf.kappa.k1;
    if (!swap) return {p, false};
    return {swap_variables(p), true};
}

BivariatePolynomial face_series(const BivariatePolynomial& p, const Face& f) {
    NewtonPolyhedron np = NewtonPolyhedron::of(p);
    const auto& v = np.vertices();

    auto is_vertex = [&](LatticePoint q) {
        return std::find(v.begin(), v.end(), q) != v.end();
    };

    BivariatePolynomial out;
    switch (f.kind) {
        case Face::Kind::Vertex: {
            if (!is_vertex(f.a)) throw FaceNotOnPolyhedron("vertex is not on the polyhedron");
            out.set(f.a, p.coeff(f.a));
            return out;
        }
        case Face::Kind::CompactEdge: {
            if (!is_vertex(f.a) || !is_vertex(f.b) || !(f.a < f.b) || !f.weight)
                throw FaceNotOnPolyhedron("edge endpoints are not polyhedron vertices");
            const Weight& w = *f.weight;
            for (const auto& [pt, c] : p.terms())
                if (w.k1 * pt.t1 + w.k2.value() * pt.t2 == 1) out.set(pt, c);
            // Both endpoints must be support points of the edge line.
            if (out.coeff(f.a) == 0 || out.coeff(f.b) == 0)
                throw FaceNotOnPolyhedron("edge does not bound the polyhedron");
            return out;
        }
        case Face::Kind::UnboundedVerticalEdge: {
            if (f.a != v.front()) throw FaceNotOnPolyhedron("vertical edge mismatch");
            for (const auto& [pt, c] : p.terms())
                if (pt.t1 == f.a.t1) out.set(pt, c);
            return out;
        }
        case Face::Kind::UnboundedHorizontalEdge: {
            if (f.a != v.back()) throw FaceNotOnPolyhedron("horizontal edge mismatch");
            for (const auto& [pt, c] : p.terms())
                if (pt.t2 == f.a.t2) out.set(pt, c);
            return out;
        }
    }
    throw FaceNotOnPolyhedron("unknown face kind");
}

} // namespace restrikt
