#include "restrikt/conditions.hpp"

#include <algorithm>

namespace restrikt {

const char* HalfPlane::label_name() const {
    switch (label) {
        case Label::KappaLine: return "KappaLine";
        case Label::EdgeLine: return "EdgeLine";
        case Label::AdaptedLine: return "AdaptedLine";
        case Label::AxisP1: return "AxisP1";
        case Label::AxisP3: return "AxisP3";
    }
    return "?";
}

const char* Admissibility::proven_name() const {
    switch (proven) {
        case Proven::Yes: return "Yes";
        case Proven::No: return "No";
        case Proven::OpenEndpoint: return "OpenEndpoint";
        case Proven::OutsideTheorem: return "OutsideTheorem";
    }
    return "?";
}

namespace {

Rational weight_k2(const Weight& w) { return w.k2.value(); }

std::pair<Rational, Rational> edge_condition(const AugmentedPolyhedron& aug, size_t l) {
    // (a, c) of the condition a*x + y <= c for edge l (l = n+1 is horizontal).
    const Rational one_plus_m = 1 + aug.m;
    if (l <= aug.base.compact_edge_count()) {
        const Weight& w = aug.base.edge_weight(l);
        return {one_plus_m * w.k1, (w.k1 + weight_k2(w)) / 2};
    }
    Weight hw = aug.base.horizontal_weight();
    return {Rational(0), weight_k2(hw) / 2};
}

} // namespace

std::vector<HalfPlane> condition_halfplanes(const PhaseAnalysis& a) {
    std::vector<HalfPlane> hs;
    const Rational& h = a.heights.h;

    if (a.adapted) {
        const Rational& d = a.heights.d;
        hs.push_back({Rational(1) / d, Rational(1), Rational(1) / (2 * d),
                      HalfPlane::Label::AdaptedLine, 0});
    } else {
        const AugmentedPolyhedron& aug = *a.aug;
        const Rational one_plus_m = 1 + aug.m;
        hs.push_back({one_plus_m * aug.kappa.k1, Rational(1),
                      (aug.kappa.k1 + weight_k2(aug.kappa)) / 2,
                      HalfPlane::Label::KappaLine, 0});
        for (size_t l = aug.l0; l <= aug.la; ++l) {
            auto [coef, rhs] = edge_condition(aug, l);
            hs.push_back({coef, Rational(1), rhs, HalfPlane::Label::EdgeLine, l});
        }
    }
    hs.push_back({Rational(1), Rational(0), Rational(1, 2), HalfPlane::Label::AxisP1, 0});
    hs.push_back({Rational(0), Rational(1), Rational(1) / (2 * h), HalfPlane::Label::AxisP3, 0});
    return hs;
}

std::vector<ExponentPair> polygon_from_halfplanes(const std::vector<HalfPlane>& hs) {
    std::vector<ExponentPair> poly = {{Rational(0), Rational(0)},
                                      {Rational(1, 2), Rational(0)},
                                      {Rational(1, 2), Rational(1, 2)},
                                      {Rational(0), Rational(1, 2)}};
    for (const auto& hp : hs) {
        std::vector<ExponentPair> next;
        const size_t n = poly.size();
        for (size_t i = 0; i < n && !poly.empty(); ++i) {
            const ExponentPair& s = poly[i];
            const ExponentPair& e = poly[(i + 1) % n];
            bool sin = hp.contains(s), ein = hp.contains(e);
            if (sin != ein) {
                Rational denom = hp.a * (e.x - s.x) + hp.b * (e.y - s.y);
                Rational t = (hp.c - hp.a * s.x - hp.b * s.y) / denom;
                next.push_back({s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)});
            }
            if (ein) next.push_back(e);
        }
        poly = std::move(next);
    }
    // drop duplicates and collinear middle vertices
    auto dedupe = [](std::vector<ExponentPair>& v) {
        for (bool changed = true; changed && v.size() >= 3;) {
            changed = false;
            for (size_t i = 0; i < v.size(); ++i) {
                const ExponentPair& p = v[(i + v.size() - 1) % v.size()];
                const ExponentPair& q = v[i];
                const ExponentPair& r = v[(i + 1) % v.size()];
                Rational cr = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
                if (q == r || cr == 0) {
                    v.erase(v.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
    };
    dedupe(poly);
    // start at the origin
    auto it = std::find(poly.begin(), poly.end(), ExponentPair{Rational(0), Rational(0)});
    if (it != poly.end()) std::rotate(poly.begin(), it, poly.end());
    return poly;
}

AdmissiblePolygon admissible_polygon(const PhaseAnalysis& a) {
    AdmissiblePolygon poly;
    const Rational& h = a.heights.h;
    poly.ptilde_included = !(h == 1 || a.heights.nu == 1);
    if (!poly.ptilde_included)
        poly.excluded_reason = (h == 1) ? AdmissiblePolygon::ExclusionReason::HEqualsOne
                                        : AdmissiblePolygon::ExclusionReason::NuEqualsOne;

    ExponentPair O{Rational(0), Rational(0)};
    ExponentPair P{Rational(1, 2), Rational(0)};
    ExponentPair Pt{Rational(0), Rational(1) / (2 * h)};

    if (a.adapted) {
        poly.vertices = {O, P, Pt};
        return poly;
    }

    const AugmentedPolyhedron& aug = *a.aug;
    const Rational m = aug.m;
    const Rational k1 = aug.kappa.k1, k2 = weight_k2(aug.kappa);

    std::vector<ExponentPair> verts = {O, P};
    try {
        auto weight_of = [&](size_t l) -> std::pair<Rational, Rational> {
            if (l <= aug.base.compact_edge_count()) {
                const Weight& w = aug.base.edge_weight(l);
                return {w.k1, weight_k2(w)};
            }
            Weight hw = aug.base.horizontal_weight();
            return {Rational(0), weight_k2(hw)};
        };

        // P_{l0} from the kappa line and edge l0; P_l from edges l-1 and l.
        {
            auto [e1, e2] = weight_of(aug.l0);
            if (e1 == k1) throw DegenerateIntersection("parallel condition lines");
            Rational delta = (e2 - k2) / (e1 - k1);
            verts.push_back({(1 / (m + 1)) * (1 + delta) / 2, (k2 - k1 * delta) / 2});
        }
        for (size_t l = aug.l0 + 1; l <= aug.la; ++l) {
            auto [p1, p2] = weight_of(l - 1);
            auto [e1, e2] = weight_of(l);
            if (e1 == p1) throw DegenerateIntersection("parallel condition lines");
            Rational delta = (e2 - p2) / (e1 - p1);
            verts.push_back({(1 / (m + 1)) * (1 + delta) / 2, (p2 - p1 * delta) / 2});
        }
        verts.push_back(Pt);
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        poly.vertices = std::move(verts);
    } catch (const DegenerateIntersection&) {
        poly.degenerate_fallback = true;
        poly.vertices = polygon_from_halfplanes(condition_halfplanes(a));
    }
    return poly;
}

Admissibility is_admissible(const PhaseAnalysis& a, const ExponentPair& q) {
    Admissibility res;
    res.necessary = q.x >= 0 && q.y >= 0;
    if (res.necessary)
        for (const auto& hp : condition_halfplanes(a))
            if (!hp.contains(q)) { res.necessary = false; break; }
    if (!res.necessary) {
        res.proven = Admissibility::Proven::No;
        return res;
    }
    if (!a.adapted && a.heights.h_lin >= 2) {
        res.proven = Admissibility::Proven::OutsideTheorem;
        return res;
    }
    ExponentPair ptilde{Rational(0), Rational(1) / (2 * a.heights.h)};
    bool excluded = (a.heights.h == 1 || a.heights.nu == 1);
    if (q == ptilde && excluded) {
        res.proven = Admissibility::Proven::OpenEndpoint;
        return res;
    }
    res.proven = Admissibility::Proven::Yes;
    return res;
}

bool legendre_condition(const PhaseAnalysis& a, const ExponentPair& q) {
    if (!a.kfun) throw std::logic_error("legendre_condition: adapted phase has no K function");
    Rational w = (2 + 2 * a.aug->m) * q.x - 1;
    Rational lk = legendre_transform(*a.kfun, w);
    return q.y <= -lk / 2;
}

} // namespace restrikt
