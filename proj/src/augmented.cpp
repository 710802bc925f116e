#include "restrikt/augmented.hpp"

#include <algorithm>

namespace restrikt {

AugmentedPolyhedron build_augmented(const NewtonPolyhedron& base, const Weight& kappa) {
    if (kappa.k2.is_infinite() || kappa.k1 == 0)
        throw CalledOnAdaptedInput("build_augmented: principal weight must be finite and non-horizontal");
    AugmentedPolyhedron aug;
    aug.base = base;
    aug.kappa = kappa;
    aug.m = kappa.k2.value() / kappa.k1;

    const size_t n = base.compact_edge_count();
    size_t l0 = n + 1;
    for (size_t l = 1; l <= n; ++l) {
        if (base.slope_ratio(l) > ExtRational(aug.m)) { l0 = l; break; }
    }
    aug.l0 = l0;
    aug.anchor = base.vertices()[l0 - 1];

    PrincipalFaceInfo pf = principal_face(base);
    switch (pf.face.kind) {
        case Face::Kind::CompactEdge: {
            for (size_t l = 1; l <= n; ++l)
                if (base.vertices()[l - 1] == pf.face.a && base.vertices()[l] == pf.face.b) aug.la = l;
            break;
        }
        case Face::Kind::Vertex: {
            // the edge to the left of the principal vertex
            for (size_t i = 0; i < base.vertex_count(); ++i)
                if (base.vertices()[i] == pf.face.a) aug.la = i;
            break;
        }
        case Face::Kind::UnboundedHorizontalEdge:
            aug.la = n + 1;
            break;
        case Face::Kind::UnboundedVerticalEdge:
            throw std::logic_error("build_augmented: principal face of phi^a is the vertical edge");
    }
    return aug;
}

Rational KFunction::operator()(const Rational& u) const {
    if (u < u_min || u > u_max)
        throw std::domain_error("KFunction: argument outside the finite domain");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const auto& [u0, k0] = breakpoints[i];
        const auto& [u1, k1] = breakpoints[i + 1];
        if (u0 <= u && u <= u1) {
            if (u0 == u1) return k0;
            return k0 + (k1 - k0) * (u - u0) / (u1 - u0);
        }
    }
    return breakpoints.back().second;
}

KFunction k_function(const AugmentedPolyhedron& aug) {
    KFunction k;
    const auto& base = aug.base;
    const size_t n = base.compact_edge_count();

    std::vector<std::pair<Rational, Rational>> bp;
    Weight hw = base.horizontal_weight();
    if (!hw.k2.is_infinite())
        bp.emplace_back(Rational(0), hw.k2.value());
    else
        k.infinite_left = true;
    for (size_t l = n; l >= aug.l0 && l >= 1; --l) {
        const Weight& w = base.edge_weight(l);
        bp.emplace_back(w.k1, w.k2.value());
    }
    bp.emplace_back(aug.kappa.k1, aug.kappa.k2.value());

    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    k.breakpoints = std::move(bp);
    k.u_min = k.breakpoints.front().first;
    k.u_max = k.breakpoints.back().first;
    return k;
}

Rational legendre_transform(const KFunction& k, const Rational& w) {
    bool first = true;
    Rational best(0);
    for (const auto& [u, ku] : k.breakpoints) {
        Rational v = w * u - ku;
        if (first || v > best) { best = v; first = false; }
    }
    return best;
}

RestrictionHeight restriction_height(const AugmentedPolyhedron& aug, const Rational& d,
                                     const Rational& r) {
    if (r <= 0) throw std::invalid_argument("NonpositiveRatio");
    RestrictionHeight out;
    out.r = r;
    out.value = d + Rational(1) / r - 1;
    out.argmax_label = "d";

    const size_t n = aug.base.compact_edge_count();
    auto consider = [&](const Rational& k1, const Rational& k2, const std::string& label) {
        Rational h = ((1 + aug.m) * k1 + r) / (r * (k1 + k2)) - 1;
        if (h > out.value) { out.value = h; out.argmax_label = label; }
    };
    for (size_t l = aug.l0; l <= n; ++l) {
        const Weight& w = aug.base.edge_weight(l);
        consider(w.k1, w.k2.value(), "edge " + std::to_string(l));
    }
    Weight hw = aug.base.horizontal_weight();
    if (!hw.k2.is_infinite()) consider(Rational(0), hw.k2.value(), "horizontal");
    // B_n = 0 makes the horizontal edge contribute -1 (the kappa2 -> inf
    // limit), which never attains the max since d >= 1.
    return out;
}

Rational restriction_height_geometric(const AugmentedPolyhedron& aug, const Rational& r) {
    if (r <= 0) throw std::invalid_argument("NonpositiveRatio");
    const Rational shift = (1 + aug.m) / r;  // the line is t2 = t1 + shift
    const auto& v = aug.base.vertices();
    const size_t n = aug.base.compact_edge_count();

    // Ray of L_kappa above the anchor.
    {
        const Rational k1 = aug.kappa.k1, k2 = aug.kappa.k2.value();
        Rational t2 = (1 + k1 * shift) / (k1 + k2);
        if (t2 >= Rational(aug.anchor.t2)) return t2 - 1;
    }
    // Compact edges to the right of the anchor.
    for (size_t l = aug.l0; l <= n; ++l) {
        const Weight& w = aug.base.edge_weight(l);
        Rational t2 = (1 + w.k1 * shift) / (w.k1 + w.k2.value());
        if (Rational(v[l].t2) <= t2 && t2 <= Rational(v[l - 1].t2)) return t2 - 1;
    }
    // Horizontal edge.
    {
        Rational t2(v[n].t2);
        if (t2 - shift >= Rational(v[n].t1)) return t2 - 1;
    }
    throw std::logic_error("restriction_height_geometric: no intersection with the diagram");
}

} // namespace restrikt
