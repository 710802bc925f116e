#include <doctest.h>

#include "restrikt/analysis.hpp"

#include <cmath>

using namespace restrikt;

namespace {

const char* kE1 = "x2^2 - 2 x1^2 x2 + x1^4 + x1^5";
const char* kE2 = "x1 x2^2 - 2 x1^3 x2 + x1^5 + x1^6";

AugmentedPolyhedron aug_of(const char* text) {
    auto a = analyze_phase(parse_polynomial(text));
    REQUIRE(a.aug.has_value());
    return *a.aug;
}

} // namespace

TEST_CASE("build_augmented: spec examples") {
    AugmentedPolyhedron a1 = aug_of(kE1);
    CHECK(a1.base.vertices() == std::vector<LatticePoint>{{0, 2}, {5, 0}});
    CHECK(a1.anchor == LatticePoint{0, 2});
    CHECK(a1.l0 == 1);
    CHECK(a1.la == 1);
    CHECK(a1.kappa.k1 * a1.anchor.t1 + a1.kappa.k2.value() * a1.anchor.t2 == 1);

    AugmentedPolyhedron a2 = aug_of(kE2);
    CHECK(a2.base.vertices() == std::vector<LatticePoint>{{1, 2}, {6, 0}});
    CHECK(a2.anchor == LatticePoint{1, 2});
    CHECK(a2.l0 == 1);
    CHECK(a2.la == 1);

    // synthetic slope-indexing case
    NewtonPolyhedron base = NewtonPolyhedron::from_support({{0, 3}, {1, 1}, {4, 0}});
    Weight kappa{Rational(1, 4), ExtRational(Rational(1, 2))};
    AugmentedPolyhedron a3 = build_augmented(base, kappa);
    CHECK(a3.l0 == 2);
    CHECK(a3.anchor == LatticePoint{1, 1});
}

TEST_CASE("build_augmented rejects horizontal principal weights") {
    NewtonPolyhedron base = NewtonPolyhedron::from_support({{0, 2}, {5, 0}});
    CHECK_THROWS_AS(build_augmented(base, Weight{Rational(0), ExtRational(Rational(1, 2))}),
                    CalledOnAdaptedInput);
}

TEST_CASE("k function: spec examples") {
    auto a1 = analyze_phase(parse_polynomial(kE1));
    const KFunction& k1 = *a1.kfun;
    CHECK(k1.u_min == Rational(1, 5));
    CHECK(k1.u_max == Rational(1, 4));
    CHECK(k1.infinite_left);
    CHECK(k1(Rational(1, 5)) == Rational(1, 2));
    CHECK(k1(Rational(1, 4)) == Rational(1, 2));
    CHECK(k1(Rational(9, 40)) == Rational(1, 2));

    auto a2 = analyze_phase(parse_polynomial(kE2));
    const KFunction& k2 = *a2.kfun;
    CHECK(k2.u_min == Rational(1, 6));
    CHECK(k2(Rational(1, 6)) == Rational(5, 12));
    CHECK(k2(Rational(1, 5)) == Rational(2, 5));
    // linear in between: pivot at the anchor (1,2)
    CHECK(k2(Rational(11, 60)) == (Rational(1) - Rational(11, 60)) / 2);

    // horizontal edge at B_n = 1 gives K(0) = 1
    NewtonPolyhedron base = NewtonPolyhedron::from_support({{0, 3}, {2, 1}});
    Weight kappa{Rational(1, 3), ExtRational(Rational(1, 3))};  // m = 1 supporting line
    AugmentedPolyhedron aug = build_augmented(base, kappa);
    KFunction k3 = k_function(aug);
    CHECK(!k3.infinite_left);
    CHECK(k3.u_min == Rational(0));
    CHECK(k3(Rational(0)) == Rational(1));
}

TEST_CASE("K is convex and non-increasing; Legendre transform is convex") {
    for (const char* text : {kE1, kE2}) {
        auto a = analyze_phase(parse_polynomial(text));
        const KFunction& k = *a.kfun;
        const auto& bp = k.breakpoints;
        // non-increasing in u
        for (size_t i = 0; i + 1 < bp.size(); ++i)
            CHECK(bp[i + 1].second <= bp[i].second);
        // convexity: slopes non-decreasing in u
        for (size_t i = 0; i + 2 < bp.size(); ++i) {
            Rational s1 = (bp[i + 1].second - bp[i].second) / (bp[i + 1].first - bp[i].first);
            Rational s2 = (bp[i + 2].second - bp[i + 1].second) / (bp[i + 2].first - bp[i + 1].first);
            CHECK(s1 <= s2);
        }
        // L(K) convex on a w grid
        Rational prev_diff(0);
        bool first = true;
        for (int w = -8; w <= 8; ++w) {
            Rational l0 = legendre_transform(k, Rational(w));
            Rational l1 = legendre_transform(k, Rational(w) + Rational(1, 2));
            Rational diff = l1 - l0;
            if (!first) CHECK(diff >= prev_diff);
            prev_diff = diff;
            first = false;
        }
    }
}

TEST_CASE("legendre transform: spec examples and brute-force grid") {
    auto a = analyze_phase(parse_polynomial(kE1));
    const KFunction& k = *a.kfun;
    CHECK(legendre_transform(k, Rational(0)) == Rational(-1, 2));
    // w very negative: attained at u_min
    Rational w(-1000);
    CHECK(legendre_transform(k, w) == w * k.u_min - k(k.u_min));

    for (const char* text : {kE1, kE2}) {
        auto an = analyze_phase(parse_polynomial(text));
        const KFunction& kf = *an.kfun;
        for (int wi = -6; wi <= 6; ++wi) {
            Rational w2(wi, 2);
            double exact = to_double(legendre_transform(kf, w2));
            double sup = -1e300;
            double umin = to_double(kf.u_min), umax = to_double(kf.u_max);
            int steps = static_cast<int>(std::ceil((umax - umin) / 1e-4));
            for (int i = 0; i <= steps; ++i) {
                double u = umin + (umax - umin) * i / steps;
                Rational ur = kf.u_min + (kf.u_max - kf.u_min) * Rational(i, steps);
                double val = to_double(w2) * u - to_double(kf(ur));
                sup = std::max(sup, val);
            }
            CHECK(std::fabs(exact - sup) < 1e-12 + 1e-9 * std::fabs(exact));
        }
    }
}

TEST_CASE("restriction height: formula, geometry, diagonal threshold") {
    auto a = analyze_phase(parse_polynomial(kE1));
    RestrictionHeight h1 = restriction_height(*a.aug, a.heights.d, Rational(1));
    CHECK(h1.value == Rational(4, 3));
    CHECK(h1.argmax_label == "d");
    CHECK(2 * (1 + h1.value) == Rational(14, 3));

    // h^{l0}_1 for E1 is 9/7
    Rational m = a.aug->m;
    const Weight& w = a.aug->base.edge_weight(1);
    Rational hl = ((1 + m) * w.k1 + 1) / (w.k1 + w.k2.value()) - 1;
    CHECK(hl == Rational(9, 7));

    for (const char* text : {kE1, kE2}) {
        auto an = analyze_phase(parse_polynomial(text));
        for (const Rational& r : {Rational(1, 3), Rational(1, 2), Rational(1),
                                  Rational(2), Rational(5)}) {
            RestrictionHeight rh = restriction_height(*an.aug, an.heights.d, r);
            CHECK(rh.value == restriction_height_geometric(*an.aug, r));
            CHECK(rh.value >= an.heights.d + 1 / r - 1);
        }
    }
    CHECK_THROWS_AS(restriction_height(*a.aug, a.heights.d, Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("base vertices right of the anchor stay on the augmented boundary") {
    for (const char* text : {kE1, kE2}) {
        auto a = analyze_phase(parse_polynomial(text));
        const auto& aug = *a.aug;
        const auto& v = aug.base.vertices();
        for (size_t i = aug.l0 - 1; i < v.size(); ++i) {
            // some supporting line of the augmented polyhedron passes through v_i
            bool on_boundary = false;
            std::vector<Weight> lines;
            lines.push_back(aug.kappa);
            for (size_t l = aug.l0; l <= aug.base.compact_edge_count(); ++l)
                lines.push_back(aug.base.edge_weight(l));
            if (!aug.base.horizontal_weight().k2.is_infinite())
                lines.push_back(aug.base.horizontal_weight());
            for (const auto& ln : lines)
                if (ln.k1 * v[i].t1 + ln.k2.value() * v[i].t2 == 1) on_boundary = true;
            if (v[i].t2 == 0) on_boundary = true;  // on the horizontal edge at the axis
            CHECK(on_boundary);
        }
    }
}
