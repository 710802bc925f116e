#include "restrikt/adapted.hpp"

#include <algorithm>

namespace restrikt {

const char* AdaptednessReport::reason_name() const {
    switch (reason) {
        case Reason::PrincipalFaceVertex: return "PrincipalFaceVertex";
        case Reason::PrincipalFaceUnbounded: return "PrincipalFaceUnbounded";
        case Reason::NonIntegerM: return "NonIntegerM";
        case Reason::NoExcessRoot: return "NoExcessRoot";
        case Reason::ExcessRootFound: return "ExcessRootFound";
    }
    return "?";
}

AdaptednessReport adaptedness_test(const BivariatePolynomial& p) {
    AdaptednessReport rep;
    NewtonPolyhedron np = NewtonPolyhedron::of(p);
    PrincipalFaceInfo pf = principal_face(np);

    if (pf.face.kind == Face::Kind::Vertex) {
        rep.reason = AdaptednessReport::Reason::PrincipalFaceVertex;
        return rep;
    }
    if (pf.face.kind != Face::Kind::CompactEdge) {
        rep.reason = AdaptednessReport::Reason::PrincipalFaceUnbounded;
        return rep;
    }
    if (pf.m.is_infinite() || !is_integer(pf.m.value()) || pf.m.value() < 1) {
        rep.reason = AdaptednessReport::Reason::NonIntegerM;
        return rep;
    }
    long long m = pf.m.value().convert_to<long long>();

    // Real roots x2 = c x1^m (c != 0) of the principal part, read off the
    // x2-factorization of phi_pr(1, .). For integer m the x1 < 0 branch
    // carries the same roots up to the sign (-1)^m with equal multiplicities,
    // so one branch decides.
    BivariatePolynomial pr = face_series(p, pf.face);
    UnivariatePolynomial q = pr.restrict_x1(Rational(1));

    int best_mult = 0;
    std::optional<Rational> best_root;
    int rational_nonzero_roots = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(q)) {
        auto roots = rational_roots(factor);
        int real_roots = count_real_roots(factor);
        int nonzero_rational = 0;
        for (const auto& [r, rm] : roots) {
            (void)rm;
            if (r == 0) { --real_roots; continue; }
            ++nonzero_rational;
            if (Rational(mult) > pf.d && mult > best_mult) {
                best_mult = mult;
                best_root = r;
            }
        }
        rational_nonzero_roots += nonzero_rational;
        // With kappa2 >= kappa1 an excess root is always rational: an
        // irrational one would bring its conjugates at equal multiplicity
        // and overflow the degree of phi_pr(1, .). Guard regardless.
        if (Rational(mult) > pf.d && real_roots > nonzero_rational) {
            UnivariatePolynomial f = factor;
            Rational b = root_bound(f);
            auto [lo, hi] = bisect_root(f, -b, b, Rational(1, 1024));
            throw IrrationalRootEncountered(
                "excess root of the principal part is irrational; bracketed in [" +
                to_fraction_string(lo) + ", " + to_fraction_string(hi) + "]");
        }
    }

    if (best_root) {
        rep.adapted = false;
        rep.reason = AdaptednessReport::Reason::ExcessRootFound;
        rep.root = best_root;
        rep.multiplicity = best_mult;
        rep.m = m;
        return rep;
    }
    rep.reason = AdaptednessReport::Reason::NoExcessRoot;
    return rep;
}

std::pair<Rational, long long> varchenko_step(const BivariatePolynomial& p) {
    AdaptednessReport rep = adaptedness_test(p);
    if (rep.adapted) throw CalledOnAdapted("varchenko_step on an adapted phase");
    return {*rep.root, rep.m};
}

VarchenkoTrace to_adapted(const BivariatePolynomial& p, int max_iter) {
    VarchenkoTrace trace;
    BivariatePolynomial cur = p;
    Rational d_prev = principal_face(NewtonPolyhedron::of(cur)).d;
    for (int iter = 0; iter < max_iter; ++iter) {
        AdaptednessReport rep = adaptedness_test(cur);
        if (rep.adapted) {
            trace.phi_a = cur;
            return trace;
        }
        UnivariatePolynomial incr = UnivariatePolynomial::monomial(*rep.root, static_cast<int>(rep.m));
        trace.psi = trace.psi + incr;
        cur = apply_shear(cur, ShearMap(incr));
        Rational d_new = principal_face(NewtonPolyhedron::of(cur)).d;
        if (!(d_new > d_prev))
            throw std::logic_error("to_adapted: Newton distance did not increase");
        d_prev = d_new;
        trace.steps.push_back({*rep.root, rep.m, cur, d_new});
    }
    trace.phi_a = cur;
    trace.converged = false;
    throw IterationCapReached("to_adapted: iteration cap reached after " +
                                  std::to_string(max_iter) + " steps",
                              trace);
}

Rational height(const BivariatePolynomial& p) {
    VarchenkoTrace trace = to_adapted(canonical_orientation(p).poly);
    return principal_face(NewtonPolyhedron::of(trace.phi_a)).d;
}

LinearHeightResult linear_height(const BivariatePolynomial& p) {
    Rational d0 = principal_face(NewtonPolyhedron::of(p)).d;
    LinearHeightResult best{d0, false, std::nullopt};

    for (bool swapped : {false, true}) {
        BivariatePolynomial base = swapped ? swap_variables(p) : p;
        NewtonPolyhedron np = NewtonPolyhedron::of(base);
        for (size_t l = 1; l <= np.compact_edge_count(); ++l) {
            BivariatePolynomial edge_poly = face_series(base, np.compact_edge_face(l));
            UnivariatePolynomial q = edge_poly.restrict_x1(Rational(1));
            for (const auto& [c, mult] : rational_roots(q)) {
                (void)mult;
                if (c == 0) continue;
                BivariatePolynomial sheared =
                    apply_shear(base, ShearMap(UnivariatePolynomial::monomial(c, 1)));
                Rational d = principal_face(NewtonPolyhedron::of(sheared)).d;
                if (d > best.h_lin) best = {d, swapped, c};
            }
        }
    }
    return best;
}

int varchenko_exponent(const BivariatePolynomial& p) {
    VarchenkoTrace trace = to_adapted(canonical_orientation(p).poly);
    NewtonPolyhedron np = NewtonPolyhedron::of(trace.phi_a);
    PrincipalFaceInfo pf = principal_face(np);
    if (pf.d >= 2 && pf.face.kind == Face::Kind::Vertex) return 1;
    return 0;
}

} // namespace restrikt
