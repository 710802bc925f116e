#include "restrikt/analysis.hpp"

namespace restrikt {

PhaseAnalysis analyze_phase(const BivariatePolynomial& p, bool normalize_grad) {
    PhaseAnalysis a;
    a.input = p;
    if (normalize_grad) {
        if (!a.input.is_zero() && a.input.coeff({0, 0}) != 0)
            throw ValidationError("NonzeroConstant", "phase does not vanish at the origin");
        a.input = normalize_gradient(a.input);
    }
    OriginCheck oc = check_origin_conditions(a.input);
    if (!oc.ok)
        throw ValidationError(oc.violation_name(), "origin conditions violated: " +
                                                       std::string(oc.violation_name()));

    OrientationResult orient = canonical_orientation(a.input);
    a.swapped = orient.swapped;
    a.phi = orient.poly;
    a.d_input = principal_face(NewtonPolyhedron::of(a.phi)).d;

    // Linear adaptation: the estimates assume d = h_lin, so apply the
    // witnessing linear change when the input is not linearly adapted.
    LinearHeightResult lh = linear_height(a.phi);
    if (lh.h_lin > a.d_input) {
        if (lh.swap_first) a.phi = swap_variables(a.phi);
        if (lh.shear_c)
            a.phi = apply_shear(a.phi, ShearMap(UnivariatePolynomial::monomial(*lh.shear_c, 1)));
        a.lin_swap = lh.swap_first;
        a.lin_shear_c = lh.shear_c;
        OrientationResult reorient = canonical_orientation(a.phi);
        a.phi = reorient.poly;
        a.lin_swap = (a.lin_swap != reorient.swapped);
        Rational d_now = principal_face(NewtonPolyhedron::of(a.phi)).d;
        if (d_now != lh.h_lin)
            throw std::logic_error("analyze_phase: linear adaptation did not reach h_lin");
    }

    a.np_phi = NewtonPolyhedron::of(a.phi);
    a.pf = principal_face(a.np_phi);

    a.adaptedness = adaptedness_test(a.phi);
    a.adapted = a.adaptedness.adapted;
    if (a.adapted) {
        a.trace.phi_a = a.phi;
    } else {
        a.trace = to_adapted(a.phi);
    }
    a.np_phia = NewtonPolyhedron::of(a.trace.phi_a);
    a.pf_a = principal_face(a.np_phia);

    a.heights.d = a.pf.d;
    a.heights.h = a.pf_a.d;
    a.heights.h_lin = lh.h_lin;
    a.heights.m = a.pf.m;
    a.heights.nu =
        (a.heights.h >= 2 && a.pf_a.face.kind == Face::Kind::Vertex) ? 1 : 0;

    if (!a.adapted) {
        a.aug = build_augmented(a.np_phia, a.pf.kappa);
        if (a.aug->la < a.aug->l0)
            throw std::logic_error("analyze_phase: la < l0 on a pipeline phase");
        if (!(Rational(a.aug->anchor.t2) >= Rational(a.aug->anchor.t1)))
            throw std::logic_error("analyze_phase: anchor below the bisectrix");
        a.kfun = k_function(*a.aug);
    }
    return a;
}

} // namespace restrikt
