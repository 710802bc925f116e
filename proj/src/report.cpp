#include "restrikt/report.hpp"

#include <json.hpp>

#include <sstream>
#include <iomanip>

namespace restrikt {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string frac(const Rational& q) { return to_fraction_string(q); }

ordered_json weight_json(const Weight& w) {
    ordered_json j;
    j["k1"] = frac(w.k1);
    j["k2"] = w.k2.str();
    return j;
}

ordered_json polyhedron_json(const NewtonPolyhedron& np) {
    ordered_json j;
    ordered_json verts = ordered_json::array();
    for (const auto& v : np.vertices()) verts.push_back({v.t1, v.t2});
    j["vertices"] = verts;
    ordered_json edges = ordered_json::array();
    for (size_t l = 1; l <= np.compact_edge_count(); ++l)
        edges.push_back(weight_json(np.edge_weight(l)));
    j["edges"] = edges;
    return j;
}

ordered_json pair_json(const ExponentPair& q) {
    return ordered_json::array({frac(q.x), frac(q.y)});
}

std::string decimal17(const Rational& q) {
    std::ostringstream os;
    os << std::setprecision(17) << to_double(q);
    return os.str();
}

} // namespace

AnalysisReport build_report(const std::string& phi_text, bool normalize_grad) {
    return build_report(parse_polynomial(phi_text), phi_text, normalize_grad);
}

AnalysisReport build_report(const BivariatePolynomial& p, const std::string& echo,
                            bool normalize_grad) {
    AnalysisReport r;
    r.input_text = echo;
    r.analysis = analyze_phase(p, normalize_grad);
    r.halfplanes = condition_halfplanes(r.analysis);
    r.polygon = admissible_polygon(r.analysis);
    r.sclass = classify(r.analysis);
    if (r.sclass.applicable()) r.critical = critical_exponent(r.sclass).q;
    if (!r.analysis.adapted) {
        r.hres1 = restriction_height(*r.analysis.aug, r.analysis.heights.d, Rational(1));
    }
    return r;
}

std::string report_to_json(const AnalysisReport& r, int indent) {
    const PhaseAnalysis& a = r.analysis;
    ordered_json j;
    j["tool"] = "restrikt";
    j["version"] = kToolVersion;

    ordered_json in;
    in["phi"] = r.input_text;
    in["swapped"] = a.swapped;
    in["linear_adaptation"] = nullptr;
    if (a.lin_shear_c || a.lin_swap) {
        ordered_json la;
        la["swap"] = a.lin_swap;
        la["shear_c"] = a.lin_shear_c ? ordered_json(frac(*a.lin_shear_c)) : ordered_json(nullptr);
        in["linear_adaptation"] = la;
    }
    j["input"] = in;

    ordered_json phase;
    phase["phi"] = a.phi.to_string();
    phase["psi"] = a.trace.psi.to_string();
    phase["phi_adapted"] = a.trace.phi_a.to_string();
    ordered_json steps = ordered_json::array();
    for (const auto& s : a.trace.steps) {
        ordered_json st;
        st["shear"] = frac(s.b) + " x1^" + std::to_string(s.m);
        st["d_after"] = frac(s.d_after);
        st["newton_after"] = polyhedron_json(NewtonPolyhedron::of(s.phase_after));
        steps.push_back(st);
    }
    phase["varchenko_steps"] = steps;
    j["phase"] = phase;

    ordered_json newton;
    newton["phi"] = polyhedron_json(a.np_phi);
    newton["phi_adapted"] = polyhedron_json(a.np_phia);
    if (a.aug) {
        ordered_json augj;
        augj["kappa"] = weight_json(a.aug->kappa);
        augj["anchor"] = {a.aug->anchor.t1, a.aug->anchor.t2};
        augj["l0"] = a.aug->l0;
        augj["la"] = a.aug->la;
        newton["augmented"] = augj;
    } else {
        newton["augmented"] = nullptr;
    }
    j["newton"] = newton;

    ordered_json heights;
    heights["d"] = frac(a.heights.d);
    heights["d_input"] = frac(a.d_input);
    heights["h"] = frac(a.heights.h);
    heights["h_lin"] = frac(a.heights.h_lin);
    heights["nu"] = a.heights.nu;
    heights["m"] = a.heights.m.str();
    j["heights"] = heights;

    ordered_json ad;
    ad["adapted"] = a.adapted;
    ad["reason"] = a.adaptedness.reason_name();
    if (a.adaptedness.root) {
        ad["root"] = frac(*a.adaptedness.root);
        ad["multiplicity"] = a.adaptedness.multiplicity;
    }
    j["adaptedness"] = ad;

    if (a.kfun) {
        ordered_json kj;
        kj["u_min"] = frac(a.kfun->u_min);
        kj["u_max"] = frac(a.kfun->u_max);
        kj["infinite_left"] = a.kfun->infinite_left;
        ordered_json bps = ordered_json::array();
        for (const auto& [u, ku] : a.kfun->breakpoints)
            bps.push_back({frac(u), frac(ku)});
        kj["breakpoints"] = bps;
        j["k_function"] = kj;
    } else {
        j["k_function"] = nullptr;
    }

    if (r.hres1) {
        ordered_json hj;
        hj["r"] = frac(r.hres1->r);
        hj["value"] = frac(r.hres1->value);
        hj["argmax"] = r.hres1->argmax_label;
        j["restriction_height"] = hj;
    } else {
        j["restriction_height"] = nullptr;
    }

    ordered_json hps = ordered_json::array();
    for (const auto& hp : r.halfplanes) {
        ordered_json hj;
        hj["a"] = frac(hp.a);
        hj["b"] = frac(hp.b);
        hj["c"] = frac(hp.c);
        hj["label"] = hp.label_name();
        if (hp.label == HalfPlane::Label::EdgeLine) hj["edge"] = hp.edge_index;
        hps.push_back(hj);
    }
    j["halfplanes"] = hps;

    ordered_json pj;
    ordered_json pv = ordered_json::array();
    for (const auto& q : r.polygon.vertices) pv.push_back(pair_json(q));
    pj["vertices"] = pv;
    pj["ptilde_included"] = r.polygon.ptilde_included;
    pj["degenerate_fallback"] = r.polygon.degenerate_fallback;
    pj["ptilde_excluded_reason"] =
        !r.polygon.excluded_reason ? ordered_json(nullptr)
        : (*r.polygon.excluded_reason == AdmissiblePolygon::ExclusionReason::HEqualsOne
               ? ordered_json("HEqualsOne")
               : ordered_json("NuEqualsOne"));
    j["polygon"] = pj;

    ordered_json cj;
    cj["kind"] = r.sclass.label();
    if (r.sclass.applicable()) {
        cj["m"] = r.sclass.m;
        if (r.sclass.finite()) cj["n"] = r.sclass.n;
    }
    j["class"] = cj;
    j["critical_exponent"] = r.critical ? pair_json(*r.critical) : ordered_json(nullptr);

    ordered_json hyp;
    hyp["h_lin_below_2"] = a.heights.h_lin < 2;
    hyp["nu_from_computed_adapted_system"] = true;
    hyp["b0_identically_zero"] = r.sclass.kind == SingularityClass::Kind::AInf ||
                                 r.sclass.kind == SingularityClass::Kind::DInf;
    j["hypotheses"] = hyp;

    if (!a.adapted && a.heights.h_lin >= 2) {
        ordered_json suf;
        suf["status"] = "outside_theorem";
        suf["kt_anchor"] = pair_json({Rational(1, 2), Rational(0)});
        suf["axis_anchor"] = pair_json({Rational(0), Rational(1) / (2 * a.heights.h)});
        if (r.hres1) suf["diagonal_p3_threshold"] = frac(2 * (1 + r.hres1->value));
        j["known_sufficient_subregions"] = suf;
    } else {
        j["known_sufficient_subregions"] = nullptr;
    }

    return j.dump(indent) + "\n";
}

std::string polygon_to_csv(const AdmissiblePolygon& poly) {
    std::ostringstream os;
    os << "inv_p1p,inv_p3p\n";
    for (const auto& q : poly.vertices)
        os << decimal17(q.x) << "," << decimal17(q.y) << "\n";
    return os.str();
}

std::string kfunction_to_csv(const KFunction& k) {
    std::ostringstream os;
    os << "u,K\n";
    for (const auto& [u, ku] : k.breakpoints)
        os << decimal17(u) << "," << decimal17(ku) << "\n";
    return os.str();
}

std::string augmented_to_csv(const AugmentedPolyhedron& aug) {
    std::ostringstream os;
    os << "t1,t2,kind\n";
    // a point of the ray two units above the anchor, on the kappa line
    Rational t2 = Rational(aug.anchor.t2) + 2;
    Rational t1 = (1 - aug.kappa.k2.value() * t2) / aug.kappa.k1;
    os << decimal17(t1) << "," << decimal17(t2) << ",ray\n";
    const auto& v = aug.base.vertices();
    for (size_t i = aug.l0 - 1; i < v.size(); ++i)
        os << v[i].t1 << "," << v[i].t2 << ",vertex\n";
    os << (v.back().t1 + 2) << "," << v.back().t2 << ",horizontal\n";
    return os.str();
}

std::string decay_to_csv(const std::vector<DecaySample>& samples) {
    std::ostringstream os;
    os << "lambda,re,im,abs,err_est\n";
    os << std::setprecision(17);
    for (const auto& s : samples)
        os << s.lambda << "," << s.value.real() << "," << s.value.imag() << ","
           << std::abs(s.value) << "," << s.err_est << "\n";
    return os.str();
}

std::string error_json(const std::string& code, const std::string& message) {
    ordered_json j;
    j["error"]["code"] = code;
    j["error"]["message"] = message;
    return j.dump(2) + "\n";
}

} // namespace restrikt
