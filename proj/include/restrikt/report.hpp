#pragma once

#include "restrikt/classify.hpp"
#include "restrikt/oscillate.hpp"

#include <string>

namespace restrikt {

inline constexpr const char* kToolVersion = "0.1.0";

// The full invariant bundle for one phase, ready for serialization.
struct AnalysisReport {
    std::string input_text;
    PhaseAnalysis analysis;
    std::vector<HalfPlane> halfplanes;
    AdmissiblePolygon polygon;
    SingularityClass sclass;
    std::optional<ExponentPair> critical;
    std::optional<RestrictionHeight> hres1;   // r = 1, non-adapted only
};

AnalysisReport build_report(const std::string& phi_text, bool normalize_grad = false);
AnalysisReport build_report(const BivariatePolynomial& p, const std::string& echo,
                            bool normalize_grad = false);

// Deterministic JSON: fixed key order, rationals as "num/den" strings.
std::string report_to_json(const AnalysisReport& r, int indent = 2);

// CSV emitters (17 significant digits, one row per vertex / breakpoint).
std::string polygon_to_csv(const AdmissiblePolygon& poly);
std::string kfunction_to_csv(const KFunction& k);
// Boundary polyline of the augmented polyhedron: a point on the ray, the
// anchor, the base vertices right of it, and a point on the horizontal edge.
std::string augmented_to_csv(const AugmentedPolyhedron& aug);
// One row per lambda: lambda, re, im, abs, err_est.
std::string decay_to_csv(const std::vector<DecaySample>& samples);

std::string error_json(const std::string& code, const std::string& message);

} // namespace restrikt
