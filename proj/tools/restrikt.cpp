// restrikt: Newton-polyhedron invariants and mixed-norm restriction
// exponent regions for bivariate polynomial phases, plus a floating-point
// harness verifying the oscillatory decay laws behind them.

#include "restrikt/report.hpp"
#include "restrikt/oscillate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace restrikt;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text;
}

int thread_count(int flag_value) {
    if (const char* env = std::getenv("RESTRIKT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return flag_value;
}

struct VerifyOptions {
    std::string phi_text;
    bool normalize = false;
    bool csv = false;
    int lam_min = 10, lam_max = 20;
    int eps_min = 1, eps_max = 20;
    double tol = 0.05;
    int threads = 0;
    std::string qx, qy;  // dual exponent point for the Knapp exponent check
    std::string out;
};

int run_verify_decay(const VerifyOptions& opt) {
    AnalysisReport rep = build_report(opt.phi_text, opt.normalize);
    const PhaseAnalysis& a = rep.analysis;
    QuadratureConfig cfg;
    cfg.threads = thread_count(opt.threads);
    cfg = cfg.with_budget(M_PI);

    auto samples = decay_sweep(a.phi, a.trace.psi, opt.lam_min, opt.lam_max, cfg);
    DecayFit fit = decay_exponent_fit(samples, a.heights.nu);
    DecayVerdict v = compare_to(fit, a.heights.h, a.heights.nu, opt.tol);
    if (static_cast<int>(samples.size()) < 8) {
        v.verdict = Verdict::Inconclusive;
        v.detail = "grid too short: need at least 8 dyadic samples";
    }
    if (opt.csv) {
        write_output(decay_to_csv(samples), opt.out);
        return v.verdict == Verdict::Pass ? kExitOk
             : v.verdict == Verdict::Fail ? kExitFail : kExitInconclusive;
    }

    ordered_json j;
    j["check"] = "decay";
    j["phi"] = opt.phi_text;
    j["h"] = to_fraction_string(a.heights.h);
    j["nu"] = a.heights.nu;
    j["expected_slope"] = v.expected;
    j["slope"] = fit.slope;
    j["log_corrected_slope"] = fit.log_corrected_slope;
    j["r2"] = fit.r2;
    j["tol"] = v.tol;
    ordered_json rows = ordered_json::array();
    for (const auto& s : samples) {
        ordered_json r;
        r["lambda"] = s.lambda;
        r["abs"] = std::abs(s.value);
        r["err_est"] = s.err_est;
        rows.push_back(r);
    }
    j["samples"] = rows;
    j["verdict"] = v.verdict == Verdict::Pass ? "PASS"
                 : v.verdict == Verdict::Fail ? "FAIL" : "INCONCLUSIVE";
    if (!v.detail.empty()) j["detail"] = v.detail;
    write_output(j.dump(2) + "\n", opt.out);
    return v.verdict == Verdict::Pass ? kExitOk
         : v.verdict == Verdict::Fail ? kExitFail : kExitInconclusive;
}

int run_verify_knapp(const VerifyOptions& opt) {
    AnalysisReport rep = build_report(opt.phi_text, opt.normalize);
    const PhaseAnalysis& a = rep.analysis;
    if (a.adapted) {
        std::cerr << error_json("AdaptedPhase", "knapp check needs a non-adapted phase");
        return kExitValidation;
    }
    ordered_json j;
    j["check"] = "knapp";
    j["phi"] = opt.phi_text;
    double worst = 0.0;
    ordered_json per_weight = ordered_json::array();
    std::vector<Weight> weights;
    weights.push_back(a.aug->kappa);
    for (size_t l = a.aug->l0; l <= a.aug->base.compact_edge_count(); ++l)
        weights.push_back(a.aug->base.edge_weight(l));
    for (const auto& w : weights) {
        KnappReport kr = knapp_box_check(a.phi, w, a.trace.psi, opt.eps_min, opt.eps_max);
        worst = std::max(worst, kr.max_ratio);
        ordered_json wj;
        wj["k1"] = to_fraction_string(w.k1);
        wj["k2"] = w.k2.str();
        wj["max_sup_ratio"] = kr.max_ratio;
        if (!opt.qx.empty() && !opt.qy.empty()) {
            auto chk = knapp_exponent_check(a.aug->m, w, parse_rational(opt.qx),
                                            parse_rational(opt.qy));
            ordered_json cj;
            cj["lhs"] = to_fraction_string(chk.lhs);
            cj["rhs"] = to_fraction_string(chk.rhs);
            cj["holds"] = chk.holds;
            cj["equality"] = chk.equality;
            wj["exponent_check"] = cj;
        }
        per_weight.push_back(wj);
    }
    j["weights"] = per_weight;
    j["max_sup_ratio"] = worst;
    bool pass = worst <= 10.0;
    j["verdict"] = pass ? "PASS" : "FAIL";
    write_output(j.dump(2) + "\n", opt.out);
    return pass ? kExitOk : kExitFail;
}

int run_verify_vdc(const VerifyOptions& opt) {
    QuadratureConfig cfg;
    cfg = cfg.with_budget(M_PI);
    // f(s) = s^2 on [0, 1] with unit amplitude: the Fresnel reference case.
    UnivariatePolynomial f = UnivariatePolynomial::monomial(Rational(1), 2);
    VdcResult r = van_der_corput_check(f, 2, false, 0.0, 1.0, opt.lam_min, opt.lam_max, cfg);
    const double ref = std::sqrt(M_PI) / 2.0;
    bool pass = r.hypothesis_ok && std::fabs(r.sup_statistic - ref) <= 0.02 * ref;
    ordered_json j;
    j["check"] = "vdc";
    j["M"] = 2;
    j["sup_statistic"] = r.sup_statistic;
    j["reference"] = ref;
    j["hypothesis_ok"] = r.hypothesis_ok;
    ordered_json rows = ordered_json::array();
    for (const auto& s : r.samples) {
        ordered_json row;
        row["lambda"] = s.lambda;
        row["statistic"] = s.statistic;
        rows.push_back(row);
    }
    j["samples"] = rows;
    j["verdict"] = pass ? "PASS" : "FAIL";
    write_output(j.dump(2) + "\n", opt.out);
    return pass ? kExitOk : kExitFail;
}

int run_verify_airy(const VerifyOptions& opt) {
    QuadratureConfig cfg;
    cfg = cfg.with_budget(M_PI);
    AiryResult r = airy_collapse_check(1.0, 1.0, opt.lam_min, opt.lam_max, cfg);
    ordered_json j;
    j["check"] = "airy";
    j["v"] = 1.0;
    j["collapse_devs"] = r.collapse_devs;
    j["limit_re"] = r.limit_estimate.real();
    j["limit_im"] = r.limit_estimate.imag();
    j["verdict"] = r.monotone_ok ? "PASS" : "FAIL";
    write_output(j.dump(2) + "\n", opt.out);
    return r.monotone_ok ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polyhedron analyzer and oscillatory-integral verifier"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    std::string phi_text, out_path;
    bool normalize = false, want_json = false, want_csv = false;
    unsigned long seed = 0;
    app.add_option("--seed", seed, "reserved; every computation is deterministic");

    auto add_phase_flags = [&](CLI::App* cmd) {
        cmd->add_option("--phi", phi_text, "phase polynomial in x1, x2")->required();
        cmd->add_flag("--normalize-gradient", normalize, "subtract the linear part first");
        cmd->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full invariant report");
    add_phase_flags(analyze);
    analyze->add_flag("--json", want_json, "JSON output (default)");

    CLI::App* polygon = app.add_subcommand("polygon", "admissible polygon vertices");
    add_phase_flags(polygon);
    polygon->add_flag("--csv", want_csv, "CSV output (default)");

    CLI::App* kfun = app.add_subcommand("kfunction", "supporting-line function breakpoints");
    add_phase_flags(kfun);
    kfun->add_flag("--csv", want_csv, "CSV output (default)");

    CLI::App* verify = app.add_subcommand("verify", "numerical verification checks");
    verify->require_subcommand(1);
    VerifyOptions vopt;
    CLI::App* vdecay = verify->add_subcommand("decay", "decay-law slope fit");
    vdecay->add_option("--phi", vopt.phi_text, "phase polynomial")->required();
    vdecay->add_flag("--normalize-gradient", vopt.normalize);
    vdecay->add_option("--lambda-min", vopt.lam_min, "smallest dyadic exponent");
    vdecay->add_option("--lambda-max", vopt.lam_max, "largest dyadic exponent");
    vdecay->add_option("--tol", vopt.tol, "slope tolerance");
    vdecay->add_option("--threads", vopt.threads, "worker threads");
    vdecay->add_flag("--csv", vopt.csv, "emit the sweep as CSV");
    vdecay->add_option("--out", vopt.out, "write output to a file");

    CLI::App* vknapp = verify->add_subcommand("knapp", "Knapp box boundedness");
    vknapp->add_option("--phi", vopt.phi_text, "phase polynomial")->required();
    vknapp->add_flag("--normalize-gradient", vopt.normalize);
    vknapp->add_option("--eps-min", vopt.eps_min, "smallest dyadic exponent of 1/eps");
    vknapp->add_option("--eps-max", vopt.eps_max, "largest dyadic exponent of 1/eps");
    vknapp->add_option("--qx", vopt.qx, "1/p1' as a rational, for the exponent check");
    vknapp->add_option("--qy", vopt.qy, "1/p3' as a rational, for the exponent check");
    vknapp->add_option("--out", vopt.out, "write output to a file");

    CLI::App* vvdc = verify->add_subcommand("vdc", "van der Corput statistic");
    vvdc->add_option("--lambda-min", vopt.lam_min);
    vvdc->add_option("--lambda-max", vopt.lam_max);
    vvdc->add_option("--out", vopt.out, "write output to a file");

    CLI::App* vairy = verify->add_subcommand("airy", "Airy scaling collapse");
    vairy->add_option("--lambda-min", vopt.lam_min);
    vairy->add_option("--lambda-max", vopt.lam_max);
    vairy->add_option("--out", vopt.out, "write output to a file");

    for (CLI::App* sub : {analyze, polygon, kfun, verify, vdecay, vknapp, vvdc, vairy})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            AnalysisReport rep = build_report(phi_text, normalize);
            write_output(report_to_json(rep), out_path);
            return kExitOk;
        }
        if (polygon->parsed()) {
            AnalysisReport rep = build_report(phi_text, normalize);
            write_output(polygon_to_csv(rep.polygon), out_path);
            return kExitOk;
        }
        if (kfun->parsed()) {
            AnalysisReport rep = build_report(phi_text, normalize);
            if (!rep.analysis.kfun) {
                std::cerr << error_json("AdaptedPhase",
                                        "adapted phases have no supporting-line function");
                return kExitValidation;
            }
            write_output(kfunction_to_csv(*rep.analysis.kfun), out_path);
            return kExitOk;
        }
        if (vdecay->parsed()) return run_verify_decay(vopt);
        if (vknapp->parsed()) return run_verify_knapp(vopt);
        if (vvdc->parsed()) return run_verify_vdc(vopt);
        if (vairy->parsed()) return run_verify_airy(vopt);
    } catch (const ParseError& e) {
        std::cerr << error_json("SyntaxError", e.what());
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << error_json(e.code, e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << error_json("InternalError", e.what());
        return kExitValidation;
    }
    return kExitValidation;
}
