#pragma once

#include "restrikt/newton.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace restrikt {

struct QuadratureConfig {
    double panel_phase_budget = 1.5707963267948966;  // pi/2: max phase swing per panel
    int max_subdivisions = 26;                       // binary depth cap per axis
    double abs_tol = 1e-9;
    double rho = 0.5;                                // bump radius
    int threads = 0;                                 // 0 = hardware concurrency

    // budget stays in (0, pi]; a GL12 panel fully resolves that swing
    QuadratureConfig with_budget(double b) const {
        QuadratureConfig c = *this;
        c.panel_phase_budget = std::min(std::max(b, 1e-3), 3.141592653589793);
        return c;
    }
};

// exp(1 - 1/(1-(x/rho)^2)) inside (-rho, rho), zero outside; bump(0) = 1.
double bump(double x, double rho);

struct IntegralResult {
    std::complex<double> value{0.0, 0.0};
    double err_est = 0.0;
    bool cap_hit = false;
};

// One-dimensional int e^{i*phase(s)} amp(s) ds with adaptive GL12 panels,
// subdivided until the per-panel phase variation fits the budget.
IntegralResult oscillatory_integral_1d(const std::vector<double>& phase_coeffs,
                                       const std::function<double(double)>& amp,
                                       double a, double b, const QuadratureConfig& cfg);

// J(lambda * xi_dir) = int e^{i(xi1 x1 + xi2 x2 + xi3 phi(x))} eta(x1) eta(x2) dx
// with eta the standard bump. Evaluated in the adapted coordinates given by
// psi (pass the zero polynomial for phases that are already adapted): the
// inner variable integrates the x2-dependent part, the outer integral
// interpolates the inner values on adaptive Chebyshev panels.
IntegralResult oscillatory_surface_integral(const BivariatePolynomial& phi,
                                            const UnivariatePolynomial& psi,
                                            double lambda,
                                            const std::array<double, 3>& xi_dir,
                                            const QuadratureConfig& cfg);

struct DecaySample {
    double lambda = 0.0;
    std::complex<double> value{0.0, 0.0};
    double err_est = 0.0;
};

// |J| over a dyadic lambda grid (exponents lam_min..lam_max), parallel over
// lambda with deterministic assembly.
std::vector<DecaySample> decay_sweep(const BivariatePolynomial& phi,
                                     const UnivariatePolynomial& psi,
                                     int lam_min_exp, int lam_max_exp,
                                     const QuadratureConfig& cfg);

struct DecayFit {
    double slope = 0.0;                // raw log-log slope
    double log_corrected_slope = 0.0;  // slope of log|J| - nu*log log lambda
    double r2 = 0.0;
    int n_used = 0;
    bool poor_fit = false;             // r2 < 0.98
};

// Least squares on the top fit_points dyadic samples.
DecayFit decay_exponent_fit(const std::vector<DecaySample>& samples, int nu,
                            int fit_points = 6);

enum class Verdict { Pass, Fail, Inconclusive };

struct DecayVerdict {
    Verdict verdict = Verdict::Inconclusive;
    double slope = 0.0;
    double expected = 0.0;
    double tol = 0.05;
    double r2 = 0.0;
    std::string detail;
};

// PASS iff the log-corrected slope is within tol of -1/h and the fit is good.
DecayVerdict compare_to(const DecayFit& fit, const Rational& h, int nu, double tol = 0.05);

struct VdcSample {
    double lambda = 0.0;
    double integral_abs = 0.0;
    double statistic = 0.0;  // lambda^{1/M} |integral|
};

struct VdcResult {
    bool hypothesis_ok = false;
    double sup_statistic = 0.0;
    std::vector<VdcSample> samples;
};

// sup over the lambda grid of lambda^{1/M} |int_I e^{i lambda f} g| for a
// polynomial f with |f^(M)| >= 1 on I (checked on a sample grid).
// amp_bump selects the bump amplitude; otherwise g = 1.
VdcResult van_der_corput_check(const UnivariatePolynomial& f, int M, bool amp_bump,
                               double a, double b, int lam_min_exp, int lam_max_exp,
                               const QuadratureConfig& cfg);

struct AiryResult {
    std::vector<double> collapse_devs;  // |c_j - c_last| per lambda (finest excluded)
    std::vector<std::complex<double>> collapsed;  // lambda^{1/3} J at fixed v
    bool monotone_ok = false;
    std::complex<double> limit_estimate{0.0, 0.0};
};

// Collapse of J(lambda, u) = int e^{i lambda (b t^3 - u t)} a(t) dt under
// t -> lambda^{-1/3} t scaling: lambda^{1/3} J at fixed v = lambda^{2/3} u
// converges; the deviations across dyadic lambdas must shrink.
AiryResult airy_collapse_check(double b_coeff, double v, int lam_min_exp, int lam_max_exp,
                               const QuadratureConfig& cfg);

struct WeightNotSupporting : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KnappReport {
    Weight weight;
    std::vector<double> eps;
    std::vector<double> sup_ratio;  // sup_{D_eps} |phi| / eps
    double max_ratio = 0.0;
};

// Samples the Knapp box D_eps = {|x1| <= eps^{k1}, |x2 - psi(x1)| <= eps^{k2}}
// on a grid and reports sup|phi|/eps per eps; the weight must support the
// augmented polyhedron and have k1 > 0.
KnappReport knapp_box_check(const BivariatePolynomial& phi, const Weight& weight,
                            const UnivariatePolynomial& psi,
                            int eps_min_exp, int eps_max_exp, int grid_n = 201);

struct KnappExponentCheck {
    Rational lhs;  // (1+m) k1 x + y
    Rational rhs;  // (k1 + k2)/2
    bool holds = false;
    bool equality = false;
};

// The scaling inequality of the Knapp example at a dual exponent point,
// exact in rationals.
KnappExponentCheck knapp_exponent_check(const Rational& m, const Weight& weight,
                                        const Rational& x, const Rational& y);

} // namespace restrikt
