#include "restrikt/oscillate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace restrikt {

namespace {

// 12- and 8-point Gauss-Legendre rules on [-1, 1]; the GL8 value on the same
// panel supplies the error estimate.
constexpr int kGL12 = 12;
constexpr double kX12[kGL12] = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047,
    -0.5873179542866175, -0.3678314989981802, -0.1252334085114689,
    0.1252334085114689,  0.3678314989981802,  0.5873179542866175,
    0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
constexpr double kW12[kGL12] = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462,
    0.2031674267230659, 0.2334925365383548, 0.2491470458134028,
    0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
    0.1600783285433462, 0.1069393259953184, 0.0471753363865118};
constexpr int kGL8 = 8;
constexpr double kX8[kGL8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr double kW8[kGL8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

double poly_eval(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Bound for |p'| on [a, b] from the coefficient magnitudes.
double deriv_bound(const std::vector<double>& c, double a, double b) {
    double m = std::max(std::fabs(a), std::fabs(b));
    double bound = 0.0, pw = 1.0;
    for (size_t k = 1; k < c.size(); ++k) {
        bound += std::fabs(c[k]) * static_cast<double>(k) * pw;
        pw *= m;
    }
    return bound;
}

struct PanelSums {
    std::complex<double> v12{0.0, 0.0};
    std::complex<double> v8{0.0, 0.0};
};

template <typename Amp>
PanelSums panel_gl(const std::vector<double>& phase, const Amp& amp, double a, double b) {
    PanelSums s;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < kGL12; ++i) {
        double x = mid + half * kX12[i];
        double am = amp(x);
        if (am == 0.0) continue;
        double ph = poly_eval(phase, x);
        s.v12 += kW12[i] * am * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    for (int i = 0; i < kGL8; ++i) {
        double x = mid + half * kX8[i];
        double am = amp(x);
        if (am == 0.0) continue;
        double ph = poly_eval(phase, x);
        s.v8 += kW8[i] * am * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    s.v12 *= half;
    s.v8 *= half;
    return s;
}

template <typename Amp>
IntegralResult integrate_osc(const std::vector<double>& phase, const Amp& amp, double a,
                             double b, const QuadratureConfig& cfg, double min_width) {
    IntegralResult out;
    if (!(b > a)) return out;
    // depth-first, left panel first: deterministic accumulation order
    struct Item { double a, b; int depth; };
    std::vector<Item> stack;
    stack.push_back({a, b, 0});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        double swing = deriv_bound(phase, it.a, it.b) * (it.b - it.a);
        bool resolved = swing <= cfg.panel_phase_budget && (it.b - it.a) <= min_width;
        if (!resolved && it.depth >= cfg.max_subdivisions) {
            out.cap_hit = true;
            resolved = true;
        }
        if (resolved) {
            PanelSums s = panel_gl(phase, amp, it.a, it.b);
            out.value += s.v12;
            out.err_est += std::abs(s.v12 - s.v8);
        } else {
            double mid = 0.5 * (it.a + it.b);
            stack.push_back({mid, it.b, it.depth + 1});
            stack.push_back({it.a, mid, it.depth + 1});
        }
    }
    return out;
}

// ---- Chebyshev panels for the outer amplitude ------------------------------

constexpr int kChebN = 16;  // Lobatto nodes 0..N

struct ChebPanel {
    double a = 0.0, b = 0.0;
    std::array<std::complex<double>, kChebN + 1> coef{};
    double tail = 0.0;
    double scale = 0.0;
};

std::array<double, kChebN + 1> cheb_nodes(double a, double b) {
    std::array<double, kChebN + 1> x{};
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int j = 0; j <= kChebN; ++j)
        x[j] = mid + half * std::cos(M_PI * j / kChebN);
    return x;
}

ChebPanel cheb_fit(double a, double b,
                   const std::array<std::complex<double>, kChebN + 1>& v) {
    ChebPanel p;
    p.a = a;
    p.b = b;
    for (int k = 0; k <= kChebN; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j <= kChebN; ++j) {
            double w = (j == 0 || j == kChebN) ? 0.5 : 1.0;
            acc += w * v[j] * std::cos(M_PI * j * k / kChebN);
        }
        double sk = (k == 0 || k == kChebN) ? 0.5 : 1.0;
        p.coef[k] = acc * (2.0 * sk / kChebN);
    }
    p.tail = std::abs(p.coef[kChebN]) + std::abs(p.coef[kChebN - 1]);
    for (int j = 0; j <= kChebN; ++j) p.scale = std::max(p.scale, std::abs(v[j]));
    return p;
}

std::complex<double> cheb_eval(const ChebPanel& p, double x) {
    double t = (2.0 * x - (p.a + p.b)) / (p.b - p.a);
    std::complex<double> b1{0.0, 0.0}, b2{0.0, 0.0};
    for (int k = kChebN; k >= 1; --k) {
        std::complex<double> bk = 2.0 * t * b1 - b2 + p.coef[k];
        b2 = b1;
        b1 = bk;
    }
    return t * b1 - b2 + p.coef[0];
}

// ---- split of phi^a into the pure-y1 part and the y2-carrying part ---------

struct SplitPhase {
    std::vector<double> g;                   // pure y1 terms
    std::vector<std::vector<double>> fcoef;  // fcoef[b] = coeff of y2^b as poly in y1
    std::vector<double> psi;
    double rho = 0.5;
};

std::vector<double> unipoly_to_doubles(const UnivariatePolynomial& p) {
    std::vector<double> c(static_cast<size_t>(p.degree() + 1), 0.0);
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(k)] = to_double(p.coeff(k));
    return c;
}

SplitPhase split_phase(const BivariatePolynomial& phi, const UnivariatePolynomial& psi,
                       double rho) {
    BivariatePolynomial pa = apply_shear(phi, ShearMap(psi));
    SplitPhase sp;
    sp.rho = rho;
    sp.psi = unipoly_to_doubles(psi);
    long long max_b = 0;
    for (const auto& [pt, c] : pa.terms()) max_b = std::max(max_b, pt.t2);
    sp.fcoef.assign(static_cast<size_t>(max_b) + 1, {});
    for (const auto& [pt, c] : pa.terms()) {
        auto& dst = (pt.t2 == 0) ? sp.g : sp.fcoef[static_cast<size_t>(pt.t2)];
        if (static_cast<long long>(dst.size()) <= pt.t1)
            dst.resize(static_cast<size_t>(pt.t1) + 1, 0.0);
        dst[static_cast<size_t>(pt.t1)] += to_double(c);
    }
    return sp;
}

IntegralResult inner_integral(const SplitPhase& sp, double y1, double xi2, double xi3,
                              const QuadratureConfig& cfg) {
    const double shift = poly_eval(sp.psi, y1);
    const double lo = -sp.rho - shift, hi = sp.rho - shift;
    std::vector<double> phase(std::max<size_t>(sp.fcoef.size(), 2), 0.0);
    for (size_t b = 1; b < sp.fcoef.size(); ++b)
        phase[b] = xi3 * poly_eval(sp.fcoef[b], y1);
    phase[1] += xi2;
    const double rho = sp.rho;
    auto amp = [shift, rho](double y2) { return bump(y2 + shift, rho); };
    return integrate_osc(phase, amp, lo, hi, cfg, (hi - lo) / 32.0);
}

} // namespace

double bump(double x, double rho) {
    double t = x / rho;
    double d = 1.0 - t * t;
    if (d <= 1e-12) return 0.0;
    return std::exp(1.0 - 1.0 / d);
}

IntegralResult oscillatory_integral_1d(const std::vector<double>& phase_coeffs,
                                       const std::function<double(double)>& amp,
                                       double a, double b, const QuadratureConfig& cfg) {
    return integrate_osc(phase_coeffs, amp, a, b, cfg, (b - a) / 32.0);
}

IntegralResult oscillatory_surface_integral(const BivariatePolynomial& phi,
                                            const UnivariatePolynomial& psi,
                                            double lambda,
                                            const std::array<double, 3>& xi_dir,
                                            const QuadratureConfig& cfg) {
    const double xi1 = lambda * xi_dir[0];
    const double xi2 = lambda * xi_dir[1];
    const double xi3 = lambda * xi_dir[2];
    SplitPhase sp = split_phase(phi, psi, cfg.rho);

    // Outer phase xi1 y1 + xi2 psi(y1) + xi3 g(y1).
    std::vector<double> outer_phase(std::max({sp.g.size(), sp.psi.size(), size_t(2)}), 0.0);
    for (size_t k = 0; k < sp.g.size(); ++k) outer_phase[k] += xi3 * sp.g[k];
    for (size_t k = 0; k < sp.psi.size(); ++k) outer_phase[k] += xi2 * sp.psi[k];
    outer_phase[1] += xi1;

    IntegralResult out;
    double inner_err = 0.0;

    // Adaptive Chebyshev panels resolving y1 -> inner(y1).
    auto inner_at = [&](double y1) {
        IntegralResult r = inner_integral(sp, y1, xi2, xi3, cfg);
        inner_err = std::max(inner_err, r.err_est);
        if (r.cap_hit) out.cap_hit = true;
        return r.value;
    };

    // Phases whose adapted form keeps a y2-linear term make the inner value
    // oscillate in y1; the tail test then keeps splitting (down to the cap,
    // which sets cap_hit) instead of interpolating through the oscillation.
    double global_scale = 0.0;
    struct Item { double a, b; int depth; };
    std::vector<Item> stack;
    std::vector<ChebPanel> final_panels;
    stack.push_back({-cfg.rho, cfg.rho, 0});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        auto nodes = cheb_nodes(it.a, it.b);
        std::array<std::complex<double>, kChebN + 1> vals{};
        for (int j = 0; j <= kChebN; ++j) vals[j] = inner_at(nodes[j]);
        ChebPanel panel = cheb_fit(it.a, it.b, vals);
        global_scale = std::max(global_scale, panel.scale);
        bool ok = panel.tail <= 1e-8 * std::max(global_scale, 1e-300) + 0.01 * cfg.abs_tol ||
                  panel.scale <= 1e-14 * global_scale;
        if (!ok && it.depth >= cfg.max_subdivisions) {
            out.cap_hit = true;
            ok = true;
        }
        if (ok) {
            final_panels.push_back(panel);
        } else {
            double mid = 0.5 * (it.a + it.b);
            stack.push_back({mid, it.b, it.depth + 1});
            stack.push_back({it.a, mid, it.depth + 1});
        }
    }
    std::sort(final_panels.begin(), final_panels.end(),
              [](const ChebPanel& p, const ChebPanel& q) { return p.a < q.a; });

    double cheb_err = 0.0;
    for (const auto& panel : final_panels) {
        IntegralResult part;
        struct ItemP { double a, b; int depth; };
        std::vector<ItemP> pstack;
        pstack.push_back({panel.a, panel.b, 0});
        while (!pstack.empty()) {
            ItemP ip = pstack.back();
            pstack.pop_back();
            double swing = deriv_bound(outer_phase, ip.a, ip.b) * (ip.b - ip.a);
            bool resolved =
                swing <= cfg.panel_phase_budget && (ip.b - ip.a) <= cfg.rho / 16.0;
            if (!resolved && ip.depth >= cfg.max_subdivisions) {
                part.cap_hit = true;
                resolved = true;
            }
            if (resolved) {
                const double mid = 0.5 * (ip.a + ip.b), half = 0.5 * (ip.b - ip.a);
                std::complex<double> v12{0.0, 0.0}, v8{0.0, 0.0};
                for (int i = 0; i < kGL12; ++i) {
                    double x = mid + half * kX12[i];
                    double am = bump(x, cfg.rho);
                    if (am == 0.0) continue;
                    double ph = poly_eval(outer_phase, x);
                    v12 += kW12[i] * am * cheb_eval(panel, x) *
                           std::complex<double>(std::cos(ph), std::sin(ph));
                }
                for (int i = 0; i < kGL8; ++i) {
                    double x = mid + half * kX8[i];
                    double am = bump(x, cfg.rho);
                    if (am == 0.0) continue;
                    double ph = poly_eval(outer_phase, x);
                    v8 += kW8[i] * am * cheb_eval(panel, x) *
                          std::complex<double>(std::cos(ph), std::sin(ph));
                }
                v12 *= half;
                v8 *= half;
                part.value += v12;
                part.err_est += std::abs(v12 - v8);
            } else {
                double mid = 0.5 * (ip.a + ip.b);
                pstack.push_back({mid, ip.b, ip.depth + 1});
                pstack.push_back({ip.a, mid, ip.depth + 1});
            }
        }
        out.value += part.value;
        out.err_est += part.err_est;
        out.cap_hit = out.cap_hit || part.cap_hit;
        cheb_err += panel.tail * (panel.b - panel.a);
    }
    out.err_est += inner_err * 2.0 * cfg.rho + cheb_err;
    return out;
}

std::vector<DecaySample> decay_sweep(const BivariatePolynomial& phi,
                                     const UnivariatePolynomial& psi,
                                     int lam_min_exp, int lam_max_exp,
                                     const QuadratureConfig& cfg) {
    std::vector<double> lambdas;
    for (int e = lam_min_exp; e <= lam_max_exp; ++e) lambdas.push_back(std::ldexp(1.0, e));
    std::vector<DecaySample> out(lambdas.size());

    int nthreads = cfg.threads > 0 ? cfg.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min<int>(nthreads, static_cast<int>(lambdas.size()));

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= lambdas.size()) return;
            IntegralResult r = oscillatory_surface_integral(phi, psi, lambdas[i],
                                                            {0.0, 0.0, 1.0}, cfg);
            out[i] = {lambdas[i], r.value, r.err_est};
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

DecayFit decay_exponent_fit(const std::vector<DecaySample>& samples, int nu,
                            int fit_points) {
    DecayFit fit;
    std::vector<DecaySample> s = samples;
    std::sort(s.begin(), s.end(),
              [](const DecaySample& a, const DecaySample& b) { return a.lambda < b.lambda; });
    if (static_cast<int>(s.size()) > fit_points)
        s.erase(s.begin(), s.end() - fit_points);
    fit.n_used = static_cast<int>(s.size());
    if (fit.n_used < 2) {
        fit.poor_fit = true;
        return fit;
    }

    auto regress = [&](bool corrected) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
        const double n = fit.n_used;
        for (const auto& smp : s) {
            double x = std::log(smp.lambda);
            double y = std::log(std::abs(smp.value));
            if (corrected && nu != 0 && smp.lambda > 1.0)
                y -= nu * std::log(std::log(smp.lambda));
            sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
        }
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        double ssxy = sxy - sx * sy / n;
        double ssxx = sxx - sx * sx / n;
        double ssyy = syy - sy * sy / n;
        double r2 = ssyy > 0 ? (ssxy * ssxy) / (ssxx * ssyy) : 1.0;
        return std::make_pair(slope, r2);
    };

    auto [raw, r2raw] = regress(false);
    (void)r2raw;
    auto [corr, r2corr] = regress(true);
    fit.slope = raw;
    fit.log_corrected_slope = corr;
    fit.r2 = r2corr;
    fit.poor_fit = fit.r2 < 0.98;
    return fit;
}

DecayVerdict compare_to(const DecayFit& fit, const Rational& h, int nu, double tol) {
    DecayVerdict v;
    v.slope = fit.log_corrected_slope;
    v.expected = -1.0 / to_double(h);
    v.tol = tol;
    v.r2 = fit.r2;
    (void)nu;
    if (fit.n_used < 2) {
        v.verdict = Verdict::Inconclusive;
        v.detail = "grid too short";
        return v;
    }
    if (fit.poor_fit) {
        v.verdict = Verdict::Inconclusive;
        v.detail = "PoorFit: r2 < 0.98";
        return v;
    }
    v.verdict = std::fabs(v.slope - v.expected) <= tol ? Verdict::Pass : Verdict::Fail;
    return v;
}

VdcResult van_der_corput_check(const UnivariatePolynomial& f, int M, bool amp_bump,
                               double a, double b, int lam_min_exp, int lam_max_exp,
                               const QuadratureConfig& cfg) {
    VdcResult res;
    UnivariatePolynomial fm = f;
    for (int k = 0; k < M; ++k) fm = fm.derivative();
    res.hypothesis_ok = true;
    for (int i = 0; i <= 1000; ++i) {
        double s = a + (b - a) * i / 1000.0;
        if (std::fabs(fm(s)) < 1.0 - 1e-9) { res.hypothesis_ok = false; break; }
    }

    std::vector<double> fc = unipoly_to_doubles(f);
    const double rho = cfg.rho;
    for (int e = lam_min_exp; e <= lam_max_exp; ++e) {
        double lambda = std::ldexp(1.0, e);
        std::vector<double> phase(fc.size(), 0.0);
        for (size_t k = 0; k < fc.size(); ++k) phase[k] = lambda * fc[k];
        std::function<double(double)> amp;
        if (amp_bump) amp = [rho](double s) { return bump(s, rho); };
        else amp = [](double) { return 1.0; };
        IntegralResult r = integrate_osc(phase, amp, a, b, cfg, (b - a) / 32.0);
        double stat = std::pow(lambda, 1.0 / M) * std::abs(r.value);
        res.samples.push_back({lambda, std::abs(r.value), stat});
        res.sup_statistic = std::max(res.sup_statistic, stat);
    }
    return res;
}

AiryResult airy_collapse_check(double b_coeff, double v, int lam_min_exp, int lam_max_exp,
                               const QuadratureConfig& cfg) {
    AiryResult res;
    const double rho = cfg.rho;
    for (int e = lam_min_exp; e <= lam_max_exp; ++e) {
        double lambda = std::ldexp(1.0, e);
        double u = v * std::pow(lambda, -2.0 / 3.0);
        std::vector<double> phase = {0.0, -lambda * u, 0.0, lambda * b_coeff};
        auto amp = [rho](double t) { return bump(t, rho); };
        IntegralResult r = integrate_osc(phase, std::function<double(double)>(amp),
                                         -rho, rho, cfg, 2.0 * rho / 32.0);
        res.collapsed.push_back(std::cbrt(lambda) * r.value);
    }
    const auto& c = res.collapsed;
    res.limit_estimate = c.back();
    for (size_t j = 0; j + 1 < c.size(); ++j)
        res.collapse_devs.push_back(std::abs(c[j] - c.back()));
    // deviations over the top dyadic lambdas must shrink monotonically
    res.monotone_ok = true;
    size_t start = res.collapse_devs.size() >= 3 ? res.collapse_devs.size() - 3 : 0;
    for (size_t j = start; j + 1 < res.collapse_devs.size(); ++j)
        if (!(res.collapse_devs[j] > res.collapse_devs[j + 1])) res.monotone_ok = false;
    return res;
}

KnappReport knapp_box_check(const BivariatePolynomial& phi, const Weight& weight,
                            const UnivariatePolynomial& psi,
                            int eps_min_exp, int eps_max_exp, int grid_n) {
    if (weight.k1 <= 0)
        throw std::invalid_argument(
            "knapp_box_check: horizontal weights need the auxiliary delta box");
    BivariatePolynomial pa = apply_shear(phi, ShearMap(psi));
    for (const auto& [pt, c] : pa.terms()) {
        (void)c;
        if (weight.k1 * pt.t1 + weight.k2.value() * pt.t2 < 1)
            throw WeightNotSupporting("weight line cuts the adapted Taylor support");
    }
    if (!psi.is_zero()) {
        int m = 0;
        while (psi.coeff(m) == 0) ++m;
        if (weight.k2.value() < Rational(m) * weight.k1)
            throw WeightNotSupporting("weight line cuts the augmented ray");
    }

    KnappReport rep;
    rep.weight = weight;
    const double k1 = to_double(weight.k1);
    const double k2 = to_double(weight.k2.value());
    for (int e = eps_min_exp; e <= eps_max_exp; ++e) {
        double eps = std::ldexp(1.0, -e);
        double w1 = std::pow(eps, k1), w2 = std::pow(eps, k2);
        double sup = 0.0;
        for (int i = 0; i < grid_n; ++i) {
            double x1 = -w1 + 2.0 * w1 * i / (grid_n - 1);
            double shear = psi(x1);
            for (int j = 0; j < grid_n; ++j) {
                double u = -w2 + 2.0 * w2 * j / (grid_n - 1);
                sup = std::max(sup, std::fabs(phi.evaluate(x1, shear + u)));
            }
        }
        rep.eps.push_back(eps);
        rep.sup_ratio.push_back(sup / eps);
        rep.max_ratio = std::max(rep.max_ratio, sup / eps);
    }
    return rep;
}

KnappExponentCheck knapp_exponent_check(const Rational& m, const Weight& weight,
                                        const Rational& x, const Rational& y) {
    KnappExponentCheck c;
    c.lhs = (1 + m) * weight.k1 * x + y;
    c.rhs = (weight.k1 + weight.k2.value()) / 2;
    c.holds = c.lhs <= c.rhs;
    c.equality = c.lhs == c.rhs;
    return c;
}

} // namespace restrikt
