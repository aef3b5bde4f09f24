// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
//
// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if any line fails.

#include "simpleq/analysis.hpp"
#include "simpleq/cli.hpp"
#include "simpleq/io.hpp"
#include "simpleq/operators.hpp"
#include "simpleq/solver.hpp"
#include "simpleq/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace simpleq;
using std::numbers::pi;

namespace {

// Tolerances
constexpr double a_expected = 1.25, a_rel_tol = 0.02, a_agree_tol = 0.01, scattering_seconds = 1.0;
constexpr double bound_rel_tol = 1e-10, curve_seconds = 120.0;
constexpr double bracket_gap_tol = 1e-10;
constexpr double constraint_tol = 1e-9;
constexpr double range_tol = 1e-12;
constexpr double identity_tol = 1e-8;
constexpr double lhy_rel_tol = 0.10, lhy_rho_a3_max = 1e-5, lhy_seconds = 300.0;
constexpr double high_density_floor = 0.95, high_density_slack = 1e-10;
constexpr double slope_expected = -4.0, slope_tol = 0.2, alpha_rel_tol = 0.10, beta_rel_tol = 0.01;
constexpr double rate_slope_max = -3.0;
constexpr double convexity_rel_tol = 0.15;
constexpr double oracle_conv_tol = 1e-4, roundtrip_tol = 1e-10, yukawa_tol = 1e-6, resolvent_tol = 1e-6;

int failures = 0;

void report(int id, bool pass, const std::string& what, double seconds)
{
    std::printf("[%s] C%02d %s (%.1f s)\n", pass ? "PASS" : "FAIL", id, what.c_str(), seconds);
    std::fflush(stdout);
    failures += !pass;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args)
{
    char b[512];
    std::snprintf(b, sizeof b, f, args...);
    return b;
}

double max_abs(std::span<const double> x)
{
    double m = 0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

const Potential vexp = Potential::exponential(1.0);

// f(t) = e^{-t^2}(1 + t^2); F' = t f
double bump(double t) { return std::exp(-t * t) * (1.0 + t * t); }
double bump_primitive(double t) { return -0.5 * std::exp(-t * t) * (t * t + 2.0); }

double direct_convolution(double r, double smax)
{
    const int m = 24000;
    const double h = smax / m;
    double acc = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double s = i * h;
        const double g = r == 0.0 ? 4.0 * pi * s * s * bump(s) * bump(s)
                                  : 2.0 * pi / r * s * bump(s) * (bump_primitive(r + s) - bump_primitive(std::abs(r - s)));
        acc += g * (i == 0 || i == m ? 1.0 : (i % 2 ? 4.0 : 2.0));
    }
    return acc * h / 3.0;
}

int cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "simpleq");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace

int main()
{
    using clock = std::chrono::steady_clock;

    // C01 scattering length
    {
        const auto t0 = clock::now();
        const auto s = solve_scattering(sample(vexp, scattering_grid(vexp, vexp.feature_length() / 10.0)));
        const double dt = seconds_since(t0);
        const bool ok = std::abs(s.a - a_expected) <= a_rel_tol * a_expected &&
                        std::abs(s.a_boundary - s.a_integral) <= a_agree_tol * s.a && dt < scattering_seconds;
        report(1, ok, fmt("scattering length a = %.6f, |a_boundary - a_integral| = %.2e", s.a, std::abs(s.a_boundary - s.a_integral)), dt);
    }

    // The 49-point curve feeds C02, C03-C06, C08, C11, C13.
    const auto t_curve = clock::now();
    const auto energies = log_grid(1e-4, 1e2, 49);
    const auto curve = trace_curve(vexp, energies);
    const double curve_time = seconds_since(t_curve);

    // C07 needs small e; its solves also count for C03-C06 and C13.
    const auto t_lhy = clock::now();
    const auto lhy_curve = trace_curve(vexp, log_grid(1e-5, 1e-1, 9));
    const double lhy_time = seconds_since(t_lhy);

    std::vector<const CurveRow*> all;
    for (const auto& r : curve.rows) all.push_back(&r);
    for (const auto& r : lhy_curve.rows) all.push_back(&r);

    // C02 a-priori bounds
    {
        const double iv = curve.integral_v;
        std::size_t bad = 0, unconverged = 0;
        for (const auto& r : curve.rows) {
            const double lo_e = 0.25 * iv * r.rho, hi_e = 0.5 * iv * r.rho;
            if (r.e < lo_e * (1 - bound_rel_tol) || r.e > hi_e * (1 + bound_rel_tol)) ++bad;
            if (r.rho < r.first_lo * (1 - bound_rel_tol) || r.rho > r.first_hi * (1 + bound_rel_tol)) ++bad;
            unconverged += r.status == SolveStatus::not_converged;
        }
        report(2, bad == 0 && unconverged == 0 && curve_time < curve_seconds,
               fmt("a-priori bounds on %zu solves: %zu violation(s), %zu unconverged", curve.rows.size(), bad, unconverged),
               curve_time);
    }

    // C03 monotone bracket
    {
        std::size_t mono_bad = 0;
        double worst_gap = 0;
        for (const auto* r : all) {
            mono_bad += !(r->a_monotone && r->b_monotone && r->ordered);
            worst_gap = std::max(worst_gap, (r->rho_hi - r->rho_lo) / r->rho_hi); // = (b - a)/b
        }
        report(3, mono_bad == 0 && worst_gap <= bracket_gap_tol,
               fmt("bracket monotone in %zu/%zu solves; largest final (b-a)/b = %.3e (need <= %.0e)", all.size() - mono_bad,
                   all.size(), worst_gap, bracket_gap_tol),
               0.0);
    }

    // C04 constraint
    {
        double worst = 0;
        for (const auto* r : all) worst = std::max(worst, r->constraint_residual);
        report(4, worst <= constraint_tol, fmt("largest |rho int u - 1| = %.3e (need <= %.0e)", worst, constraint_tol), 0.0);
    }

    // C05 range of u
    {
        double worst = 0;
        for (const auto* r : all) worst = std::max(worst, r->u_range_violation);
        report(5, worst <= range_tol, fmt("largest excursion of u outside [0,1] = %.3e", worst), 0.0);
    }

    // C06 telescoping identity
    {
        double worst = 0;
        for (const auto* r : all) worst = std::max(worst, r->max_identity_residual);
        report(6, worst <= identity_tol, fmt("largest |2a_n - b_n - a_{n-1}^2/b_{n-1}| / b_n = %.3e", worst), 0.0);
    }

    // C07 low density
    {
        const auto pts = lhy_check(lhy_curve);
        const double c = lhy_constant();
        // rows are in increasing rho; walk down from the smallest converged rho
        const LhyPoint* best = nullptr;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (lhy_curve.rows[i].status != SolveStatus::not_converged && pts[i].rho_a3 <= lhy_rho_a3_max) {
                best = &pts[i];
                break;
            }
        bool within = best && std::abs(best->c_hat - c) <= lhy_rel_tol * c;
        bool improving = true;
        const double rho_floor = pts.front().rho;
        // lower rho must sit closer to the constant
        for (std::size_t i = 1; i < pts.size() && pts[i].rho <= 100.0 * rho_floor; ++i)
            if (std::abs(pts[i - 1].c_hat - c) > std::abs(pts[i].c_hat - c)) improving = false;
        report(7, within && improving && lhy_time < lhy_seconds,
               best ? fmt("c_hat = %.4f at rho a^3 = %.2e (constant %.4f); monotone approach over two decades: %s", best->c_hat,
                          best->rho_a3, c, improving ? "yes" : "no")
                    : std::string("no converged row with rho a^3 <= 1e-5"),
               lhy_time);
    }

    // C08 high density
    {
        const auto pts = high_density_check(curve);
        double worst = 0;
        for (const auto& p : pts) worst = std::max(worst, p.ratio);
        const double last = pts.back().ratio;
        report(8, last >= high_density_floor && last <= 1 + high_density_slack && worst <= 1 + high_density_slack,
               fmt("ratio at largest rho = %.8f, max ratio = %.8f", last, worst), 0.0);
    }

    // C09 decay law
    {
        const auto t0 = clock::now();
        bool ok = true;
        std::string what;
        for (double e : {1e-2, 1e-3}) {
            SolveParams p;
            p.e = e;
            const auto s = solve(vexp, p);
            const auto d = decay_fit(s);
            const auto b = extract_beta(s);
            ok = ok && s.converged() && std::abs(d.p - slope_expected) <= slope_tol && d.relative_deviation <= alpha_rel_tol &&
                 b.relative_gap <= beta_rel_tol;
            what += fmt("e=%g: p=%.3f alpha_hat/alpha_pred-1=%+.3f beta gap=%.1e; ", e, d.p, d.alpha_hat / d.alpha_pred - 1,
                        b.relative_gap);
        }
        report(9, ok, what, seconds_since(t0));
    }

    // C10 convergence rate, run for the full window n <= 200
    {
        const auto t0 = clock::now();
        SolveParams p;
        p.e = 1e-4;
        p.stationarity_steps = 0;
        p.max_iter = 200;
        const auto s = solve(vexp, p);
        const auto rate = convergence_rate(s.trace, 10, 200);
        double early = 0, late = 0;
        for (const auto& t : s.trace) {
            const double v = static_cast<double>(t.n) * (t.a - t.b) * (t.a - t.b);
            (t.n <= 100 ? early : late) = std::max(t.n <= 100 ? early : late, v);
        }
        const bool bounded = std::isfinite(rate.rate_constant) && late <= early;
        report(10, rate.slope <= rate_slope_max && bounded,
               fmt("slope of log(1/rho - a_n) over n in [10,200] = %.3f (need <= %.1f); n(a_n-b_n)^2 max %.3e, bounded: %s",
                   rate.slope, rate_slope_max, rate.rate_constant, bounded ? "yes" : "no"),
               seconds_since(t0));
    }

    // C11 convexity and limits
    {
        const auto prof = convexity_profile(curve);
        std::size_t bad = 0;
        for (const auto& p : prof) bad += !(p.value > 0.0);
        const double lo = prof.front().value, hi = prof.back().value, hi_ref = curve.integral_v / (4 * pi);
        const bool ok = bad == 0 && std::abs(lo - curve.scattering_length) <= convexity_rel_tol * curve.scattering_length &&
                        std::abs(hi - hi_ref) <= convexity_rel_tol * hi_ref;
        report(11, ok, fmt("%zu non-positive second differences; low end %.4f (a = %.4f), high end %.4f (expect %.1f)", bad, lo,
                           curve.scattering_length, hi, hi_ref),
               0.0);
    }

    // C12 oracle equivalence
    {
        const auto t0 = clock::now();
        RadialGrid g(255, 12.0 / 255.0);
        const auto f = RadialField::sample(g, bump);
        const auto h = autoconvolve(f);
        double scale = 0, conv_err = 0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double o = direct_convolution(g.r(j), 12.0);
            scale = std::max(scale, std::abs(o));
            conv_err = std::max(conv_err, std::abs(h[j] - o));
        }
        conv_err /= scale;

        RadialGrid gr(1024, 0.02);
        const auto q = RadialField::sample(gr, [](double r) { return std::exp(-r) * (1.0 + std::cos(3.0 * r)); });
        const auto back = inverse_radial_fourier(radial_fourier(q));
        double rt = 0;
        for (std::size_t j = 1; j < gr.n(); ++j) rt = std::max(rt, std::abs(back[j] - q[j]));
        rt /= max_abs(q.values());

        RadialGrid gy(8192, 0.01);
        const auto src = RadialField::sample(gy, [](double r) { return std::exp(-r * r) * (1 + r); });
        const double e = 1.0;
        const auto k0 = apply_resolvent(src, RadialField(gy), e);
        const auto y = apply_yukawa(src, e);
        double ky = 0;
        for (std::size_t j = 0; j < gy.size(); ++j) ky = std::max(ky, std::abs(k0[j] - y[j]));
        ky /= max_abs(y.values());

        const auto v = sample(vexp, gy);
        const auto kv = apply_resolvent(src, v, e);
        std::vector<double> vk(gy.size());
        for (std::size_t j = 0; j < vk.size(); ++j) vk[j] = v[j] * kv[j];
        const auto gvk = apply_yukawa(RadialField(gy, vk), e);
        double res = 0;
        bool dominated = true;
        for (std::size_t j = 0; j < gy.size(); ++j) {
            res = std::max(res, std::abs(kv[j] - y[j] + gvk[j]));
            dominated = dominated && kv[j] >= 0.0 && kv[j] <= y[j] + 1e-14;
        }
        res /= max_abs(kv.values());

        const bool ok = conv_err <= oracle_conv_tol && rt <= roundtrip_tol && ky <= yukawa_tol && res <= resolvent_tol && dominated;
        report(12, ok, fmt("convolution %.2e, round trip %.2e, K_e(V=0) vs G_e %.2e, resolvent identity %.2e, 0<=K_e<=G_e: %s",
                           conv_err, rt, ky, res, dominated ? "yes" : "no"),
               seconds_since(t0));
    }

    // C13 monotonicity diagnostics
    {
        const std::size_t rho_bad = curve.rho_violations.size() + lhy_curve.rho_violations.size();
        const std::size_t en_bad = curve.energy_density_violations.size() + lhy_curve.energy_density_violations.size();
        report(13, rho_bad == 0 && en_bad == 0,
               fmt("rho(e) increasing: %zu violation(s); rho e increasing: %zu violation(s)", rho_bad, en_bad), 0.0);
    }

    // C14 determinism
    {
        const auto t0 = clock::now();
        namespace fs = std::filesystem;
        const auto base = fs::temp_directory_path() / "simpleq_acceptance";
        fs::remove_all(base);
        bool ok = true;
        for (const char* run : {"a", "b"}) {
            const auto out = (base / run).string();
            ok = ok && cli({"solve", "--e", "0.01", "--out", out}) == 0;
            ok = ok && cli({"decay", "--e", "0.01", "--out", out}) == 0;
            ok = ok && cli({"curve", "--e-min", "1e-3", "--e-max", "10", "--points", "9", "--svg", "--out", out}) == 0;
        }
        std::size_t files = 0;
        for (const char* f : {"solution.json", "u.csv", "s_of_k.csv", "trace.csv", "decay.json", "curve.csv", "curve.svg"}) {
            ok = ok && read_file((base / "a" / f).string()) == read_file((base / "b" / f).string());
            ++files;
        }
        fs::remove_all(base);
        report(14, ok, fmt("%zu output files byte-identical across two runs", files), seconds_since(t0));
    }

    std::printf("%d criterion/criteria failed\n", failures);
    return failures ? 1 : 0;
}
