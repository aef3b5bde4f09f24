// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/analysis.hpp"

#include "simpleq/error.hpp"
#include "simpleq/io.hpp"
#include "simpleq/operators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <thread>

namespace simpleq {

namespace {

constexpr double pi = std::numbers::pi;

struct Line {
    double slope, intercept, rms;
};

Line least_squares(std::span<const double> x, std::span<const double> y)
{
    const std::size_t n = x.size();
    if (n < 3) throw OutOfRange("fit window holds fewer than 3 samples");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) throw NumericalFailure("degenerate fit abscissae");
    const double s = sxy / sxx, c = my - s * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) ss += std::pow(y[i] - (c + s * x[i]), 2);
    return {s, c, std::sqrt(ss / n)};
}

// Fritsch-Carlson slopes for a monotone cubic Hermite interpolant.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), d(n - 1), m(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) return {d[0], d[0]};
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) continue;
        const double w1 = 2 * h[i] + h[i - 1], w2 = h[i] + 2 * h[i - 1];
        m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
    auto end = [](double h0, double h1, double d0, double d1) {
        double s = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (d0 * d1 <= 0.0 && std::abs(s) > std::abs(3 * d0)) return 3 * d0;
        return s;
    };
    m[0] = end(h[0], h[1], d[0], d[1]);
    m[n - 1] = end(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return m;
}

} // namespace

unsigned threads_from_env()
{
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* s = std::getenv("SIMPLEQ_THREADS");
    if (!s || !*s) return hw;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 0) throw InvalidInput("SIMPLEQ_THREADS must be a non-negative integer");
    return v == 0 ? 1u : static_cast<unsigned>(v);
}

std::vector<double> log_grid(double lo, double hi, std::size_t points)
{
    if (!(lo > 0.0) || !(hi > lo) || points < 2) throw InvalidInput("log grid needs 0 < lo < hi and >= 2 points");
    std::vector<double> out(points);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < points; ++i)
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

CurveRow summarize(const Solution& s)
{
    CurveRow r;
    r.e = s.e;
    r.rho = s.rho;
    r.rho_lo = s.rho_lo;
    r.rho_hi = s.rho_hi;
    r.e_over_4pi_rho = s.e / (4.0 * pi * s.rho);
    r.first_lo = 1.0 / s.trace.front().b;
    r.first_hi = 1.0 / s.trace.front().a;
    r.constraint_residual = s.constraint_residual;
    r.u_range_violation = pointwise_max_violation(s.u, 0.0, 1.0);
    r.iterations = s.iterations;
    r.status = s.status;
    for (std::size_t i = 0; i < s.trace.size(); ++i) {
        const auto& t = s.trace[i];
        r.max_identity_residual = std::max(r.max_identity_residual, t.identity_residual);
        if (!(t.a < t.b)) r.ordered = false;
        if (i > 0) {
            const auto& p = s.trace[i - 1];
            if (t.a < p.a - 1e-12 * p.a) r.a_monotone = false;
            if (t.b > p.b + 1e-12 * p.b) r.b_monotone = false;
        }
    }
    return r;
}

EnergyCurve trace_curve(const Potential& v, std::span<const double> energies, const CurveParams& params)
{
    if (energies.empty()) throw InvalidInput("trace_curve: no energies");
    for (std::size_t i = 0; i < energies.size(); ++i) {
        if (!(energies[i] > 0.0) || !std::isfinite(energies[i])) throw InvalidInput("energies must be positive");
        if (i > 0 && !(energies[i] > energies[i - 1])) throw InvalidInput("energies must increase strictly");
    }
    EnergyCurve curve;
    curve.potential = v.describe();
    curve.integral_v = v.integral();
    const double dr = params.grid.dr > 0.0 ? params.grid.dr : v.feature_length() / 10.0;
    GridPolicy sp;
    sp.min_intervals = params.grid.min_intervals;
    curve.scattering_length = solve_scattering(sample(v, scattering_grid(v, dr, sp))).a;

    curve.rows.resize(energies.size());
    std::vector<std::exception_ptr> errors(energies.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < energies.size();) {
            try {
                SolveParams p = params.solve;
                p.e = energies[i];
                curve.rows[i] = summarize(solve(v, p, params.grid));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned nt = std::min<std::size_t>(params.threads ? params.threads : threads_from_env(), energies.size());
    if (nt <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (std::size_t i = 1; i < curve.rows.size(); ++i) {
        const auto &p = curve.rows[i - 1], &c = curve.rows[i];
        if (!(c.rho > p.rho)) curve.rho_violations.push_back(i);
        if (!(c.rho * c.e > p.rho * p.e)) curve.energy_density_violations.push_back(i);
    }
    return curve;
}

double invert_curve(const EnergyCurve& curve, double rho)
{
    const auto& rows = curve.rows;
    if (rows.size() < 2) throw InvalidInput("invert_curve: need >= 2 rows");
    std::vector<double> x, y;
    for (const auto& r : rows) {
        if (!(r.rho > 0.0)) throw InvalidInput("invert_curve: non-positive rho");
        if (!x.empty() && !(std::log(r.rho) > x.back())) throw NumericalFailure("invert_curve: rho is not increasing");
        x.push_back(std::log(r.rho));
        y.push_back(std::log(r.e));
    }
    if (!(rho > 0.0)) throw OutOfRange("invert_curve: rho must be positive");
    const double t = std::log(rho);
    if (t < x.front() - 1e-12 || t > x.back() + 1e-12) throw OutOfRange("invert_curve: rho outside the sampled range");
    const auto m = pchip_slopes(x, y);
    std::size_t i = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), t) - x.begin());
    i = std::clamp<std::size_t>(i, 1, x.size() - 1) - 1;
    const double h = x[i + 1] - x[i], s = std::clamp((t - x[i]) / h, 0.0, 1.0);
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return std::exp(h00 * y[i] + h10 * h * m[i] + h01 * y[i + 1] + h11 * h * m[i + 1]);
}

double lhy_constant() { return 128.0 / (15.0 * std::sqrt(pi)); }

std::vector<LhyPoint> lhy_check(const EnergyCurve& curve)
{
    const double a = curve.scattering_length;
    if (!(a > 0.0)) throw InvalidInput("lhy_check: curve has no scattering length");
    std::vector<LhyPoint> out;
    for (const auto& r : curve.rows) {
        const double ra3 = r.rho * a * a * a;
        out.push_back({r.e, r.rho, ra3, (r.e / (2.0 * pi * r.rho * a) - 1.0) / std::sqrt(ra3)});
    }
    return out;
}

std::vector<HighDensityPoint> high_density_check(const EnergyCurve& curve)
{
    if (!(curve.integral_v > 0.0)) throw InvalidInput("high_density_check: curve has no int V");
    std::vector<HighDensityPoint> out;
    for (const auto& r : curve.rows) out.push_back({r.rho, r.e / (0.5 * r.rho * curve.integral_v)});
    return out;
}

std::vector<ConvexityPoint> convexity_profile(const EnergyCurve& curve)
{
    const auto& r = curve.rows;
    if (r.size() < 3) throw InvalidInput("convexity_profile: need >= 3 rows");
    std::vector<ConvexityPoint> out;
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        const double h1 = r[i].rho - r[i - 1].rho, h2 = r[i + 1].rho - r[i].rho;
        if (!(h1 > 0.0 && h2 > 0.0)) throw NumericalFailure("convexity_profile: rho is not increasing");
        const double f0 = r[i - 1].rho * r[i - 1].e, f1 = r[i].rho * r[i].e, f2 = r[i + 1].rho * r[i + 1].e;
        const double d2 = 2.0 * ((f2 - f1) / h2 - (f1 - f0) / h1) / (h1 + h2);
        out.push_back({r[i].rho, d2 / (4.0 * pi)});
    }
    return out;
}

BetaEstimate extract_beta(const Solution& s)
{
    const auto& g = s.u.grid();
    std::vector<double> w(s.u.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = g.r(j) * g.r(j) * (1.0 - s.u[j]);
    const double moment = s.rho / (12.0 * s.e) * integrate_product(s.v, RadialField(g, std::move(w)));
    // S = c0 + c1 x + c2 x^2 with x = k^2, through the first three modes
    double x[3], y[3];
    for (int i = 0; i < 3; ++i) {
        x[i] = s.s.k(i) * s.s.k(i);
        y[i] = s.s[i];
    }
    const double d01 = (y[1] - y[0]) / (x[1] - x[0]), d12 = (y[2] - y[1]) / (x[2] - x[1]);
    const double c2 = (d12 - d01) / (x[2] - x[0]);
    const double c1 = d01 - c2 * (x[0] + x[1]);
    const double fit = -c1;
    if (!(moment > 0.0) || !(fit > 0.0)) throw NumericalFailure("extract_beta: beta is not positive");
    return {moment, fit, std::abs(moment - fit) / moment};
}

PowerLawFit fit_power_law(const RadialField& f, double r_lo, double r_hi)
{
    if (!(r_lo > 0.0) || !(r_hi > r_lo)) throw InvalidInput("fit window must satisfy 0 < r_lo < r_hi");
    std::vector<double> x, y;
    for (std::size_t j = 1; j < f.size(); ++j) {
        const double r = f.r(j);
        if (r < r_lo || r > r_hi) continue;
        if (!(f[j] > 0.0)) throw NumericalFailure("fit_power_law: non-positive value in window");
        x.push_back(std::log(r));
        y.push_back(std::log(f[j]));
    }
    const auto l = least_squares(x, y);
    return {l.slope, l.intercept, l.rms, x.size()};
}

DecayReport decay_fit(const Solution& s, std::optional<double> r_lo, std::optional<double> r_hi)
{
    const double lo = r_lo.value_or(2.5 / std::sqrt(s.e));
    const double hi = r_hi.value_or(s.u.grid().rmax() / 4.0);
    if (!(hi > lo)) throw OutOfRange("decay window is empty; enlarge rmax");
    const auto pl = fit_power_law(s.u, lo, hi);
    // r^4 u = alpha + gamma / r
    std::vector<double> x, y;
    for (std::size_t j = 1; j < s.u.size(); ++j) {
        const double r = s.u.r(j);
        if (r < lo || r > hi) continue;
        x.push_back(1.0 / r);
        y.push_back(r * r * r * r * s.u[j]);
    }
    const auto l = least_squares(x, y);
    const double beta = extract_beta(s).moment;
    const double pred = std::sqrt(1.0 / (2.0 * s.e) + beta) / (pi * pi * s.rho);
    return DecayReport{pl.slope, l.intercept, pred, beta, lo, hi, pl.rms_residual,
                       pl.rms_residual < power_law_rms_threshold, std::abs(l.intercept - pred) / pred};
}

CompareResult compare_reference(const EnergyCurve& curve, std::span<const ReferencePoint> reference)
{
    if (curve.rows.size() < 2) throw InvalidInput("compare_reference: curve needs >= 2 rows");
    CompareResult c;
    double lo = curve.rows.front().rho, hi = curve.rows.back().rho, sum = 0.0;
    for (const auto& p : reference) {
        if (!(p.rho > 0.0) || !(p.e > 0.0)) throw InvalidInput("reference rows need positive rho and e");
        if (p.rho < lo || p.rho > hi) {
            ++c.skipped;
            continue;
        }
        const double d = std::abs(invert_curve(curve, p.rho) - p.e) / p.e;
        c.max_relative_deviation = std::max(c.max_relative_deviation, d);
        sum += d;
        ++c.used;
    }
    if (c.used) c.mean_relative_deviation = sum / static_cast<double>(c.used);
    return c;
}

RateReport convergence_rate(std::span<const IterationRecord> trace, std::size_t n_lo, std::size_t n_hi)
{
    if (trace.size() < 20) throw InvalidInput("convergence_rate: need >= 20 iterations");
    if (!(n_hi > n_lo) || n_lo < 1) throw InvalidInput("convergence_rate: bad window");
    const double inv_rho = trace.back().b;
    RateReport rep{0.0, 0.0, n_lo, std::min(n_hi, trace.size())};
    std::vector<double> x, y;
    for (const auto& t : trace) {
        rep.rate_constant = std::max(rep.rate_constant, static_cast<double>(t.n) * (t.a - t.b) * (t.a - t.b));
        if (t.n < n_lo || t.n > rep.n_hi) continue;
        const double gap = inv_rho - t.a;
        if (!(gap > 0.0)) continue;
        x.push_back(std::log(static_cast<double>(t.n)));
        y.push_back(std::log(gap));
    }
    rep.slope = x.size() >= 3 ? least_squares(x, y).slope : 0.0;
    return rep;
}

std::string curve_to_csv(const EnergyCurve& curve)
{
    std::vector<std::vector<double>> rows;
    for (const auto& r : curve.rows) rows.push_back({r.e, r.rho, r.rho_lo, r.rho_hi, r.e_over_4pi_rho});
    return to_csv({"e", "rho", "rho_lo", "rho_hi", "e_over_4pi_rho"}, rows);
}

EnergyCurve curve_from_csv(const std::string& path)
{
    const auto t = read_csv(path);
    const auto ie = t.column("e"), ir = t.column("rho"), il = t.column("rho_lo"), ih = t.column("rho_hi");
    EnergyCurve c;
    for (const auto& row : t.rows) {
        CurveRow r;
        r.e = row[ie];
        r.rho = row[ir];
        r.rho_lo = row[il];
        r.rho_hi = row[ih];
        r.e_over_4pi_rho = r.e / (4.0 * pi * r.rho);
        c.rows.push_back(r);
    }
    for (std::size_t i = 1; i < c.rows.size(); ++i) {
        if (!(c.rows[i].rho > c.rows[i - 1].rho)) c.rho_violations.push_back(i);
        if (!(c.rows[i].rho * c.rows[i].e > c.rows[i - 1].rho * c.rows[i - 1].e))
            c.energy_density_violations.push_back(i);
    }
    return c;
}

std::vector<ReferencePoint> reference_from_csv(const std::string& path)
{
    const auto t = read_csv(path);
    const auto ir = t.column("rho"), ie = t.column("e");
    std::vector<ReferencePoint> out;
    for (const auto& row : t.rows) out.push_back({row[ir], row[ie]});
    return out;
}

} // namespace simpleq
