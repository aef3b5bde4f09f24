// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/solver.hpp"

#include "simpleq/error.hpp"
#include "simpleq/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace simpleq {

namespace {

void require_energy(double e)
{
    if (!(e > 0.0) || !std::isfinite(e)) throw InvalidInput("energy e must be positive and finite");
}

std::size_t pow2_at_least(double x, std::size_t floor)
{
    const double cap = 1u << 26;
    if (!(x < cap)) throw InvalidInput("grid would exceed 2^26 intervals");
    return std::max(floor, std::bit_ceil(static_cast<std::size_t>(std::ceil(std::max(x, 1.0)))));
}

RadialGrid build_grid(double dr_default, double rneed, const GridPolicy& p)
{
    if (p.n && p.rmax > 0.0) return RadialGrid::with_rmax(p.n, p.rmax);
    if (p.rmax > 0.0) {
        const double dr = p.dr > 0.0 ? p.dr : dr_default;
        return RadialGrid::with_rmax(pow2_at_least(p.rmax / dr, p.min_intervals), p.rmax);
    }
    if (p.n) return RadialGrid::with_rmax(p.n, p.dr > 0.0 ? p.dr * static_cast<double>(p.n) : rneed);
    const double dr = p.dr > 0.0 ? p.dr : dr_default;
    return RadialGrid(pow2_at_least(rneed / dr, p.min_intervals), dr);
}

// b_n from u_n; throws if the denominator collapses
double upper_b(const RadialField& u, const RadialField& v, double e)
{
    std::vector<double> w(u.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = 1.0 - u[j];
    const double s = integrate_product(v, RadialField(u.grid(), std::move(w)));
    if (!(s > 0.0) || !std::isfinite(s)) throw NumericalFailure("int (1-u) V is not positive; cannot update rho");
    return s / (2.0 * e);
}

RadialField source(const RadialField& u_prev, double rho_prev, const RadialField& v, double e)
{
    std::vector<double> g(v.values().begin(), v.values().end());
    if (rho_prev != 0.0) {
        const auto c = autoconvolve(u_prev);
        const double f = 2.0 * e * rho_prev;
        for (std::size_t j = 0; j < g.size(); ++j) g[j] += f * c[j];
    }
    return RadialField(v.grid(), std::move(g));
}

} // namespace

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::bracket_closed: return "bracket_closed";
    case SolveStatus::stationary: return "stationary";
    case SolveStatus::not_converged: return "not_converged";
    }
    return "?";
}

double default_spacing(const Potential& v, double e)
{
    require_energy(e);
    return std::min(v.feature_length() / 10.0, 0.25 / std::sqrt(e));
}

RadialGrid solve_grid(const Potential& v, double e, const GridPolicy& p)
{
    require_energy(e);
    const double rneed = std::max(p.support_multiple * v.support_radius(), p.yukawa_lengths / std::sqrt(e));
    return build_grid(default_spacing(v, e), rneed, p);
}

RadialGrid scattering_grid(const Potential& v, double dr, const GridPolicy& p)
{
    if (!(dr > 0.0)) throw InvalidInput("scattering grid spacing must be positive");
    GridPolicy q = p;
    if (q.dr <= 0.0) q.dr = dr;
    return build_grid(dr, p.support_multiple * v.support_radius(), q);
}

StepResult iterate_step(const RadialField& u_prev, double rho_prev, const RadialField& v, double e)
{
    require_energy(e);
    require_same_grid(u_prev.grid(), v.grid(), "iterate_step");
    if (!(rho_prev >= 0.0) || !std::isfinite(rho_prev)) throw InvalidInput("iterate_step: rho must be >= 0");
    auto u = apply_resolvent(source(u_prev, rho_prev, v, e), v, e);
    const double b = upper_b(u, v, e);
    return StepResult{std::move(u), 1.0 / b};
}

double fixed_point_residual(const RadialField& u, double rho, const RadialField& v, double e)
{
    const auto next = apply_resolvent(source(u, rho, v, e), v, e);
    // u = 0 is never a fixed point for V != 0; measure against the image then
    const double norm = l1_norm(u) > 0.0 ? l1_norm(u) : l1_norm(next);
    if (!(norm > 0.0)) return 0.0;
    return l1_distance(u, next) / norm;
}

Solution solve(const RadialField& v, const SolveParams& params)
{
    const double e = params.e;
    require_energy(e);
    if (!(params.tol > 0.0)) throw InvalidInput("tolerance must be positive");
    if (params.max_iter < 1) throw InvalidInput("max_iter must be >= 1");
    for (double x : v.values())
        if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidInput("potential must be finite and non-negative");
    if (!(integrate_radial(v) > 0.0)) throw InvalidInput("potential integrates to zero");

    Solution sol{.trace = {}, .u = RadialField(v.grid()), .v = v, .s = SpectralField(v.grid(), std::vector<double>(v.grid().n() - 1))};
    RadialField u(v.grid());
    double rho = 0.0, a_prev = 0.0, b_prev = 0.0;
    std::size_t quiet = 0;
    for (std::size_t n = 1; n <= params.max_iter; ++n) {
        auto step = iterate_step(u, rho, v, e);
        const double a = integrate_radial(step.u);
        const double b = 1.0 / step.rho;
        const double tele = n == 1 ? 0.0 : a_prev * a_prev / b_prev;
        sol.trace.push_back({n, a, b, std::abs(2.0 * a - b - tele) / b});
        if (n > 1) {
            const double drift = static_cast<double>(n) * (b_prev - b) / b;
            quiet = std::abs(drift) <= params.stationarity_tol ? quiet + 1 : 0;
        }
        u = std::move(step.u);
        rho = step.rho;
        a_prev = a;
        b_prev = b;
        if ((b - a) / b <= params.tol) {
            sol.status = SolveStatus::bracket_closed;
            break;
        }
        if (params.stationarity_steps > 0 && quiet >= params.stationarity_steps) {
            sol.status = SolveStatus::stationary;
            break;
        }
    }
    sol.e = e;
    sol.iterations = sol.trace.size();
    sol.a_final = a_prev;
    sol.b_final = b_prev;
    sol.rho = rho;
    sol.rho_lo = 1.0 / b_prev;
    sol.rho_hi = 1.0 / a_prev;
    sol.constraint_residual = std::abs(rho * a_prev - 1.0);
    sol.residual_fixed_point = fixed_point_residual(u, rho, v, e);
    sol.s = structure_factor(u, v, rho, e);
    std::vector<double> w(u.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = 1.0 - u[j];
    sol.s0 = rho / (2.0 * e) * integrate_product(v, RadialField(v.grid(), std::move(w)));
    sol.radially_nonincreasing = true;
    for (std::size_t j = 1; j < u.size(); ++j)
        if (u[j] > u[j - 1] + 1e-15) sol.radially_nonincreasing = false;
    sol.u = std::move(u);
    return sol;
}

Solution solve(const Potential& v, const SolveParams& params, const GridPolicy& policy)
{
    return solve(sample(v, solve_grid(v, params.e, policy)), params);
}

} // namespace simpleq
