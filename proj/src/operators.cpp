// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/operators.hpp"

#include "simpleq/error.hpp"
#include "simpleq/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace simpleq {

namespace {

// u is even in r, so u(0) ~ (4 u(dr) - u(2dr)) / 3.
double origin_value(const std::vector<double>& u) { return (4.0 * u[1] - u[2]) / 3.0; }

void require_finite(const RadialField& f, const char* what)
{
    for (double x : f.values())
        if (!std::isfinite(x)) throw InvalidInput(std::string(what) + ": non-finite input");
}

} // namespace

void solve_tridiagonal(const std::vector<double>& sub, std::vector<double> diag, const std::vector<double>& sup,
                       std::vector<double>& rhs)
{
    const std::size_t n = diag.size();
    if (sub.size() != n || sup.size() != n || rhs.size() != n) throw GridMismatch("tridiagonal: size mismatch");
    for (std::size_t i = 1; i < n; ++i) {
        if (!(std::abs(diag[i - 1]) > 0.0) || !std::isfinite(diag[i - 1]))
            throw NumericalFailure("tridiagonal: zero pivot");
        const double m = sub[i] / diag[i - 1];
        diag[i] -= m * sup[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (!(std::abs(diag[n - 1]) > 0.0) || !std::isfinite(diag[n - 1])) throw NumericalFailure("tridiagonal: zero pivot");
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
}

RadialField apply_yukawa(const RadialField& g, double e, LaplacianSymbol symbol)
{
    if (!(e > 0.0) || !std::isfinite(e)) throw InvalidInput("apply_yukawa: e must be positive");
    require_finite(g, "apply_yukawa");
    const auto& grid = g.grid();
    const std::size_t n = grid.n();
    const double dr = grid.dr();
    const RadialGrid padded(2 * n, dr);
    std::vector<double> gp(padded.size(), 0.0);
    std::copy(g.values().begin(), g.values().end(), gp.begin());
    gp[n] *= 0.5;
    auto s = radial_fourier(RadialField(padded, std::move(gp)));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double k = s.k(i);
        double lap = k * k;
        if (symbol == LaplacianSymbol::finite_difference) {
            const double t = std::sin(0.5 * k * dr);
            lap = 4.0 * t * t / (dr * dr);
        }
        s[i] /= lap + 4.0 * e;
    }
    const auto h = inverse_radial_fourier(s);
    std::vector<double> out(h.values().begin(), h.values().begin() + static_cast<std::ptrdiff_t>(n + 1));
    out[0] = origin_value(out);
    return RadialField(grid, std::move(out));
}

RadialField apply_resolvent(const RadialField& g, const RadialField& v, double e)
{
    require_same_grid(g.grid(), v.grid(), "apply_resolvent");
    if (!(e >= 0.0) || !std::isfinite(e)) throw InvalidInput("apply_resolvent: e must be >= 0");
    require_finite(g, "apply_resolvent");
    require_finite(v, "apply_resolvent");
    const auto& grid = g.grid();
    const std::size_t n = grid.n();
    const double h2 = 1.0 / (grid.dr() * grid.dr());
    // unknowns w_j = r_j u_j, j = 1..n; w_0 = 0
    std::vector<double> sub(n, -h2), diag(n), sup(n, -h2), rhs(n);
    for (std::size_t j = 1; j <= n; ++j) {
        diag[j - 1] = 2.0 * h2 + 4.0 * e + v[j];
        rhs[j - 1] = grid.r(j) * g[j];
    }
    sub[0] = 0.0;
    sup[n - 1] = 0.0;
    // wall ghost w_{n+1} = w_{n-1} + 2 w_n / n keeps the trapezoid mass balance exact
    diag[n - 1] = 2.0 * (1.0 - 1.0 / static_cast<double>(n)) * h2 + 4.0 * e + v[n];
    sub[n - 1] = -2.0 * h2;
    solve_tridiagonal(sub, std::move(diag), sup, rhs);
    std::vector<double> u(n + 1);
    for (std::size_t j = 1; j <= n; ++j) u[j] = rhs[j - 1] / grid.r(j);
    u[0] = origin_value(u);
    return RadialField(grid, std::move(u));
}

ScatteringResult solve_scattering(const RadialField& v)
{
    require_finite(v, "solve_scattering");
    const auto& grid = v.grid();
    const std::size_t n = grid.n();
    double vmax = 0.0;
    for (double x : v.values()) {
        if (x < 0.0) throw InvalidInput("solve_scattering: potential must be non-negative");
        vmax = std::max(vmax, x);
    }
    if (v[n] > 1e-12 * vmax)
        throw InvalidInput("solve_scattering: potential has not decayed by rmax; enlarge the grid");
    const double h2 = 1.0 / (grid.dr() * grid.dr());
    std::vector<double> sub(n, -h2), diag(n), sup(n, -h2), rhs(n);
    for (std::size_t j = 1; j <= n; ++j) {
        diag[j - 1] = 2.0 * h2 + v[j];
        rhs[j - 1] = grid.r(j) * v[j];
    }
    sub[0] = 0.0;
    sup[n - 1] = 0.0;
    sub[n - 1] = -2.0 * h2; // w'(rmax) = 0
    solve_tridiagonal(sub, std::move(diag), sup, rhs);
    std::vector<double> phi(n + 1);
    for (std::size_t j = 1; j <= n; ++j) phi[j] = rhs[j - 1] / grid.r(j);
    phi[0] = origin_value(phi);
    RadialField f(grid, std::move(phi));

    // outside the support r phi = a exactly, so the wall value is a
    const double a_boundary = rhs[n - 1];
    std::vector<double> one_minus(n + 1);
    for (std::size_t j = 0; j <= n; ++j) one_minus[j] = 1.0 - f[j];
    const double a_integral = integrate_product(v, RadialField(grid, std::move(one_minus))) / (4.0 * std::numbers::pi);
    const double scale = std::max(std::abs(a_integral), 1e-300);
    const bool ok = std::abs(a_boundary - a_integral) <= 0.01 * scale;
    return ScatteringResult{std::move(f), a_boundary, a_integral, a_integral, ok};
}

} // namespace simpleq
