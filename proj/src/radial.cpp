// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/radial.hpp"

#include "simpleq/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace simpleq {

RadialGrid::RadialGrid(std::size_t n, double dr) : n_(n), dr_(dr)
{
    if (n < 2) throw InvalidInput("radial grid needs at least 2 intervals");
    if (!(dr > 0.0) || !std::isfinite(dr)) throw InvalidInput("radial grid spacing must be positive");
}

RadialGrid RadialGrid::with_rmax(std::size_t n, double rmax)
{
    if (!(rmax > 0.0) || !std::isfinite(rmax)) throw InvalidInput("rmax must be positive");
    if (n < 2) throw InvalidInput("radial grid needs at least 2 intervals");
    return RadialGrid(n, rmax / static_cast<double>(n));
}

double RadialGrid::dk() const { return std::numbers::pi / rmax(); }

std::vector<double> volume_weights(const RadialGrid& g)
{
    std::vector<double> w(g.size());
    const double c = 4.0 * std::numbers::pi * g.dr();
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = c * g.r(j) * g.r(j);
    w.back() *= 0.5;
    return w;
}

RadialField::RadialField(RadialGrid g, std::vector<double> values) : grid_(g), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw GridMismatch("field has " + std::to_string(values_.size()) + " values, grid has " +
                           std::to_string(grid_.size()) + " nodes");
}

RadialField::RadialField(RadialGrid g) : grid_(g), values_(g.size(), 0.0) {}

RadialField RadialField::sample(RadialGrid g, const std::function<double(double)>& f)
{
    std::vector<double> v(g.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(g.r(j));
    return RadialField(g, std::move(v));
}

void require_same_grid(const RadialGrid& a, const RadialGrid& b, const char* what)
{
    if (!(a == b)) throw GridMismatch(std::string(what) + ": grids differ");
}

namespace {

void require_finite(const RadialField& f)
{
    for (double x : f.values())
        if (!std::isfinite(x)) throw NumericalFailure("non-finite value in radial field");
}

} // namespace

double integrate_radial(const RadialField& f)
{
    require_finite(f);
    const auto w = volume_weights(f.grid());
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * f[j];
    return s;
}

double integrate_product(const RadialField& f, const RadialField& g)
{
    require_same_grid(f.grid(), g.grid(), "integrate_product");
    require_finite(f);
    require_finite(g);
    const auto w = volume_weights(f.grid());
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * f[j] * g[j];
    return s;
}

double l1_distance(const RadialField& f, const RadialField& g)
{
    require_same_grid(f.grid(), g.grid(), "l1_distance");
    const auto w = volume_weights(f.grid());
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * std::abs(f[j] - g[j]);
    return s;
}

double l1_norm(const RadialField& f)
{
    const auto w = volume_weights(f.grid());
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * std::abs(f[j]);
    return s;
}

double pointwise_max_violation(const RadialField& f, double lo, double hi)
{
    if (hi < lo) throw InvalidInput("pointwise_max_violation: hi < lo");
    double worst = 0.0;
    for (double x : f.values()) {
        if (!std::isfinite(x)) return std::numeric_limits<double>::infinity();
        worst = std::max({worst, lo - x, x - hi});
    }
    return worst;
}

} // namespace simpleq
