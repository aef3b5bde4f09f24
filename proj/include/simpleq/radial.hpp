// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace simpleq {

// Uniform radial grid r_j = j*dr, j = 0..n. The node count is n + 1.
class RadialGrid {
public:
    RadialGrid(std::size_t n, double dr);
    static RadialGrid with_rmax(std::size_t n, double rmax);

    std::size_t n() const { return n_; }
    std::size_t size() const { return n_ + 1; }
    double dr() const { return dr_; }
    double rmax() const { return static_cast<double>(n_) * dr_; }
    double r(std::size_t j) const { return static_cast<double>(j) * dr_; }

    // Spectral spacing pi/rmax of the sine basis living on this grid.
    double dk() const;

    bool operator==(const RadialGrid& o) const = default;

private:
    std::size_t n_;
    double dr_;
};

// Trapezoid weights for integrals of radial functions over R^3:
// w_j = 4 pi dr r_j^2, halved at the outer node.
std::vector<double> volume_weights(const RadialGrid& g);

class RadialField {
public:
    RadialField(RadialGrid g, std::vector<double> values);
    explicit RadialField(RadialGrid g); // zeros

    static RadialField sample(RadialGrid g, const std::function<double(double)>& f);

    const RadialGrid& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::vector<double>& mutable_values() { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t j) const { return values_[j]; }
    double& operator[](std::size_t j) { return values_[j]; }
    double r(std::size_t j) const { return grid_.r(j); }

private:
    RadialGrid grid_;
    std::vector<double> values_;
};

void require_same_grid(const RadialGrid& a, const RadialGrid& b, const char* what);

// Integral over R^3 of a radially symmetric function.
double integrate_radial(const RadialField& f);
// Integral over R^3 of f*g.
double integrate_product(const RadialField& f, const RadialField& g);
// Weighted L1 distance over R^3.
double l1_distance(const RadialField& f, const RadialField& g);
double l1_norm(const RadialField& f);
// max(0, lo - min f, max f - hi)
double pointwise_max_violation(const RadialField& f, double lo, double hi);

} // namespace simpleq
