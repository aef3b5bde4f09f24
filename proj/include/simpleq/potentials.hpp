// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include "simpleq/radial.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simpleq {

enum class PotentialFamily { exponential, gaussian, square_well, tabulated };

// Non-negative, radially symmetric pair potential.
//   exponential: A exp(-r/L)
//   gaussian:    A exp(-r^2/L^2)
//   square_well: A for r < L, 0 beyond
//   tabulated:   piecewise linear through (r, V) samples, zero past the last sample
class Potential {
public:
    static Potential exponential(double amplitude, double range = 1.0);
    static Potential gaussian(double amplitude, double range = 1.0);
    static Potential square_well(double height, double radius);
    static Potential tabulated(std::vector<double> r, std::vector<double> v);

    PotentialFamily family() const { return family_; }
    double amplitude() const { return amplitude_; }
    double range() const { return range_; }

    double operator()(double r) const;

    // Radius beyond which V < rel_tol * max V.
    double support_radius(double rel_tol = 1e-12) const;
    // Length the grid spacing should resolve.
    double feature_length() const;
    // Closed form where one exists, fine quadrature otherwise.
    double integral() const;
    std::string describe() const;

private:
    Potential(PotentialFamily f, double a, double l) : family_(f), amplitude_(a), range_(l) {}
    PotentialFamily family_;
    double amplitude_;
    double range_;
    std::vector<double> tab_r_, tab_v_;
};

// "exp:A[,L]" "gauss:A[,L]" "well:v0,R" "file:path.csv"
Potential parse_potential(std::string_view spec);

RadialField sample(const Potential& v, const RadialGrid& g);

} // namespace simpleq
