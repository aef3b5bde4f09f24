// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include "simpleq/radial.hpp"

#include <vector>

namespace simpleq {

// Symbol used for -Laplacian when applying G_e spectrally.
//   finite_difference: (4/dr^2) sin^2(k dr/2), the exact inverse of the three-point stencil
//   continuum:         k^2
enum class LaplacianSymbol { finite_difference, continuum };

// G_e g = (-Lap + 4e)^{-1} g on R^3, computed on a grid padded to 2 rmax and cut back.
RadialField apply_yukawa(const RadialField& g, double e,
                         LaplacianSymbol symbol = LaplacianSymbol::finite_difference);

// K_e g = (-Lap + 4e + V)^{-1} g in the ball r <= rmax with a reflecting wall.
// The wall closure conserves volume integrals: int (4e + V) K_e g = int g.
RadialField apply_resolvent(const RadialField& g, const RadialField& v, double e);

struct ScatteringResult {
    RadialField phi;
    double a_boundary; // r phi(r) at the wall
    double a_integral; // (1/4pi) int V (1 - phi)
    double a;          // the value reported downstream (a_integral)
    bool consistent;   // |a_boundary - a_integral| <= 1% of a
};

// Zero-energy scattering problem -Lap phi = (1 - phi) V with phi' = 0 at rmax.
ScatteringResult solve_scattering(const RadialField& v);

// Solves sub/diag/sup tridiagonal system in place (Thomas). rhs is overwritten with the solution.
void solve_tridiagonal(const std::vector<double>& sub, std::vector<double> diag, const std::vector<double>& sup,
                       std::vector<double>& rhs);

} // namespace simpleq
