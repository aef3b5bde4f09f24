// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include "simpleq/potentials.hpp"
#include "simpleq/radial.hpp"
#include "simpleq/transforms.hpp"

#include <string>
#include <vector>

namespace simpleq {

// How a grid is chosen for a given potential and energy. Zero means "derive".
struct GridPolicy {
    double dr = 0.0;                  // spacing; default min(L/10, 0.25/sqrt(e))
    std::size_t n = 0;                // intervals
    double rmax = 0.0;                // radius
    double yukawa_lengths = 30.0;     // rmax >= this / sqrt(e)
    double support_multiple = 8.0;    // rmax >= this * support radius of V
    std::size_t min_intervals = 8192; // n is a power of two at least this
};

double default_spacing(const Potential& v, double e);
RadialGrid solve_grid(const Potential& v, double e, const GridPolicy& policy = {});
// Grid for the scattering problem: spacing dr, radius covering the support of V.
RadialGrid scattering_grid(const Potential& v, double dr, const GridPolicy& policy = {});

struct SolveParams {
    double e = 0.0;
    double tol = 1e-10;                 // stop when (b - a)/b <= tol
    double stationarity_tol = 1e-8;     // or when n (b_{n-1} - b_n)/b_n <= this ...
    std::size_t stationarity_steps = 5; // ... for this many consecutive steps
    std::size_t max_iter = 100000;
};

struct IterationRecord {
    std::size_t n;
    double a;                 // int u_n
    double b;                 // (1/2e) int (1 - u_n) V = 1/rho_n
    double identity_residual; // |2a_n - b_n - a_{n-1}^2 / b_{n-1}| / b_n
};

struct StepResult {
    RadialField u;
    double rho;
};

// One step of the monotone iteration:
//   u = K_e(V + 2 e rho_prev u_prev*u_prev),  rho = 2e / int (1 - u) V
StepResult iterate_step(const RadialField& u_prev, double rho_prev, const RadialField& v, double e);

enum class SolveStatus { bracket_closed, stationary, not_converged };
std::string to_string(SolveStatus s);

struct Solution {
    double e = 0.0;
    double rho = 0.0;    // 1/b_final
    double rho_lo = 0.0; // 1/b_final
    double rho_hi = 0.0; // 1/a_final
    double a_final = 0.0;
    double b_final = 0.0;
    std::size_t iterations = 0;
    SolveStatus status = SolveStatus::not_converged;
    double residual_fixed_point = 0.0; // ||u - K_e(V + 2 e rho u*u)||_1 / ||u||_1
    double constraint_residual = 0.0;  // |rho int u - 1|
    double s0 = 0.0;                   // S(0)
    bool radially_nonincreasing = false; // diagnostic only
    std::vector<IterationRecord> trace;
    RadialField u;
    RadialField v;
    SpectralField s; // structure factor

    bool converged() const { return status != SolveStatus::not_converged; }
};

double fixed_point_residual(const RadialField& u, double rho, const RadialField& v, double e);

Solution solve(const RadialField& v, const SolveParams& params);
Solution solve(const Potential& v, const SolveParams& params, const GridPolicy& policy = {});

} // namespace simpleq
