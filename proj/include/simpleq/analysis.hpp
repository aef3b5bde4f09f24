// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include "simpleq/potentials.hpp"
#include "simpleq/solver.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace simpleq {

struct CurveParams {
    SolveParams solve;    // e is overwritten per row
    GridPolicy grid;
    unsigned threads = 0; // 0: SIMPLEQ_THREADS, else hardware concurrency
};

struct CurveRow {
    double e = 0.0;
    double rho = 0.0;
    double rho_lo = 0.0;
    double rho_hi = 0.0;
    double e_over_4pi_rho = 0.0;
    double first_lo = 0.0; // 1/b_1: the first iterate already bounds rho from below ...
    double first_hi = 0.0; // ... and 1/a_1 from above
    double constraint_residual = 0.0; // |rho int u - 1|
    double u_range_violation = 0.0;
    double max_identity_residual = 0.0;
    bool a_monotone = true; // a_n nondecreasing, b_n nonincreasing, a_n < b_n
    bool b_monotone = true;
    bool ordered = true;
    std::size_t iterations = 0;
    SolveStatus status = SolveStatus::not_converged;
};

struct EnergyCurve {
    std::string potential;
    double integral_v = 0.0;
    double scattering_length = 0.0;
    std::vector<CurveRow> rows; // increasing e
    // indices i where rho (resp. rho e) fails to increase from row i-1 to row i
    std::vector<std::size_t> rho_violations;
    std::vector<std::size_t> energy_density_violations;
};

unsigned threads_from_env();
std::vector<double> log_grid(double lo, double hi, std::size_t points);

CurveRow summarize(const Solution& s);
EnergyCurve trace_curve(const Potential& v, std::span<const double> energies, const CurveParams& params = {});

// e at a given rho, by monotone cubic interpolation of log e against log rho.
double invert_curve(const EnergyCurve& curve, double rho);

double lhy_constant(); // 128 / (15 sqrt(pi))
struct LhyPoint {
    double e, rho, rho_a3, c_hat;
};
std::vector<LhyPoint> lhy_check(const EnergyCurve& curve);

struct HighDensityPoint {
    double rho, ratio; // e / ((rho/2) int V)
};
std::vector<HighDensityPoint> high_density_check(const EnergyCurve& curve);

// (1/4pi) d^2(rho e)/d rho^2 by divided differences at interior rows.
struct ConvexityPoint {
    double rho, value;
};
std::vector<ConvexityPoint> convexity_profile(const EnergyCurve& curve);

struct BetaEstimate {
    double moment;       // (rho/12e) int r^2 (1-u) V
    double fit;          // -d S/d k^2 at 0 from a quadratic through the first three modes
    double relative_gap; // |moment - fit| / moment
};
BetaEstimate extract_beta(const Solution& s);

struct PowerLawFit {
    double slope;        // d log f / d log r
    double log_amplitude;
    double rms_residual; // of log f about the line
    std::size_t samples;
};
PowerLawFit fit_power_law(const RadialField& f, double r_lo, double r_hi);

struct DecayReport {
    double p;           // fitted exponent, expected -4
    double alpha_hat;   // limit of r^4 u, from a fit of r^4 u against 1/r
    double alpha_pred;  // (1/(pi^2 rho)) sqrt(1/(2e) + beta)
    double beta;
    double r_lo, r_hi;
    double rms_residual;
    bool power_law;     // rms_residual below threshold
    double relative_deviation; // |alpha_hat - alpha_pred| / alpha_pred
};
inline constexpr double power_law_rms_threshold = 0.05;
// Default window [2.5/sqrt(e), rmax/4].
DecayReport decay_fit(const Solution& s, std::optional<double> r_lo = {}, std::optional<double> r_hi = {});

struct ReferencePoint {
    double rho, e;
};
struct CompareResult {
    double max_relative_deviation = 0.0;
    double mean_relative_deviation = 0.0;
    std::size_t used = 0;
    std::size_t skipped = 0; // outside the curve's rho range
};
CompareResult compare_reference(const EnergyCurve& curve, std::span<const ReferencePoint> reference);

struct RateReport {
    double slope;          // of log(1/rho - a_n) against log n
    double rate_constant;  // max_n n (a_n - b_n)^2
    std::size_t n_lo, n_hi;
};
RateReport convergence_rate(std::span<const IterationRecord> trace, std::size_t n_lo = 10, std::size_t n_hi = 200);

// CSV forms
std::string curve_to_csv(const EnergyCurve& curve);
EnergyCurve curve_from_csv(const std::string& path);
std::vector<ReferencePoint> reference_from_csv(const std::string& path);

} // namespace simpleq
