// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simpleq/analysis.hpp"
#include "simpleq/error.hpp"
#include "simpleq/io.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>

using namespace simpleq;
using std::numbers::pi;

namespace {

EnergyCurve synthetic(double (*e_of_rho)(double), double lo, double hi, std::size_t n)
{
    EnergyCurve c;
    c.scattering_length = 1.25;
    c.integral_v = 8 * pi;
    for (double rho : log_grid(lo, hi, n)) {
        CurveRow r;
        r.e = e_of_rho(rho);
        r.rho = r.rho_lo = r.rho_hi = rho;
        r.e_over_4pi_rho = r.e / (4 * pi * rho);
        c.rows.push_back(r);
    }
    return c;
}

double power_curve(double rho) { return 3.0 * std::pow(rho, 1.5); }
double lhy_curve(double rho)
{
    const double a = 1.25;
    return 2 * pi * rho * a * (1 + lhy_constant() * std::sqrt(rho * a * a * a));
}

std::vector<IterationRecord> trace_from(double (*a_of_n)(double), std::size_t n)
{
    std::vector<IterationRecord> t;
    for (std::size_t i = 1; i <= n; ++i) t.push_back({i, a_of_n(static_cast<double>(i)), 1.0, 0.0});
    return t;
}

} // namespace

TEST_CASE("log grid")
{
    auto g = log_grid(1e-4, 1e2, 49);
    CHECK(g.size() == 49);
    CHECK(g.front() == 1e-4);
    CHECK(g.back() == 1e2);
    CHECK(g[8] == doctest::Approx(1e-3));
    CHECK_THROWS_AS(log_grid(0, 1, 3), InvalidInput);
    CHECK_THROWS_AS(log_grid(1, 1, 3), InvalidInput);
}

TEST_CASE("invert_curve is exact on power laws and checks its range")
{
    auto c = synthetic(power_curve, 1e-3, 1e2, 11);
    for (double rho : {1e-3, 2.5e-3, 0.7, 33.0, 1e2}) CHECK(invert_curve(c, rho) == doctest::Approx(power_curve(rho)).epsilon(1e-12));
    CHECK_THROWS_AS(invert_curve(c, 1e-4), OutOfRange);
    CHECK_THROWS_AS(invert_curve(c, 1e3), OutOfRange);
    std::swap(c.rows[3], c.rows[4]);
    CHECK_THROWS_AS(invert_curve(c, 0.5), NumericalFailure);
}

TEST_CASE("lhy_check recovers the constant of a synthetic curve")
{
    auto c = synthetic(lhy_curve, 1e-8, 1e-4, 5);
    for (const auto& p : lhy_check(c)) {
        CHECK(p.c_hat == doctest::Approx(lhy_constant()).epsilon(1e-6));
        CHECK(p.rho_a3 == doctest::Approx(p.rho * std::pow(1.25, 3)));
    }
    CHECK(lhy_constant() == doctest::Approx(4.8144).epsilon(1e-4));
    c.scattering_length = 0;
    CHECK_THROWS_AS(lhy_check(c), InvalidInput);
}

TEST_CASE("high density ratio and convexity on synthetic curves")
{
    auto c = synthetic([](double rho) { return 0.5 * rho * 8 * pi; }, 1.0, 10.0, 5);
    for (const auto& p : high_density_check(c)) CHECK(p.ratio == doctest::Approx(1.0));
    // rho e = 4 pi rho^2 a  =>  (1/4pi) d2/drho2 = 2a
    auto q = synthetic([](double rho) { return 4 * pi * rho * 1.25; }, 1e-3, 1.0, 9);
    auto prof = convexity_profile(q);
    CHECK(prof.size() == 7);
    for (const auto& p : prof) CHECK(p.value == doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("power-law fit separates r^-4 from exponential decay")
{
    RadialGrid g(4000, 0.05);
    auto pl = fit_power_law(RadialField::sample(g, [](double r) { return 7.0 / std::pow(r, 4); }), 10, 150);
    CHECK(pl.slope == doctest::Approx(-4.0).epsilon(1e-10));
    CHECK(pl.log_amplitude == doctest::Approx(std::log(7.0)));
    CHECK(pl.rms_residual < 1e-10);
    auto ex = fit_power_law(RadialField::sample(g, [](double r) { return std::exp(-r / 10.0); }), 10, 150);
    CHECK(ex.rms_residual > power_law_rms_threshold);
    CHECK_THROWS_AS(fit_power_law(RadialField(g), 10, 150), NumericalFailure);
    CHECK_THROWS_AS(fit_power_law(RadialField(g), 10, 5), InvalidInput);
    CHECK_THROWS_AS(fit_power_law(RadialField::sample(g, [](double) { return 1.0; }), 10, 10.06), OutOfRange);
}

TEST_CASE("decay fit and beta on a real solve")
{
    SolveParams p;
    p.e = 1e-2;
    auto s = solve(Potential::exponential(1.0), p);
    auto b = extract_beta(s);
    CHECK(b.relative_gap < 1e-2);
    auto d = decay_fit(s);
    CHECK(d.p == doctest::Approx(-4.0).epsilon(0.05));
    CHECK(d.power_law);
    CHECK(d.relative_deviation < 0.1);
    CHECK(d.beta == b.moment);
    CHECK(d.r_lo == doctest::Approx(25.0));
    CHECK_THROWS_AS(decay_fit(s, 100.0, 50.0), OutOfRange);
}

TEST_CASE("compare_reference")
{
    auto c = synthetic(power_curve, 1e-3, 1e2, 21);
    std::vector<ReferencePoint> ref;
    for (double rho : {2e-3, 0.1, 5.0}) ref.push_back({rho, power_curve(rho)});
    ref.push_back({1e3, 1.0});
    auto r = compare_reference(c, ref);
    CHECK(r.used == 3);
    CHECK(r.skipped == 1);
    CHECK(r.max_relative_deviation < 1e-10);
    for (auto& p : ref) p.e *= 1.05;
    r = compare_reference(c, ref);
    CHECK(r.max_relative_deviation == doctest::Approx(0.05 / 1.05).epsilon(1e-6));
    std::vector<ReferencePoint> bad{{-1.0, 1.0}};
    CHECK_THROWS_AS(compare_reference(c, bad), InvalidInput);
}

TEST_CASE("convergence_rate on synthetic traces")
{
    auto flat = trace_from([](double) { return 0.5; }, 300);
    flat.push_back({301, 0.5, 1.0, 0.0});
    auto r = convergence_rate(flat);
    CHECK(r.slope == doctest::Approx(0.0).epsilon(1e-12));
    auto cubic = trace_from([](double n) { return 1.0 - 1.0 / (n * n * n); }, 1000);
    cubic.back().a = 1.0; // the last record stands in for 1/rho
    CHECK(convergence_rate(cubic).slope == doctest::Approx(-3.0).epsilon(1e-6));
    CHECK(convergence_rate(cubic).rate_constant == doctest::Approx(1.0)); // n = 1 dominates
    CHECK_THROWS_AS(convergence_rate(trace_from([](double) { return 0.5; }, 10)), InvalidInput);
}

TEST_CASE("trace_curve rows, threads and diagnostics")
{
    const auto v = Potential::exponential(1.0);
    const auto es = log_grid(1e-2, 1.0, 5);
    CurveParams p;
    p.threads = 1;
    auto one = trace_curve(v, es, p);
    p.threads = 3;
    auto three = trace_curve(v, es, p);
    REQUIRE(one.rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(one.rows[i].rho == three.rows[i].rho);
        CHECK(one.rows[i].status != SolveStatus::not_converged);
        CHECK(one.rows[i].rho_lo <= one.rows[i].rho);
        CHECK(one.rows[i].rho <= one.rows[i].rho_hi);
        CHECK(one.rows[i].a_monotone);
        CHECK(one.rows[i].b_monotone);
        CHECK(one.rows[i].ordered);
    }
    CHECK(one.rho_violations.empty());
    CHECK(one.energy_density_violations.empty());
    CHECK(one.scattering_length == doctest::Approx(1.2543).epsilon(1e-3));
    CHECK(one.integral_v == doctest::Approx(8 * pi));
    std::vector<double> bad{1.0, 0.5};
    CHECK_THROWS_AS(trace_curve(v, bad), InvalidInput);
    std::vector<double> neg{-1.0};
    CHECK_THROWS_AS(trace_curve(v, neg), InvalidInput);
}

TEST_CASE("curve CSV round-trip")
{
    auto c = synthetic(power_curve, 1e-3, 1e2, 7);
    const auto path = (std::filesystem::temp_directory_path() / "simpleq_curve.csv").string();
    write_file_atomic(path, curve_to_csv(c));
    auto d = curve_from_csv(path);
    REQUIRE(d.rows.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(d.rows[i].e == c.rows[i].e);
        CHECK(d.rows[i].rho == c.rows[i].rho);
    }
    std::filesystem::remove(path);
}

TEST_CASE("SIMPLEQ_THREADS")
{
    setenv("SIMPLEQ_THREADS", "3", 1);
    CHECK(threads_from_env() == 3);
    setenv("SIMPLEQ_THREADS", "0", 1);
    CHECK(threads_from_env() == 1);
    setenv("SIMPLEQ_THREADS", "x", 1);
    CHECK_THROWS_AS(threads_from_env(), InvalidInput);
    unsetenv("SIMPLEQ_THREADS");
    CHECK(threads_from_env() >= 1);
}
