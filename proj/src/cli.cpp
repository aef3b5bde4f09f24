// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/cli.hpp"

#include "simpleq/analysis.hpp"
#include "simpleq/error.hpp"
#include "simpleq/io.hpp"
#include "simpleq/operators.hpp"
#include "simpleq/plot.hpp"
#include "simpleq/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

namespace simpleq {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string potential = "exp:1.0";
    double e = 0.0;
    double e_min = 1e-4, e_max = 1e2;
    std::size_t points = 49;
    std::size_t grid_n = 0;
    double grid_rmax = 0.0;
    double dr = 0.0;
    double tol = 1e-10;
    double stationarity_tol = 1e-8;
    std::size_t max_iter = 100000;
    std::string out = ".";
    bool svg = false;
    std::string curve;
    std::string reference;
};

GridPolicy policy(const Options& o)
{
    GridPolicy p;
    p.n = o.grid_n;
    p.rmax = o.grid_rmax;
    p.dr = o.dr;
    return p;
}

SolveParams solve_params(const Options& o)
{
    SolveParams p;
    p.e = o.e;
    p.tol = o.tol;
    p.stationarity_tol = o.stationarity_tol;
    p.max_iter = o.max_iter;
    return p;
}

std::string out_path(const Options& o, const std::string& name)
{
    std::filesystem::create_directories(o.out);
    return (std::filesystem::path(o.out) / name).string();
}

void write_json(const std::string& path, const ordered_json& j) { write_file_atomic(path, j.dump(2) + "\n"); }

ordered_json grid_json(const RadialGrid& g) { return {{"n", g.n()}, {"dr", g.dr()}, {"rmax", g.rmax()}}; }

EnergyCurve build_curve(const Options& o)
{
    const auto v = parse_potential(o.potential);
    CurveParams cp;
    cp.solve = solve_params(o);
    cp.grid = policy(o);
    return trace_curve(v, log_grid(o.e_min, o.e_max, o.points), cp);
}

EnergyCurve load_or_build_curve(const Options& o)
{
    if (o.curve.empty()) return build_curve(o);
    auto c = curve_from_csv(o.curve);
    const auto v = parse_potential(o.potential);
    c.potential = v.describe();
    c.integral_v = v.integral();
    return c;
}

int cmd_solve(const Options& o)
{
    if (!(o.e > 0.0)) throw InvalidInput("solve needs --e > 0");
    const auto v = parse_potential(o.potential);
    const auto s = solve(v, solve_params(o), policy(o));
    ordered_json j = {{"e", s.e},
                      {"rho", s.rho},
                      {"a_final", s.a_final},
                      {"b_final", s.b_final},
                      {"iterations", s.iterations},
                      {"residual_fixed_point", s.residual_fixed_point},
                      {"constraint_residual", s.constraint_residual},
                      {"grid", grid_json(s.u.grid())},
                      {"status", to_string(s.status)},
                      {"rho_lo", s.rho_lo},
                      {"rho_hi", s.rho_hi},
                      {"s0", s.s0},
                      {"radially_nonincreasing", s.radially_nonincreasing},
                      {"potential", v.describe()}};
    write_json(out_path(o, "solution.json"), j);
    write_file_atomic(out_path(o, "u.csv"), field_to_csv(s.u));
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < s.s.size(); ++i) rows.push_back({s.s.k(i), s.s[i]});
    write_file_atomic(out_path(o, "s_of_k.csv"), to_csv({"k", "value"}, rows));
    rows.clear();
    for (const auto& t : s.trace) rows.push_back({static_cast<double>(t.n), t.a, t.b, t.identity_residual});
    write_file_atomic(out_path(o, "trace.csv"), to_csv({"n", "a", "b", "identity_residual"}, rows));
    std::cout << "e = " << format_double(s.e) << "  rho = " << format_double(s.rho) << "  iterations = " << s.iterations
              << "  status = " << to_string(s.status) << "\n";
    return s.converged() ? 0 : 1;
}

void write_curve_svg(const Options& o, const EnergyCurve& c, const std::string& name)
{
    PlotSeries s{c.potential, {}, {}};
    for (const auto& r : c.rows) {
        s.x.push_back(r.rho);
        s.y.push_back(r.e_over_4pi_rho);
    }
    write_file_atomic(out_path(o, name), render_svg({"e / (4 pi rho)", "rho", "e / (4 pi rho)", {s}}));
}

// Rows read back from CSV carry no status, so only computed curves can fail the run.
int report_violations(const EnergyCurve& c, bool computed = true)
{
    if (!c.rho_violations.empty())
        std::cerr << "diagnostic: rho(e) fails to increase at " << c.rho_violations.size() << " row(s)\n";
    if (!c.energy_density_violations.empty())
        std::cerr << "diagnostic: rho e fails to increase at " << c.energy_density_violations.size() << " row(s)\n";
    if (!computed) return 0;
    for (const auto& r : c.rows)
        if (r.status == SolveStatus::not_converged) return 1;
    return 0;
}

int cmd_curve(const Options& o)
{
    const auto c = build_curve(o);
    write_file_atomic(out_path(o, "curve.csv"), curve_to_csv(c));
    if (o.svg) write_curve_svg(o, c, "curve.svg");
    std::cout << c.rows.size() << " rows, a = " << format_double(c.scattering_length) << "\n";
    return report_violations(c);
}

int cmd_scattering(const Options& o)
{
    const auto v = parse_potential(o.potential);
    const double dr = o.dr > 0.0 ? o.dr : v.feature_length() / 10.0;
    const auto s = solve_scattering(sample(v, scattering_grid(v, dr, policy(o))));
    ordered_json j = {{"a", s.a},
                      {"a_boundary", s.a_boundary},
                      {"a_integral", s.a_integral},
                      {"consistent", s.consistent},
                      {"grid", grid_json(s.phi.grid())},
                      {"potential", v.describe()}};
    write_json(out_path(o, "scattering.json"), j);
    write_file_atomic(out_path(o, "phi.csv"), field_to_csv(s.phi));
    std::cout << "a = " << format_double(s.a) << "\n";
    if (!s.consistent) std::cerr << "warning: boundary and integral scattering lengths differ by more than 1%\n";
    return 0;
}

int cmd_decay(const Options& o)
{
    if (!(o.e > 0.0)) throw InvalidInput("decay needs --e > 0");
    const auto v = parse_potential(o.potential);
    const auto s = solve(v, solve_params(o), policy(o));
    const auto d = decay_fit(s);
    const auto b = extract_beta(s);
    ordered_json j = {{"e", s.e},
                      {"rho", s.rho},
                      {"p", d.p},
                      {"alpha_hat", d.alpha_hat},
                      {"alpha_pred", d.alpha_pred},
                      {"beta", d.beta},
                      {"beta_fit", b.fit},
                      {"r_lo", d.r_lo},
                      {"r_hi", d.r_hi},
                      {"rms_residual", d.rms_residual},
                      {"power_law", d.power_law},
                      {"relative_deviation", d.relative_deviation}};
    write_json(out_path(o, "decay.json"), j);
    std::cout << "p = " << format_double(d.p) << "  alpha_hat = " << format_double(d.alpha_hat)
              << "  alpha_pred = " << format_double(d.alpha_pred) << "\n";
    return s.converged() ? 0 : 1;
}

int cmd_convexity(const Options& o)
{
    const auto c = load_or_build_curve(o);
    const auto prof = convexity_profile(c);
    std::vector<std::vector<double>> rows;
    PlotSeries s{"(1/4pi) d2(rho e)/drho2", {}, {}};
    for (const auto& p : prof) {
        rows.push_back({p.rho, p.value});
        s.x.push_back(p.rho);
        s.y.push_back(p.value);
    }
    write_file_atomic(out_path(o, "convexity.csv"), to_csv({"rho", "value"}, rows));
    if (o.svg) write_file_atomic(out_path(o, "convexity.svg"), render_svg({"convexity", "rho", "(1/4pi) d2(rho e)/drho2", {s}}));
    std::size_t bad = 0;
    for (const auto& p : prof) bad += p.value <= 0.0;
    std::cout << prof.size() << " points, " << bad << " non-positive\n";
    return report_violations(c, o.curve.empty());
}

int cmd_asymptotics(const Options& o)
{
    auto c = load_or_build_curve(o);
    if (!o.curve.empty()) {
        const auto v = parse_potential(o.potential);
        c.scattering_length = solve_scattering(sample(v, scattering_grid(v, v.feature_length() / 10.0))).a;
    }
    std::vector<std::vector<double>> rows;
    for (const auto& p : lhy_check(c)) rows.push_back({p.e, p.rho, p.rho_a3, p.c_hat});
    write_file_atomic(out_path(o, "lhy.csv"), to_csv({"e", "rho", "rho_a3", "c_hat"}, rows));
    rows.clear();
    for (const auto& p : high_density_check(c)) rows.push_back({p.rho, p.ratio});
    write_file_atomic(out_path(o, "high_density.csv"), to_csv({"rho", "ratio"}, rows));
    std::cout << "a = " << format_double(c.scattering_length) << "  LHY constant = " << format_double(lhy_constant())
              << "\n";
    return report_violations(c, o.curve.empty());
}

int cmd_compare(const Options& o)
{
    if (o.curve.empty() || o.reference.empty()) throw InvalidInput("compare needs --curve and --reference");
    const auto c = curve_from_csv(o.curve);
    const auto ref = reference_from_csv(o.reference);
    const auto r = compare_reference(c, ref);
    ordered_json j = {{"max_relative_deviation", r.max_relative_deviation},
                      {"mean_relative_deviation", r.mean_relative_deviation},
                      {"used", r.used},
                      {"skipped", r.skipped}};
    write_json(out_path(o, "compare.json"), j);
    std::cout << "max relative deviation = " << format_double(r.max_relative_deviation) << " over " << r.used
              << " point(s), " << r.skipped << " skipped\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"Solver for the simple equation of the Bose gas"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--potential", o.potential, "exp:A[,L] | gauss:A[,L] | well:v0,R | file:path.csv");
        c->add_option("--grid-n", o.grid_n, "number of grid intervals");
        c->add_option("--grid-rmax", o.grid_rmax, "grid radius");
        c->add_option("--dr", o.dr, "grid spacing");
        c->add_option("--tol", o.tol, "bracket tolerance");
        c->add_option("--stationarity-tol", o.stationarity_tol, "tolerance on n (b_{n-1} - b_n)/b_n");
        c->add_option("--max-iter", o.max_iter, "iteration cap");
        c->add_option("--out", o.out, "output directory");
        c->add_flag("--svg", o.svg, "also write an SVG plot");
    };
    auto range = [&](CLI::App* c) {
        c->add_option("--e-min", o.e_min, "smallest e");
        c->add_option("--e-max", o.e_max, "largest e");
        c->add_option("--points", o.points, "number of log-spaced energies");
    };

    auto* solve_cmd = app.add_subcommand("solve", "solve at one energy");
    common(solve_cmd);
    solve_cmd->add_option("--e", o.e, "energy per particle")->required();
    auto* curve_cmd = app.add_subcommand("curve", "trace rho(e) over a log grid of energies");
    common(curve_cmd);
    range(curve_cmd);
    auto* scat_cmd = app.add_subcommand("scattering", "scattering length of the potential");
    common(scat_cmd);
    auto* decay_cmd = app.add_subcommand("decay", "fit the large-r tail of u");
    common(decay_cmd);
    decay_cmd->add_option("--e", o.e, "energy per particle")->required();
    auto* conv_cmd = app.add_subcommand("convexity", "second derivative of rho e");
    common(conv_cmd);
    range(conv_cmd);
    conv_cmd->add_option("--curve", o.curve, "reuse a curve.csv instead of solving");
    auto* asym_cmd = app.add_subcommand("asymptotics", "low and high density limits");
    common(asym_cmd);
    range(asym_cmd);
    asym_cmd->add_option("--curve", o.curve, "reuse a curve.csv instead of solving");
    auto* cmp_cmd = app.add_subcommand("compare", "compare a curve against reference (rho, e) data");
    common(cmp_cmd);
    cmp_cmd->add_option("--curve", o.curve, "curve.csv")->required();
    cmp_cmd->add_option("--reference", o.reference, "CSV with columns rho,e")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve_cmd) return cmd_solve(o);
        if (*curve_cmd) return cmd_curve(o);
        if (*scat_cmd) return cmd_scattering(o);
        if (*decay_cmd) return cmd_decay(o);
        if (*conv_cmd) return cmd_convexity(o);
        if (*asym_cmd) return cmd_asymptotics(o);
        if (*cmp_cmd) return cmd_compare(o);
    } catch (const NumericalFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace simpleq
