// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/potentials.hpp"

#include "simpleq/error.hpp"
#include "simpleq/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace simpleq {

namespace {

void require_positive(double x, const char* what)
{
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput(std::string(what) + " must be positive and finite");
}

double parse_number(std::string_view s)
{
    double x = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || p != s.data() + s.size())
        throw InvalidInput("not a number: '" + std::string(s) + "'");
    return x;
}

std::vector<double> parse_list(std::string_view s)
{
    std::vector<double> out;
    while (true) {
        auto c = s.find(',');
        out.push_back(parse_number(s.substr(0, c)));
        if (c == std::string_view::npos) break;
        s.remove_prefix(c + 1);
    }
    return out;
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

Potential Potential::exponential(double amplitude, double range)
{
    require_positive(amplitude, "potential amplitude");
    require_positive(range, "potential range");
    return Potential(PotentialFamily::exponential, amplitude, range);
}

Potential Potential::gaussian(double amplitude, double range)
{
    require_positive(amplitude, "potential amplitude");
    require_positive(range, "potential range");
    return Potential(PotentialFamily::gaussian, amplitude, range);
}

Potential Potential::square_well(double height, double radius)
{
    require_positive(height, "well height");
    require_positive(radius, "well radius");
    return Potential(PotentialFamily::square_well, height, radius);
}

Potential Potential::tabulated(std::vector<double> r, std::vector<double> v)
{
    if (r.size() != v.size() || r.size() < 2) throw InvalidInput("tabulated potential needs >= 2 (r, V) rows");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!std::isfinite(r[i]) || !std::isfinite(v[i])) throw InvalidInput("tabulated potential has non-finite entries");
        if (v[i] < 0.0) throw InvalidInput("tabulated potential must be non-negative");
        if (i > 0 && !(r[i] > r[i - 1])) throw InvalidInput("tabulated potential radii must increase strictly");
    }
    if (r.front() < 0.0) throw InvalidInput("tabulated potential radii must be >= 0");
    const double vmax = *std::max_element(v.begin(), v.end());
    if (!(vmax > 0.0)) throw InvalidInput("tabulated potential is identically zero");
    Potential p(PotentialFamily::tabulated, vmax, r.back());
    p.tab_r_ = std::move(r);
    p.tab_v_ = std::move(v);
    return p;
}

double Potential::operator()(double r) const
{
    switch (family_) {
    case PotentialFamily::exponential: return amplitude_ * std::exp(-r / range_);
    case PotentialFamily::gaussian: return amplitude_ * std::exp(-(r * r) / (range_ * range_));
    case PotentialFamily::square_well: return r < range_ ? amplitude_ : 0.0;
    case PotentialFamily::tabulated: {
        if (r <= tab_r_.front()) return tab_v_.front();
        if (r > tab_r_.back()) return 0.0;
        auto it = std::upper_bound(tab_r_.begin(), tab_r_.end(), r);
        const std::size_t i = static_cast<std::size_t>(it - tab_r_.begin());
        if (i >= tab_r_.size()) return tab_v_.back();
        const double t = (r - tab_r_[i - 1]) / (tab_r_[i] - tab_r_[i - 1]);
        return tab_v_[i - 1] + t * (tab_v_[i] - tab_v_[i - 1]);
    }
    }
    return 0.0;
}

double Potential::support_radius(double rel_tol) const
{
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw InvalidInput("support tolerance must lie in (0,1)");
    switch (family_) {
    case PotentialFamily::exponential: return range_ * std::log(1.0 / rel_tol);
    case PotentialFamily::gaussian: return range_ * std::sqrt(std::log(1.0 / rel_tol));
    case PotentialFamily::square_well: return range_;
    case PotentialFamily::tabulated: {
        std::size_t last = 0;
        for (std::size_t i = 0; i < tab_v_.size(); ++i)
            if (tab_v_[i] >= rel_tol * amplitude_) last = i;
        return last + 1 < tab_r_.size() ? tab_r_[last + 1] : tab_r_.back();
    }
    }
    return range_;
}

double Potential::feature_length() const
{
    if (family_ != PotentialFamily::tabulated) return range_;
    double h = tab_r_.back();
    for (std::size_t i = 1; i < tab_r_.size(); ++i) h = std::min(h, tab_r_[i] - tab_r_[i - 1]);
    return 10.0 * h;
}

double Potential::integral() const
{
    const double pi = std::numbers::pi;
    switch (family_) {
    case PotentialFamily::exponential: return 8.0 * pi * amplitude_ * range_ * range_ * range_;
    case PotentialFamily::gaussian: return amplitude_ * std::pow(pi, 1.5) * range_ * range_ * range_;
    case PotentialFamily::square_well: return 4.0 * pi / 3.0 * amplitude_ * range_ * range_ * range_;
    case PotentialFamily::tabulated: {
        // exact for the piecewise linear interpolant: integrate r^2 (p + q r) per segment
        double s = 0.0;
        auto seg = [](double r0, double r1, double v0, double v1) {
            const double q = (v1 - v0) / (r1 - r0), p = v0 - q * r0;
            return p * (r1 * r1 * r1 - r0 * r0 * r0) / 3.0 + q * (std::pow(r1, 4) - std::pow(r0, 4)) / 4.0;
        };
        const double r0 = tab_r_.front();
        s += tab_v_.front() * r0 * r0 * r0 / 3.0;
        for (std::size_t i = 1; i < tab_r_.size(); ++i) s += seg(tab_r_[i - 1], tab_r_[i], tab_v_[i - 1], tab_v_[i]);
        return 4.0 * pi * s;
    }
    }
    return 0.0;
}

std::string Potential::describe() const
{
    switch (family_) {
    case PotentialFamily::exponential: return "exp:" + fmt(amplitude_) + "," + fmt(range_);
    case PotentialFamily::gaussian: return "gauss:" + fmt(amplitude_) + "," + fmt(range_);
    case PotentialFamily::square_well: return "well:" + fmt(amplitude_) + "," + fmt(range_);
    case PotentialFamily::tabulated: return "tabulated(" + std::to_string(tab_r_.size()) + " rows)";
    }
    return "?";
}

Potential parse_potential(std::string_view spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw InvalidInput("potential spec needs 'kind:params', got '" + std::string(spec) + "'");
    const auto kind = spec.substr(0, colon);
    const auto rest = spec.substr(colon + 1);
    if (kind == "file") {
        auto rows = read_potential_csv(std::string(rest));
        return Potential::tabulated(std::move(rows.first), std::move(rows.second));
    }
    const auto p = parse_list(rest);
    if (kind == "exp" || kind == "gauss") {
        if (p.size() > 2) throw InvalidInput("too many parameters for " + std::string(kind));
        const double l = p.size() == 2 ? p[1] : 1.0;
        return kind == "exp" ? Potential::exponential(p[0], l) : Potential::gaussian(p[0], l);
    }
    if (kind == "well") {
        if (p.size() != 2) throw InvalidInput("well needs 'well:v0,R'");
        return Potential::square_well(p[0], p[1]);
    }
    throw InvalidInput("unknown potential kind '" + std::string(kind) + "'");
}

RadialField sample(const Potential& v, const RadialGrid& g)
{
    std::vector<double> out(g.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = v(g.r(j));
    // a well edge landing on a node gets the midpoint value, as the trapezoid rule expects
    if (v.family() == PotentialFamily::square_well) {
        const double x = v.range() / g.dr();
        const double jr = std::round(x);
        if (std::abs(x - jr) < 1e-9 && jr < static_cast<double>(g.size()))
            out[static_cast<std::size_t>(jr)] = 0.5 * v.amplitude();
    }
    return RadialField(g, std::move(out));
}

} // namespace simpleq
