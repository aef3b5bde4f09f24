// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/plot.hpp"

#include "simpleq/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace simpleq {

namespace {

constexpr double width = 720, height = 480;
constexpr double left = 80, right = 20, top = 40, bottom = 60;

std::string num(double x)
{
    char b[32];
    std::snprintf(b, sizeof b, "%.2f", x);
    return b;
}

std::string escape(const std::string& s)
{
    std::string o;
    for (char c : s) {
        switch (c) {
        case '&': o += "&amp;"; break;
        case '<': o += "&lt;"; break;
        case '>': o += "&gt;"; break;
        case '"': o += "&quot;"; break;
        default: o += c;
        }
    }
    return o;
}

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

} // namespace

std::vector<int> major_decades(double x_min, double x_max)
{
    if (!(x_min > 0.0) || !(x_max > x_min)) throw InvalidInput("major_decades: need 0 < x_min < x_max");
    const double lo = std::log10(x_min), hi = std::log10(x_max);
    std::vector<int> out;
    for (int k = static_cast<int>(std::ceil(lo - 1e-12)); k < hi - 1e-12; ++k) out.push_back(k);
    return out;
}

std::string render_svg(const PlotSpec& spec)
{
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : spec.series) {
        if (s.x.size() != s.y.size()) throw InvalidInput("plot series has mismatched x and y");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!(s.x[i] > 0.0) || !std::isfinite(s.y[i])) throw InvalidInput("plot needs positive x and finite y");
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    }
    if (!(x1 > x0)) throw InvalidInput("plot needs at least two distinct x values");
    if (!(y1 > y0)) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
    const double lx0 = std::log10(x0), lx1 = std::log10(x1);
    const double pw = width - left - right, ph = height - top - bottom;
    auto px = [&](double x) { return left + (std::log10(x) - lx0) / (lx1 - lx0) * pw; };
    auto py = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

    std::string o;
    o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    o += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
    o += "<text x=\"" + num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + escape(spec.title) +
         "</text>\n";
    o += "<g class=\"grid-major-x\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    for (int k : major_decades(x0, x1)) {
        const double x = left + (k - lx0) / (lx1 - lx0) * pw;
        o += "<line x1=\"" + num(x) + "\" y1=\"" + num(top) + "\" x2=\"" + num(x) + "\" y2=\"" + num(top + ph) + "\"/>\n";
    }
    o += "</g>\n<g font-size=\"11\" text-anchor=\"middle\">\n";
    for (int k : major_decades(x0, x1)) {
        const double x = left + (k - lx0) / (lx1 - lx0) * pw;
        o += "<text x=\"" + num(x) + "\" y=\"" + num(top + ph + 16) + "\">1e" + std::to_string(k) + "</text>\n";
    }
    o += "</g>\n<g font-size=\"11\" text-anchor=\"end\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double y = y0 + (y1 - y0) * i / 4.0;
        char b[32];
        std::snprintf(b, sizeof b, "%.4g", y);
        o += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(y) + 4) + "\">" + b + "</text>\n";
    }
    o += "</g>\n";
    o += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    o += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(height - 16) + "\" text-anchor=\"middle\" font-size=\"13\">" +
         escape(spec.x_label) + "</text>\n";
    o += "<text x=\"18\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " +
         num(top + ph / 2) + ")\">" + escape(spec.y_label) + "</text>\n";
    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        const auto& ser = spec.series[s];
        const char* colour = palette[s % 5];
        o += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < ser.x.size(); ++i) o += (i ? " " : "") + num(px(ser.x[i])) + "," + num(py(ser.y[i]));
        o += "\"/>\n";
        o += "<text x=\"" + num(left + pw - 8) + "\" y=\"" + num(top + 16 + 14.0 * s) + "\" text-anchor=\"end\" font-size=\"12\" fill=\"" +
             colour + "\">" + escape(ser.label) + "</text>\n";
    }
    o += "</svg>\n";
    return o;
}

} // namespace simpleq
