// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include <string>
#include <vector>

namespace simpleq {

struct PlotSeries {
    std::string label;
    std::vector<double> x; // data units; drawn on a log10 axis
    std::vector<double> y; // drawn on a linear axis
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

// Integer decades k with log10(x_min) <= k < log10(x_max) get a major gridline.
std::vector<int> major_decades(double x_min, double x_max);

// Self-contained SVG. Output depends only on the input values.
std::string render_svg(const PlotSpec& spec);

} // namespace simpleq
