// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include "simpleq/radial.hpp"

#include <span>
#include <vector>

namespace simpleq {

enum class TransformMethod { fast, direct };

// out_m = sum_{j=1..n} in_j sin(pi j m / (n+1)), m = 1..n (unnormalised DST-I, 0-based storage).
void dst1(std::span<const double> in, std::span<double> out, TransformMethod method = TransformMethod::fast);

// Samples of a 3D radial Fourier transform at k_m = m pi / rmax, m = 1..n-1.
class SpectralField {
public:
    SpectralField(RadialGrid g, std::vector<double> values);

    const RadialGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double k(std::size_t i) const { return static_cast<double>(i + 1) * grid_.dk(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    std::span<const double> values() const { return values_; }

private:
    RadialGrid grid_;
    std::vector<double> values_;
};

// fhat(k) = (4 pi / k) int_0^rmax r f(r) sin(kr) dr, trapezoid in r.
SpectralField radial_fourier(const RadialField& f, TransformMethod method = TransformMethod::fast);
// Exact inverse of radial_fourier on the interior nodes; the outer node is set to 0.
RadialField inverse_radial_fourier(const SpectralField& s, TransformMethod method = TransformMethod::fast);

// What happens to the part of f*f that lands beyond rmax.
//   reflecting: folded back with volume weights, so int(f*f) = (int f)^2 up to the
//               spectral error of the padded transform (round-off once f is small at rmax)
//   open:       dropped
enum class Closure { reflecting, open };

// 3D self-convolution of a radial function, sampled on the same grid.
RadialField autoconvolve(const RadialField& f, Closure closure = Closure::reflecting,
                         TransformMethod method = TransformMethod::fast);

// S(k) = (rho / 2e) FT[(1-u)V](k)
SpectralField structure_factor(const RadialField& u, const RadialField& v, double rho, double e);

} // namespace simpleq
