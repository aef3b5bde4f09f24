// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/transforms.hpp"

#include "simpleq/error.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace simpleq {

namespace {

// The FFTW planner is not re-entrant; execution on distinct plans is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

class DstPlan {
public:
    explicit DstPlan(std::size_t n) : n_(n)
    {
        std::lock_guard lock(planner_mutex());
        in_ = fftw_alloc_real(n);
        out_ = fftw_alloc_real(n);
        plan_ = fftw_plan_r2r_1d(static_cast<int>(n), in_, out_, FFTW_RODFT00, FFTW_ESTIMATE);
        if (!plan_) throw NumericalFailure("FFTW could not plan a DST of size " + std::to_string(n));
    }
    ~DstPlan()
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
        fftw_free(in_);
        fftw_free(out_);
    }
    DstPlan(const DstPlan&) = delete;
    DstPlan& operator=(const DstPlan&) = delete;

    void run(std::span<const double> in, std::span<double> out)
    {
        std::copy(in.begin(), in.end(), in_);
        fftw_execute(plan_);
        // RODFT00 computes twice the plain sine sum
        for (std::size_t i = 0; i < n_; ++i) out[i] = 0.5 * out_[i];
    }

private:
    std::size_t n_;
    double* in_ = nullptr;
    double* out_ = nullptr;
    fftw_plan plan_ = nullptr;
};

DstPlan& plan_for(std::size_t n)
{
    thread_local std::map<std::size_t, std::unique_ptr<DstPlan>> cache;
    auto& p = cache[n];
    if (!p) p = std::make_unique<DstPlan>(n);
    return *p;
}

void dst1_direct(std::span<const double> in, std::span<double> out)
{
    const std::size_t n = in.size(), period = 2 * (n + 1);
    std::vector<double> table(period);
    for (std::size_t q = 0; q < period; ++q)
        table[q] = std::sin(std::numbers::pi * static_cast<double>(q) / static_cast<double>(n + 1));
    for (std::size_t m = 1; m <= n; ++m) {
        double s = 0.0;
        std::size_t q = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            q += m;
            if (q >= period) q -= period;
            s += in[j - 1] * table[q];
        }
        out[m - 1] = s;
    }
}

// Forward transform of r f on the interior nodes 1..n-1 of a grid with spacing dr.
// g holds r_j f_j; returns fhat at k_m.
std::vector<double> forward_from_rf(std::span<const double> g, double dr, TransformMethod method)
{
    const std::size_t m = g.size();
    std::vector<double> s(m);
    dst1(g, s, method);
    const double dk = std::numbers::pi / (dr * static_cast<double>(m + 1));
    const double c = 4.0 * std::numbers::pi * dr;
    for (std::size_t i = 0; i < m; ++i) s[i] *= c / (static_cast<double>(i + 1) * dk);
    return s;
}

// Inverse: returns f at nodes 0..n (n = fhat.size() + 1), outer node 0.
std::vector<double> inverse_to_f(std::span<const double> fhat, double dr, TransformMethod method)
{
    const std::size_t m = fhat.size(), n = m + 1;
    const double dk = std::numbers::pi / (dr * static_cast<double>(n));
    std::vector<double> kf(m), rf(m);
    double f0 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double k = static_cast<double>(i + 1) * dk;
        kf[i] = k * fhat[i];
        f0 += k * kf[i];
    }
    dst1(kf, rf, method);
    const double c = dk / (2.0 * std::numbers::pi * std::numbers::pi);
    std::vector<double> f(n + 1, 0.0);
    f[0] = c * f0;
    for (std::size_t j = 1; j < n; ++j) f[j] = c * rf[j - 1] / (static_cast<double>(j) * dr);
    return f;
}

} // namespace

void dst1(std::span<const double> in, std::span<double> out, TransformMethod method)
{
    if (in.size() != out.size()) throw GridMismatch("dst1: input and output sizes differ");
    if (in.empty()) return;
    if (method == TransformMethod::direct)
        dst1_direct(in, out);
    else
        plan_for(in.size()).run(in, out);
}

SpectralField::SpectralField(RadialGrid g, std::vector<double> values) : grid_(g), values_(std::move(values))
{
    if (values_.size() != grid_.n() - 1) throw GridMismatch("spectral field length does not match grid");
}

SpectralField radial_fourier(const RadialField& f, TransformMethod method)
{
    const auto& g = f.grid();
    std::vector<double> rf(g.n() - 1);
    for (std::size_t j = 1; j < g.n(); ++j) rf[j - 1] = g.r(j) * f[j];
    return SpectralField(g, forward_from_rf(rf, g.dr(), method));
}

RadialField inverse_radial_fourier(const SpectralField& s, TransformMethod method)
{
    return RadialField(s.grid(), inverse_to_f(s.values(), s.grid().dr(), method));
}

RadialField autoconvolve(const RadialField& f, Closure closure, TransformMethod method)
{
    const auto& g = f.grid();
    const std::size_t n = g.n();
    // zero padding to 2 rmax holds the full support of f*f
    std::vector<double> rf(2 * n - 1, 0.0);
    for (std::size_t j = 1; j < n; ++j) rf[j - 1] = g.r(j) * f[j];
    rf[n - 1] = 0.5 * g.r(n) * f[n]; // f jumps to 0 at rmax
    auto fhat = forward_from_rf(rf, g.dr(), method);
    for (double& x : fhat) x *= x;
    const auto h = inverse_to_f(fhat, g.dr(), method);

    std::vector<double> out(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(n + 1));
    if (closure == Closure::reflecting) {
        for (std::size_t i = 1; i < n; ++i) {
            const double ro = g.r(n + i), ri = g.r(n - i);
            out[n - i] += h[n + i] * (ro * ro) / (ri * ri);
        }
        out[n] = 2.0 * h[n];
    }
    return RadialField(g, std::move(out));
}

SpectralField structure_factor(const RadialField& u, const RadialField& v, double rho, double e)
{
    require_same_grid(u.grid(), v.grid(), "structure_factor");
    if (!(e > 0.0)) throw InvalidInput("structure_factor: e must be positive");
    std::vector<double> w(u.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = (1.0 - u[j]) * v[j];
    auto s = radial_fourier(RadialField(u.grid(), std::move(w)));
    const double c = rho / (2.0 * e);
    std::vector<double> out(s.values().begin(), s.values().end());
    for (double& x : out) x *= c;
    return SpectralField(u.grid(), std::move(out));
}

} // namespace simpleq
