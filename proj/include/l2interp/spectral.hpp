#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "l2interp/errors.hpp"
#include "l2interp/kernels.hpp"

namespace l2i {

namespace detail {

// Adaptive Simpson on one panel. tol is absolute; throws NumericError when
// the refinement depth is exhausted before the tolerance is met.
template <class F>
double adaptive_simpson(F&& f, double a, double fa, double b, double fb, double m, double fm,
                        double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    const double err = refined - whole;
    if (std::fabs(err) <= 15.0 * tol) return refined + err / 15.0;
    if (depth <= 0)
        throw NumericError("quadrature did not converge within the refinement budget");
    return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate_panel(F&& f, double a, double b, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, fa, b, fb, m, fm, whole, tol, depth);
}

// Composite driver: splits [a,b] at the supplied breakpoints, then caps each
// panel at max_panel so oscillatory integrands cannot alias through the
// initial Simpson estimate. Tolerance is distributed per unit length.
template <class F>
double integrate_impl(F&& f, double a, double b, double rel_tol,
                      std::span<const double> breakpoints, double max_panel) {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
    if (a > b) throw std::invalid_argument("integration bounds out of order");
    if (a == b) return 0.0;

    std::vector<double> cuts;
    cuts.push_back(a);
    for (double p : breakpoints)
        if (p > a && p < b) cuts.push_back(p);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    // First pass: coarse magnitude estimate to scale the absolute tolerance.
    double coarse = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        const int pieces = max_panel > 0.0
            ? std::max(1, static_cast<int>(std::ceil((hi - lo) / max_panel)))
            : 1;
        const double h = (hi - lo) / pieces;
        for (int p = 0; p < pieces; ++p) {
            const double x0 = lo + p * h;
            coarse += h / 6.0 * (f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h));
        }
    }
    const double tol_total = std::max(std::fabs(coarse) * rel_tol, 1e-14);

    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        const int pieces = max_panel > 0.0
            ? std::max(1, static_cast<int>(std::ceil((hi - lo) / max_panel)))
            : 1;
        const double h = (hi - lo) / pieces;
        for (int p = 0; p < pieces; ++p) {
            const double x0 = lo + p * h;
            const double x1 = (p == pieces - 1) ? hi : x0 + h;
            total += integrate_panel(f, x0, x1, tol_total * (x1 - x0) / (b - a), 26);
        }
    }
    return total;
}

} // namespace detail

// Adaptive composite-Simpson quadrature with relative tolerance rel_tol.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol);

// Same engine with explicit interior breakpoints (integrand kinks) and an
// optional cap on the initial panel width (0 disables the cap).
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 std::span<const double> breakpoints, double max_panel = 0.0);

// Integral of Sinc^2 over [L, +inf), computed as 1/2 minus the finite head;
// the half comes from the no-interpolation identity E(0) = 1.
double sinc_tail(double L);

// Frequency approximation error of a kernel, split into its near-field
// kernel-vs-sinc mismatch E1 over [0,L] and the fixed sinc tail E2 beyond.
struct FAEReport {
    double E = 0.0;
    double E1 = 0.0;
    double E2 = 0.0;
    KernelId kernel_id;
    int L = 0;
};

FAEReport fae(const Kernel& k, double rel_tol = 1e-8);

// Minimal frequency approximation error for support L; L = 0 returns the
// no-interpolation bound 1.
double optimal_fae(int L);

// Second algebraic route for the same quantity: aggregates the squared
// aliasing term per half-unit segment instead of integrating (h - sinc)^2.
double optimal_fae_by_aliasing(int L);

// Power-law approximation 0.335 * L^-0.5258.
double fae_approx(int L);

// Ideal rectangular low-pass response: 1 inside |t| < 1/2, 1/2 on the edge.
double box_response(double t);

// Fourier transform sample F_h(t) = 2 * int_0^L h(x) cos(2 pi x t) dx.
double fourier_sample(const Kernel& k, double t);

// Frequency-domain FAE sqrt(int_{-tmax}^{tmax} (F_h - box)^2 dt); requires
// t_max >= 10 so the truncated tail stays inside the documented 1% slack.
double fae_frequency_domain(const Kernel& k, double t_max);

} // namespace l2i
