#pragma once

#include "nullcurve/types.hpp"

#include <functional>
#include <limits>
#include <vector>

namespace nullcurve::fd {

inline double step1(double t) {
    // cbrt(eps)-scaled step for 3-point first derivatives
    constexpr double c = 6.055454452393343e-06;  // cbrt(2^-52)
    return c * std::max(1.0, std::abs(t));
}

inline double step5(double t) { return 1e-3 * std::max(1.0, std::abs(t)); }

template <class F>
auto central(const F& f, double t, double h) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

// 5-point central first derivative, O(h^4).
template <class F>
auto stencil5(const F& f, double t, double h) {
    return (f(t - 2 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2 * h)) / (12.0 * h);
}

// 5-point central second derivative, O(h^4).
template <class F>
auto stencil5_second(const F& f, double t, double h) {
    return (-f(t - 2 * h) + 16.0 * f(t - h) - 30.0 * f(t) + 16.0 * f(t + h) - f(t + 2 * h)) /
           (12.0 * h * h);
}

}  // namespace nullcurve::fd

namespace nullcurve {

// Uniform interior probe grid; endpoints stay one step inside so that
// derivative stencils never leave the window.
std::vector<double> probe_grid(const Window& w, int n = 64);

// Deterministic low-discrepancy sample points in an axis-aligned box.
// The seed offsets the start index of the underlying sequence.
std::vector<Vec3> halton_points(int n, const Vec3& lo, const Vec3& hi, unsigned seed = 0);

// Solves g * x = rhs for a 3x3 system, throwing DegenerateMetric when the
// matrix is singular to working precision.
Vec3 solve3(const Mat3& g, const Vec3& rhs);

// True when the symmetric matrix has eigenvalue signs (+, +, -) up to ordering.
bool has_signature_21(const Mat3& g);

}  // namespace nullcurve
