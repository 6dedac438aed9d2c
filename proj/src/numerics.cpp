#include "nullcurve/numerics.hpp"

#include "nullcurve/errors.hpp"

#include <Eigen/Eigenvalues>

namespace nullcurve {

std::vector<double> probe_grid(const Window& w, int n) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    const double step = w.length() / (n + 1);
    for (int i = 1; i <= n; ++i) out.push_back(w.t0 + step * i);
    return out;
}

namespace {
double radical_inverse(unsigned base, unsigned long long i) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}
}  // namespace

std::vector<Vec3> halton_points(int n, const Vec3& lo, const Vec3& hi, unsigned seed) {
    static constexpr unsigned bases[3] = {2, 3, 5};
    std::vector<Vec3> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const unsigned long long idx = static_cast<unsigned long long>(seed) + i + 1;
        Vec3 p;
        for (int d = 0; d < 3; ++d)
            p[d] = lo[d] + (hi[d] - lo[d]) * radical_inverse(bases[d], idx);
        pts.push_back(p);
    }
    return pts;
}

Vec3 solve3(const Mat3& g, const Vec3& rhs) {
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    if (std::abs(g.determinant()) <= 1e-13 * scale * scale * scale)
        throw DegenerateMetric("singular 3x3 metric Gram matrix");
    return g.partialPivLu().solve(rhs);
}

bool has_signature_21(const Mat3& g) {
    Eigen::SelfAdjointEigenSolver<Mat3> es(0.5 * (g + g.transpose()));
    const Vec3 ev = es.eigenvalues();
    int pos = 0, neg = 0;
    for (int i = 0; i < 3; ++i) {
        if (ev[i] > 0) ++pos;
        if (ev[i] < 0) ++neg;
    }
    return pos == 2 && neg == 1;
}

}  // namespace nullcurve
