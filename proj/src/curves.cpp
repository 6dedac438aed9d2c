#include "nullcurve/curves.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/numerics.hpp"

#include <utility>

namespace nullcurve {

Curve::Curve(PathFn position, PathFn velocity, PathFn accel, double t0, double t1,
             std::string name)
    : position_(std::move(position)),
      velocity_(std::move(velocity)),
      accel_(std::move(accel)),
      t0_(t0),
      t1_(t1),
      name_(std::move(name)) {
    if (!(t0_ < t1_)) throw ConfigError("curve domain must satisfy t0 < t1");
}

Vec3 Curve::accel(double t) const {
    if (accel_) return accel_(t);
    return fd::central(velocity_, t, fd::step1(t));
}

Curve Curve::restricted(double t0, double t1) const {
    if (!(t0 < t1)) throw ConfigError("curve domain must satisfy t0 < t1");
    Curve out = *this;
    out.t0_ = t0;
    out.t1_ = t1;
    return out;
}

namespace {
Mat3 metric_value(const ACBMStructure& s, MetricTag tag, const Vec3& pt) {
    if (tag == MetricTag::G) return s.metric(pt);
    const Mat3 g = s.metric(pt);
    const Mat3 phi = s.phi(pt);
    const Vec3 eta = s.eta(pt);
    const Mat3 gt = g * phi + eta * eta.transpose();
    return 0.5 * (gt + gt.transpose());
}
}  // namespace

CausalCharacter causal_character(const Curve& c, const ACBMStructure& s, MetricTag tag,
                                 double t, double tolerance) {
    const Vec3 v = c.velocity(t);
    const double aux2 = v.squaredNorm();
    if (aux2 == 0.0) throw ZeroVelocity("vanishing velocity");
    const Vec3 pt = c.position(t);
    const double q = inner(metric_value(s, tag, pt), v, v);
    if (std::abs(q) <= tolerance * aux2) return CausalCharacter::Null;
    return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

SlantInvariants slant_invariants(const Curve& c, const ACBMStructure& s,
                                 std::span<const double> probes,
                                 const SlantClosures& closures) {
    if (probes.empty()) throw Error("slant_invariants requires a nonempty probe set");

    double sum = 0.0;
    std::vector<double> eta_v(probes.size());
    for (size_t i = 0; i < probes.size(); ++i) {
        const double t = probes[i];
        const Vec3 v = c.velocity(t);
        if (v.squaredNorm() == 0.0) throw ZeroVelocity("vanishing velocity at a probe");
        eta_v[i] = s.eta(c.position(t)).dot(v);
        sum += eta_v[i];
    }

    SlantInvariants inv;
    inv.a = sum / static_cast<double>(probes.size());
    for (double e : eta_v) inv.a_deviation = std::max(inv.a_deviation, std::abs(e - inv.a));
    inv.legendre = std::abs(inv.a) <= tol::slant;

    if (closures.b) {
        inv.b = closures.b;
    } else {
        inv.b = [c, s](double t) {
            const Vec3 pt = c.position(t);
            const Vec3 v = c.velocity(t);
            return inner(s.metric(pt), v, s.phi(pt) * v);
        };
    }
    if (closures.b_dot) {
        inv.b_dot = closures.b_dot;
    } else {
        auto b = inv.b;
        inv.b_dot = [b](double t) { return fd::stencil5(b, t, fd::step5(t)); };
    }
    if (closures.b_ddot) {
        inv.b_ddot = closures.b_ddot;
    } else {
        auto b = inv.b;
        inv.b_ddot = [b](double t) { return fd::stencil5_second(b, t, fd::step5(t)); };
    }

    if (inv.legendre) {
        for (double t : probes)
            if (std::abs(inv.b(t)) <= tol::slant)
                throw ForbiddenDegenerate("slant data (a, b) vanishes at a probe");
    }
    return inv;
}

Vec3 covariant_derivative_along(const Curve& c, const std::function<Vec3(double)>& V,
                                const std::function<Vec3(double)>& V_dot,
                                const FrameConnection& conn, double t) {
    const Gamma3 gamma = conn(c.position(t));
    const Vec3 cd = c.velocity(t);
    Vec3 out = V_dot(t);
    const Vec3 v = V(t);
    for (int i = 0; i < 3; ++i) out += cd[i] * (gamma[static_cast<size_t>(i)] * v);
    return out;
}

Vec3 covariant_derivative_along(const Curve& c, const std::function<Vec3(double)>& V,
                                const FrameConnection& conn, double t) {
    auto v_dot = [&V](double u) { return fd::stencil5(V, u, fd::step5(u)); };
    return covariant_derivative_along(c, V, v_dot, conn, t);
}

Vec3 covariant_acceleration(const Curve& c, const FrameConnection& conn, double t) {
    const Gamma3 gamma = conn(c.position(t));
    const Vec3 cd = c.velocity(t);
    Vec3 out = c.accel(t);
    for (int i = 0; i < 3; ++i) out += cd[i] * (gamma[static_cast<size_t>(i)] * cd);
    return out;
}

}  // namespace nullcurve
