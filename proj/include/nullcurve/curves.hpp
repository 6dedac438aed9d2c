#pragma once

#include "nullcurve/manifold.hpp"
#include "nullcurve/types.hpp"

#include <functional>
#include <span>
#include <string>

namespace nullcurve {

/// Parametric curve given by frame-coordinate position and velocity
/// (the componentwise derivative of the position tuple, read as frame
/// components of the tangent). Acceleration is optional; a central
/// finite difference of the velocity is used when absent.
class Curve {
public:
    using PathFn = std::function<Vec3(double)>;

    Curve(PathFn position, PathFn velocity, PathFn accel, double t0, double t1,
          std::string name = {});

    Vec3 position(double t) const { return position_(t); }
    Vec3 velocity(double t) const { return velocity_(t); }
    Vec3 accel(double t) const;
    bool has_accel() const { return static_cast<bool>(accel_); }

    double t0() const { return t0_; }
    double t1() const { return t1_; }
    Window window() const { return {t0_, t1_}; }
    const std::string& name() const { return name_; }

    /// Same curve over a narrowed (or shifted) parameter domain.
    Curve restricted(double t0, double t1) const;

private:
    PathFn position_, velocity_, accel_;
    double t0_, t1_;
    std::string name_;
};

/// Optional closed forms for the contact-angle function b and its
/// derivatives; anything left empty falls back to stencil differentiation
/// of the evaluated b.
struct SlantClosures {
    std::function<double(double)> b;
    std::function<double(double)> b_dot;
    std::function<double(double)> b_ddot;
};

struct SlantInvariants {
    double a = 0.0;            // mean of eta(tangent) over the probes
    double a_deviation = 0.0;  // max |eta(tangent) - a| over the probes
    bool legendre = false;     // |a| below the slant tolerance
    std::function<double(double)> b;
    std::function<double(double)> b_dot;
    std::function<double(double)> b_ddot;
};

/// Causal type of the tangent at t under the chosen metric; a tangent is
/// null when |g(v,v)| is below tol relative to the squared Euclidean norm
/// of its components. Throws ZeroVelocity on a vanishing tangent.
CausalCharacter causal_character(const Curve& c, const ACBMStructure& s, MetricTag tag,
                                 double t, double tolerance = tol::alg);

/// Slant data of the curve over a probe grid. Throws ForbiddenDegenerate if
/// a and b vanish simultaneously at a probe.
SlantInvariants slant_invariants(const Curve& c, const ACBMStructure& s,
                                 std::span<const double> probes,
                                 const SlantClosures& closures = {});

/// Covariant derivative of the field V(t) along the curve, using the
/// frame-component chain rule. The second overload supplies dV/dt in
/// closed form; the first differentiates V with a 5-point stencil.
Vec3 covariant_derivative_along(const Curve& c, const std::function<Vec3(double)>& V,
                                const FrameConnection& conn, double t);
Vec3 covariant_derivative_along(const Curve& c, const std::function<Vec3(double)>& V,
                                const std::function<Vec3(double)>& V_dot,
                                const FrameConnection& conn, double t);

/// Covariant acceleration of the curve itself.
Vec3 covariant_acceleration(const Curve& c, const FrameConnection& conn, double t);

}  // namespace nullcurve
