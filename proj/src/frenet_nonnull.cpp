#include "nullcurve/frenet_nonnull.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace nullcurve {

namespace {

Mat3 gtilde_value(const ACBMStructure& s, const Vec3& pt) {
    const Mat3 g = s.metric(pt);
    const Mat3 phi = s.phi(pt);
    const Vec3 eta = s.eta(pt);
    const Mat3 gt = g * phi + eta * eta.transpose();
    return 0.5 * (gt + gt.transpose());
}

double speed2(const Curve& c, const ACBMStructure& s, MetricTag tag, double t) {
    const Vec3 v = c.velocity(t);
    const Vec3 pt = c.position(t);
    const Mat3 m = tag == MetricTag::G ? s.metric(pt) : gtilde_value(s, pt);
    return inner(m, v, v);
}

}  // namespace

NonNullFrenetData NonNullApparatus::at(double s) const {
    NonNullFrenetData d;
    d.order = order;
    d.eps1 = eps1;
    d.eps2 = eps2;
    d.eps3 = eps3;
    d.E1 = E1(s);
    if (order >= 2) {
        d.E2 = E2(s);
        d.k = k(s);
    }
    if (order >= 3) {
        d.E3 = E3(s);
        d.tau = tau(s);
    }
    return d;
}

Curve arc_length_reparam(const Curve& c, const ACBMStructure& s, MetricTag tag) {
    constexpr int panels = 1024;
    const double t0 = c.t0(), t1 = c.t1();
    const double dt = (t1 - t0) / panels;

    double qmin = std::numeric_limits<double>::infinity(), qmax = 0.0;
    double prev_signed = 0.0;
    std::vector<double> speed(panels + 1);
    for (int i = 0; i <= panels; ++i) {
        const double t = t0 + dt * i;
        const double q_signed = speed2(c, s, tag, t);
        const double q = std::abs(q_signed);
        const double aux = std::max(1.0, c.velocity(t).squaredNorm());
        // degeneracy either at a sample or through a sign change between samples
        if (q <= 1e-9 * aux || (i > 0 && std::signbit(q_signed) != std::signbit(prev_signed)))
            throw NullDirection("speed degenerates on the domain; cannot reparameterize");
        prev_signed = q_signed;
        speed[static_cast<size_t>(i)] = std::sqrt(q);
        qmin = std::min(qmin, q);
        qmax = std::max(qmax, q);
    }

    const std::string name = c.name().empty() ? std::string("curve") : c.name();
    if (qmax - qmin <= tol::const_speed * std::max(1.0, qmax)) {
        // exact linear substitution s = sqrt(|q|) * t
        const double root = std::sqrt(0.5 * (qmin + qmax));
        auto pos = [c, root](double u) { return c.position(u / root); };
        auto vel = [c, root](double u) { return Vec3(c.velocity(u / root) / root); };
        auto acc = [c, root](double u) { return Vec3(c.accel(u / root) / (root * root)); };
        return Curve(pos, vel, acc, t0 * root, t1 * root, name + "@arclength");
    }

    // cumulative trapezoid arc length, inverted by monotone interpolation
    auto table = std::make_shared<std::vector<double>>(panels + 1, 0.0);
    for (int i = 1; i <= panels; ++i)
        (*table)[static_cast<size_t>(i)] =
            (*table)[static_cast<size_t>(i - 1)] +
            0.5 * dt * (speed[static_cast<size_t>(i - 1)] + speed[static_cast<size_t>(i)]);
    const double total = table->back();

    auto t_of_s = [table, t0, dt, total](double u) {
        const double target = std::clamp(u, 0.0, total);
        auto it = std::upper_bound(table->begin(), table->end(), target);
        size_t hi = std::min<size_t>(static_cast<size_t>(it - table->begin()), table->size() - 1);
        if (hi == 0) hi = 1;
        const size_t lo = hi - 1;
        const double seg = (*table)[hi] - (*table)[lo];
        const double frac = seg > 0.0 ? (target - (*table)[lo]) / seg : 0.0;
        return t0 + dt * (static_cast<double>(lo) + frac);
    };
    auto w_of = [c, s, tag](double t) { return std::sqrt(std::abs(speed2(c, s, tag, t))); };

    auto pos = [c, t_of_s](double u) { return c.position(t_of_s(u)); };
    auto vel = [c, t_of_s, w_of](double u) {
        const double t = t_of_s(u);
        return Vec3(c.velocity(t) / w_of(t));
    };
    auto acc = [c, t_of_s, w_of](double u) {
        const double t = t_of_s(u);
        const double w = w_of(t);
        const double w_dot = fd::central(w_of, t, fd::step1(t));
        // chain rule: C'' = accel/w^2 - (w'/w^3) * velocity
        return Vec3(c.accel(t) / (w * w) - (w_dot / (w * w * w)) * c.velocity(t));
    };
    return Curve(pos, vel, acc, 0.0, total, name + "@arclength");
}

NonNullApparatus frenet_apparatus(const Curve& unit_speed, const ACBMStructure& s,
                                  const FrameConnection& conn_tilde, const Window& w) {
    if (conn_tilde.metric_tag() != MetricTag::GTilde)
        throw Error("frenet_apparatus expects the connection of the associated metric");

    const auto grid = probe_grid(w);
    NonNullApparatus ap;
    const Curve c = unit_speed;
    ap.E1 = [c](double t) { return c.velocity(t); };

    auto gt_at = [c, s](double t) { return gtilde_value(s, c.position(t)); };
    const double mid = 0.5 * (w.t0 + w.t1);
    ap.eps1 = inner(gt_at(mid), c.velocity(mid), c.velocity(mid)) >= 0.0 ? +1 : -1;

    auto accel_field = [c, conn_tilde](double t) {
        return covariant_acceleration(c, conn_tilde, t);
    };
    double max_accel = 0.0;
    for (double t : grid) max_accel = std::max(max_accel, accel_field(t).norm());
    if (max_accel <= tol::order) {
        ap.order = 1;
        ap.k = [](double) { return 0.0; };
        ap.tau = [](double) { return 0.0; };
        return ap;
    }

    const double q_mid = inner(gt_at(mid), accel_field(mid), accel_field(mid));
    if (std::abs(q_mid) <= tol::order * tol::order)
        throw Error("normal direction is null; orthonormal frame undefined");
    ap.eps2 = q_mid > 0.0 ? +1 : -1;
    const int eps2 = ap.eps2;
    auto gt = gt_at;
    ap.k = [accel_field, gt](double t) {
        return std::sqrt(std::abs(inner(gt(t), accel_field(t), accel_field(t))));
    };
    auto k_fn = ap.k;
    ap.E2 = [accel_field, k_fn, eps2](double t) {
        return Vec3(accel_field(t) / (eps2 * k_fn(t)));
    };

    const int eps1 = ap.eps1;
    auto e1 = ap.E1;
    auto e2 = ap.E2;
    auto torsion_part = [c, conn_tilde, e1, e2, k_fn, eps1](double t) {
        return Vec3(covariant_derivative_along(c, e2, conn_tilde, t) +
                    double(eps1) * k_fn(t) * e1(t));
    };
    double max_torsion = 0.0;
    for (double t : grid) max_torsion = std::max(max_torsion, torsion_part(t).norm());
    if (max_torsion <= tol::order) {
        ap.order = 2;
        ap.tau = [](double) { return 0.0; };
        return ap;
    }

    ap.order = 3;
    ap.eps3 = -ap.eps1 * ap.eps2;
    const int measured =
        inner(gt_at(mid), torsion_part(mid), torsion_part(mid)) > 0.0 ? +1 : -1;
    if (measured != ap.eps3)
        throw Error("causal sign of the binormal contradicts the frame signature relation");
    ap.tau = [torsion_part, gt](double t) {
        return std::sqrt(std::abs(inner(gt(t), torsion_part(t), torsion_part(t))));
    };
    auto tau_fn = ap.tau;
    const int eps3 = ap.eps3;
    ap.E3 = [torsion_part, tau_fn, eps3](double t) {
        return Vec3(torsion_part(t) / (eps3 * tau_fn(t)));
    };
    return ap;
}

NonNullClass classify_nonnull(const std::function<double(double)>& k_fn,
                              const std::function<double(double)>& tau_fn, const Window& w,
                              double tolerance) {
    const auto grid = probe_grid(w);
    double kmin = std::numeric_limits<double>::infinity(), kmax = 0.0;
    double tmin = std::numeric_limits<double>::infinity(), tmax = 0.0;
    for (double t : grid) {
        const double k = std::abs(k_fn(t)), tau = std::abs(tau_fn(t));
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
        tmin = std::min(tmin, tau);
        tmax = std::max(tmax, tau);
    }
    if (kmax <= tolerance) return NonNullClass::Geodesic;
    const bool k_const = (kmax - kmin) <= tolerance * std::max(1.0, kmax);
    const bool tau_zero = tmax <= tolerance;
    const bool tau_const = (tmax - tmin) <= tolerance * std::max(1.0, tmax);
    if (k_const && tau_zero) return NonNullClass::PseudoCircle;
    if (k_const && tau_const) return NonNullClass::ProperHelix;
    if (!k_const && !tau_const && tmin > tolerance) {
        double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
        for (double t : grid) {
            const double r = k_fn(t) / tau_fn(t);
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        if ((rmax - rmin) <= tolerance * std::max(1.0, std::abs(rmax)))
            return NonNullClass::GeneralizedHelix;
    }
    return NonNullClass::Generic;
}

std::string to_string(NonNullClass c) {
    switch (c) {
        case NonNullClass::Geodesic: return "geodesic";
        case NonNullClass::PseudoCircle: return "pseudo_circle";
        case NonNullClass::Helix: return "helix";
        case NonNullClass::ProperHelix: return "proper_helix";
        case NonNullClass::GeneralizedHelix: return "generalized_helix";
        case NonNullClass::Generic: return "generic";
    }
    return "generic";
}

InducedReport verify_induced_theorems(const Curve& c_null, const ACBMStructure& s,
                                      const Window& w) {
    const auto probes = probe_grid(w);
    const SlantInvariants inv = slant_invariants(c_null, s, probes);

    double max_bd = 0.0, max_b = 0.0;
    for (double t : probes) {
        max_bd = std::max(max_bd, std::abs(inv.b_dot(t)));
        max_b = std::max(max_b, std::abs(inv.b(t)));
    }
    const double b_mid = inv.b(0.5 * (w.t0 + w.t1));

    const bool legendre_const_b =
        inv.legendre && max_bd <= tol::num && std::abs(b_mid) > tol::slant;
    const bool slant_b_zero = !inv.legendre && max_b <= tol::num;
    if (!legendre_const_b && !slant_b_zero)
        throw PreconditionMismatch(
            "curve is neither a constant-b Legendre nor a b = 0 slant null curve");

    const Curve unit = arc_length_reparam(c_null, s, MetricTag::GTilde);
    const Window wu = unit.window();
    const auto pts = halton_points(32, Vec3(-1, -1, -1), Vec3(1, 1, 1));
    const FrameConnection conn_t = koszul_connection(s, associated_metric(s), pts);

    InducedReport rep;
    auto add = [&rep](const std::string& name, double residual, double tolerance) {
        rep.checks.push_back({name, residual, residual <= tolerance});
    };

    const auto ugrid = probe_grid(wu);
    double max_eta = 0.0, max_speed_dev = 0.0;
    for (double u : ugrid) {
        const Vec3 pt = unit.position(u);
        const Vec3 v = unit.velocity(u);
        max_eta = std::max(max_eta, std::abs(s.eta(pt).dot(v)));
        const double q = inner(gtilde_value(s, pt), v, v);
        max_speed_dev = std::max(max_speed_dev, std::abs(std::abs(q) - 1.0));
    }
    add("unit_speed", max_speed_dev, tol::num);

    if (legendre_const_b) {
        rep.path = InducedReport::Path::LegendreGeodesic;
        const double mid = 0.5 * (wu.t0 + wu.t1);
        const double q =
            inner(gtilde_value(s, unit.position(mid)), unit.velocity(mid), unit.velocity(mid));
        add("causal_sign_matches_b", std::abs(q - (b_mid > 0 ? 1.0 : -1.0)), tol::num);
        add("legendre_under_associated_metric", max_eta, tol::num);
        double max_acc = 0.0;
        for (double u : ugrid)
            max_acc = std::max(max_acc, covariant_acceleration(unit, conn_t, u).norm());
        add("geodesic_under_associated_metric", max_acc, tol::num);
    } else {
        rep.path = InducedReport::Path::SlantProperHelix;
        const double sgn_a = inv.a > 0 ? 1.0 : -1.0;
        double max_slant_dev = 0.0, max_space_dev = 0.0;
        for (double u : ugrid) {
            const Vec3 pt = unit.position(u);
            const Vec3 v = unit.velocity(u);
            max_slant_dev = std::max(max_slant_dev, std::abs(s.eta(pt).dot(v) - sgn_a));
            max_space_dev =
                std::max(max_space_dev, std::abs(inner(gtilde_value(s, pt), v, v) - 1.0));
        }
        add("spacelike_unit", max_space_dev, tol::num);
        add("slant_constant", max_slant_dev, tol::num);

        const NonNullApparatus ap = frenet_apparatus(unit, s, conn_t, wu);
        add("osculating_order_3", ap.order == 3 ? 0.0 : 1.0, 0.5);
        double k_dev = 0.0, tau_dev = 0.0, e2_dev = 0.0, e3_dev = 0.0;
        if (ap.order == 3) {
            for (double u : ugrid) {
                k_dev = std::max(k_dev, std::abs(ap.k(u) - 1.0));
                tau_dev = std::max(tau_dev, std::abs(ap.tau(u) - 1.0));
                const Vec3 pt = unit.position(u);
                const Vec3 vprime = unit.velocity(u);
                const Vec3 phi_v = s.phi(pt) * vprime;
                const Vec3 e2_expected = -sgn_a * phi_v + s.xi(pt);
                const Vec3 e3_expected = phi_v - vprime;
                e2_dev = std::max(e2_dev, (ap.E2(u) - e2_expected).cwiseAbs().maxCoeff());
                e3_dev = std::max(e3_dev, (ap.E3(u) - e3_expected).cwiseAbs().maxCoeff());
            }
        } else {
            k_dev = tau_dev = e2_dev = e3_dev = 1.0;
        }
        add("curvature_unit", k_dev, tol::num);
        add("torsion_unit", tau_dev, tol::num);
        add("normal_field_formula", e2_dev, tol::num);
        add("binormal_field_formula", e3_dev, tol::num);
    }

    rep.pass = true;
    for (const auto& chk : rep.checks) rep.pass = rep.pass && chk.pass;
    return rep;
}

}  // namespace nullcurve
