#include "nullcurve/manifold.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/numerics.hpp"

#include <utility>

namespace nullcurve {

ACBMStructure ACBMStructure::constants(const Mat3& g, const Mat3& phi, const Vec3& xi,
                                       const Vec3& eta,
                                       const std::array<std::array<Vec3, 3>, 3>& brackets,
                                       std::string name) {
    ACBMStructure s;
    s.constant_ = true;
    s.g_const_ = g;
    s.phi_const_ = phi;
    s.xi_const_ = xi;
    s.eta_const_ = eta;
    s.brackets_const_ = brackets;
    s.name_ = std::move(name);
    return s;
}

ACBMStructure ACBMStructure::fields(MatFn g, MatFn phi, VecFn xi, VecFn eta, BracketFn brackets,
                                    MatDerivFn g_deriv, MatFn frame_chart, std::string name) {
    ACBMStructure s;
    s.constant_ = false;
    s.g_fn_ = std::move(g);
    s.phi_fn_ = std::move(phi);
    s.xi_fn_ = std::move(xi);
    s.eta_fn_ = std::move(eta);
    s.bracket_fn_ = std::move(brackets);
    s.g_deriv_fn_ = std::move(g_deriv);
    s.frame_chart_ = std::move(frame_chart);
    s.name_ = std::move(name);
    return s;
}

Mat3 ACBMStructure::metric(const Vec3& pt) const { return constant_ ? g_const_ : g_fn_(pt); }
Mat3 ACBMStructure::phi(const Vec3& pt) const { return constant_ ? phi_const_ : phi_fn_(pt); }
Vec3 ACBMStructure::xi(const Vec3& pt) const { return constant_ ? xi_const_ : xi_fn_(pt); }
Vec3 ACBMStructure::eta(const Vec3& pt) const { return constant_ ? eta_const_ : eta_fn_(pt); }

Vec3 ACBMStructure::bracket(int i, int j, const Vec3& pt) const {
    return constant_ ? brackets_const_[static_cast<size_t>(i)][static_cast<size_t>(j)]
                     : bracket_fn_(i, j, pt);
}

Mat3 ACBMStructure::frame_deriv_of(const MatFn& f, int i, const Vec3& pt) const {
    if (constant_) return Mat3::Zero();
    // e_i(f) = d/ds f(pt + s * E_i(pt)) at s = 0, with E_i the chart
    // realization of the frame field (coordinate axes when unspecified).
    const Vec3 dir = frame_chart_ ? Vec3(frame_chart_(pt).col(i)) : Vec3(Vec3::Unit(i));
    const double h = fd::step1(pt.norm());
    return (f(pt + h * dir) - f(pt - h * dir)) / (2.0 * h);
}

Mat3 ACBMStructure::metric_frame_deriv(int i, const Vec3& pt) const {
    if (constant_) return Mat3::Zero();
    if (g_deriv_fn_) return g_deriv_fn_(i, pt);
    return frame_deriv_of(g_fn_, i, pt);
}

Mat3 ACBMStructure::phi_frame_deriv(int i, const Vec3& pt) const {
    if (constant_) return Mat3::Zero();
    return frame_deriv_of(phi_fn_, i, pt);
}

Vec3 ACBMStructure::xi_frame_deriv(int i, const Vec3& pt) const {
    if (constant_) return Vec3::Zero();
    const Vec3 dir = frame_chart_ ? Vec3(frame_chart_(pt).col(i)) : Vec3(Vec3::Unit(i));
    const double h = fd::step1(pt.norm());
    return (xi_fn_(pt + h * dir) - xi_fn_(pt - h * dir)) / (2.0 * h);
}

MetricField metric_field(const ACBMStructure& s, MetricTag tag) {
    if (tag == MetricTag::G) {
        MetricField m;
        m.tag = MetricTag::G;
        m.constant = s.constant();
        m.value = [s](const Vec3& pt) { return s.metric(pt); };
        m.frame_deriv = [s](int i, const Vec3& pt) { return s.metric_frame_deriv(i, pt); };
        return m;
    }
    return associated_metric(s);
}

MetricField associated_metric(const ACBMStructure& s) {
    MetricField m;
    m.tag = MetricTag::GTilde;
    m.constant = s.constant();
    m.value = [s](const Vec3& pt) {
        const Mat3 g = s.metric(pt);
        const Mat3 phi = s.phi(pt);
        const Vec3 eta = s.eta(pt);
        const Mat3 gt = g * phi + eta * eta.transpose();
        return Mat3(0.5 * (gt + gt.transpose()));
    };
    if (s.constant()) {
        m.frame_deriv = [](int, const Vec3&) { return Mat3::Zero(); };
    } else {
        auto value = m.value;
        m.frame_deriv = [s, value](int i, const Vec3& pt) {
            return s.frame_deriv_of(value, i, pt);
        };
    }
    return m;
}

FrameConnection::FrameConnection(MetricTag tag, std::function<Gamma3(const Vec3&)> eval,
                                 bool constant)
    : tag_(tag), constant_(constant), eval_(std::move(eval)) {
    if (constant_) cached_ = eval_(Vec3::Zero());
}

Gamma3 FrameConnection::operator()(const Vec3& pt) const {
    return constant_ ? cached_ : eval_(pt);
}

FrameConnection koszul_connection(const ACBMStructure& s, const MetricField& metric,
                                  std::span<const Vec3> pts) {
    for (const Vec3& pt : pts) {
        const Mat3 g = metric.value(pt);
        const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
        if (std::abs(g.determinant()) <= 1e-13 * scale * scale * scale)
            throw DegenerateMetric("metric degenerate at a sample point");
    }

    const bool constant = s.constant() && metric.constant;
    auto eval = [s, metric](const Vec3& pt) -> Gamma3 {
        const Mat3 g = metric.value(pt);
        std::array<Mat3, 3> dg;
        for (int i = 0; i < 3; ++i)
            dg[static_cast<size_t>(i)] =
                metric.constant ? Mat3::Zero() : metric.frame_deriv(i, pt);
        Vec3 br[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) br[i][j] = s.bracket(i, j, pt);

        Gamma3 gamma;
        for (auto& m : gamma) m.setZero();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                Vec3 rhs;
                for (int k = 0; k < 3; ++k) {
                    rhs[k] = 0.5 * (dg[static_cast<size_t>(i)](j, k) +
                                    dg[static_cast<size_t>(j)](i, k) -
                                    dg[static_cast<size_t>(k)](i, j) + (g * br[i][j])[k] -
                                    (g * br[i][k])[j] - (g * br[j][k])[i]);
                }
                gamma[static_cast<size_t>(i)].col(j) = solve3(g, rhs);
            }
        }
        return gamma;
    };
    return FrameConnection(metric.tag, eval, constant);
}

StructureReport verify_structure(const ACBMStructure& s, std::span<const Vec3> pts,
                                 double tolerance) {
    double r_phi2 = 0, r_eta_xi = 0, r_eta_phi = 0, r_phi_xi = 0;
    double r_anti = 0, r_sym = 0, r_sig = 0, r_bracket = 0;

    for (const Vec3& pt : pts) {
        const Mat3 g = s.metric(pt);
        const Mat3 phi = s.phi(pt);
        const Vec3 xi = s.xi(pt);
        const Vec3 eta = s.eta(pt);

        const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
        if (std::abs(g.determinant()) <= 1e-13 * scale * scale * scale)
            throw DegenerateMetric("metric degenerate at a sample point");

        r_phi2 = std::max(
            r_phi2, (phi * phi + Mat3::Identity() - xi * eta.transpose()).cwiseAbs().maxCoeff());
        r_eta_xi = std::max(r_eta_xi, std::abs(eta.dot(xi) - 1.0));
        r_eta_phi = std::max(r_eta_phi, (phi.transpose() * eta).cwiseAbs().maxCoeff());
        r_phi_xi = std::max(r_phi_xi, (phi * xi).cwiseAbs().maxCoeff());
        r_anti = std::max(
            r_anti,
            (phi.transpose() * g * phi + g - eta * eta.transpose()).cwiseAbs().maxCoeff());
        r_sym = std::max(r_sym, (g - g.transpose()).cwiseAbs().maxCoeff());
        r_sig = std::max(r_sig, has_signature_21(g) ? 0.0 : 1.0);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                r_bracket = std::max(
                    r_bracket,
                    (s.bracket(i, j, pt) + s.bracket(j, i, pt)).cwiseAbs().maxCoeff());
    }

    StructureReport rep;
    auto add = [&](const char* name, double r) {
        rep.checks.push_back({name, r, r <= tolerance});
    };
    add("phi_squared", r_phi2);
    add("eta_xi_unit", r_eta_xi);
    add("eta_phi_zero", r_eta_phi);
    add("phi_xi_zero", r_phi_xi);
    add("b_metric_anti_isometry", r_anti);
    add("metric_symmetry", r_sym);
    add("metric_signature", r_sig);
    add("bracket_antisymmetry", r_bracket);
    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

double f_tensor(const ACBMStructure& s, const FrameConnection& conn, const Vec3& X,
                const Vec3& Y, const Vec3& Z, const Vec3& pt) {
    if (conn.metric_tag() != MetricTag::G)
        throw Error("f_tensor requires the connection of the primary metric");
    const Gamma3 gamma = conn(pt);
    const Mat3 phi = s.phi(pt);
    const Mat3 g = s.metric(pt);
    // (nabla_{e_i} phi) e_j, assembled per frame direction and contracted with X.
    Vec3 acc = Vec3::Zero();
    for (int i = 0; i < 3; ++i) {
        const Mat3 gi = gamma[static_cast<size_t>(i)];
        const Mat3 covariant_phi_i = s.phi_frame_deriv(i, pt) + gi * phi - phi * gi;
        acc += X[i] * (covariant_phi_i * Y);
    }
    return inner(g, acc, Z);
}

SasakiReport is_sasaki_like(const ACBMStructure& s, const FrameConnection& conn,
                            std::span<const Vec3> pts, double tolerance) {
    SasakiReport rep;
    for (const Vec3& pt : pts) {
        const Gamma3 gamma = conn(pt);
        const Mat3 g = s.metric(pt);
        const Mat3 phi = s.phi(pt);
        const Vec3 xi = s.xi(pt);
        const Vec3 eta = s.eta(pt);
        const Mat3 gphi = phi.transpose() * g * phi;  // g(phi e_i, phi e_j)

        for (int i = 0; i < 3; ++i) {
            // nabla_{e_i} xi + phi e_i = 0
            const Vec3 dxi =
                s.xi_frame_deriv(i, pt) + gamma[static_cast<size_t>(i)] * xi;
            rep.max_residual_reeb =
                std::max(rep.max_residual_reeb, (dxi + phi.col(i)).cwiseAbs().maxCoeff());

            // F(e_i, e_j, e_k) against its Sasaki-like closed form
            const Mat3 gi = gamma[static_cast<size_t>(i)];
            const Mat3 covariant_phi_i = s.phi_frame_deriv(i, pt) + gi * phi - phi * gi;
            const Mat3 F_i = g * covariant_phi_i;  // (k, j) entry = F(e_i, e_j, e_k)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    const double expected = gphi(i, j) * eta[k] + gphi(i, k) * eta[j];
                    rep.max_residual_covariant_phi = std::max(
                        rep.max_residual_covariant_phi, std::abs(F_i(k, j) - expected));
                }
        }
    }
    rep.sasaki_like = rep.max_residual_covariant_phi <= tolerance &&
                      rep.max_residual_reeb <= tolerance;
    return rep;
}

FrameConnection nabla_tilde_difference(const FrameConnection& conn_g, const ACBMStructure& s) {
    auto eval = [conn_g, s](const Vec3& pt) -> Gamma3 {
        Gamma3 out = conn_g(pt);
        const Mat3 g = s.metric(pt);
        const Mat3 phi = s.phi(pt);
        const Vec3 xi = s.xi(pt);
        // difference tensor: -(g(e_i, phi e_j) - g(phi e_i, phi e_j)) xi
        const Mat3 coeff = g * phi - phi.transpose() * g * phi;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                out[static_cast<size_t>(i)].col(j) -= coeff(i, j) * xi;
        return out;
    };
    return FrameConnection(MetricTag::GTilde, eval, conn_g.constant() && s.constant());
}

}  // namespace nullcurve
