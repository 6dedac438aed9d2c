#pragma once

#include "nullcurve/types.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nullcurve {

/// Frame-based description of a 3-dimensional almost contact B-metric
/// manifold: metric components g(e_i,e_j), the endomorphism phi, the Reeb
/// field xi with its dual 1-form eta, and the frame brackets [e_i,e_j], all
/// as functions of the chart point. Fixtures with position-independent data
/// take the constant fast path throughout.
class ACBMStructure {
public:
    using MatFn = std::function<Mat3(const Vec3&)>;
    using VecFn = std::function<Vec3(const Vec3&)>;
    using BracketFn = std::function<Vec3(int, int, const Vec3&)>;
    using MatDerivFn = std::function<Mat3(int, const Vec3&)>;

    static ACBMStructure constants(const Mat3& g, const Mat3& phi, const Vec3& xi,
                                   const Vec3& eta,
                                   const std::array<std::array<Vec3, 3>, 3>& brackets,
                                   std::string name = {});

    /// Position-dependent structure. `g_deriv(i, pt)` may supply the analytic
    /// derivative of the metric components along e_i; otherwise derivatives
    /// fall back to central differences along `frame_chart` directions
    /// (columns = chart components of the frame fields; identity if absent).
    static ACBMStructure fields(MatFn g, MatFn phi, VecFn xi, VecFn eta, BracketFn brackets,
                                MatDerivFn g_deriv = nullptr, MatFn frame_chart = nullptr,
                                std::string name = {});

    Mat3 metric(const Vec3& pt) const;
    Mat3 phi(const Vec3& pt) const;
    Vec3 xi(const Vec3& pt) const;
    Vec3 eta(const Vec3& pt) const;
    Vec3 bracket(int i, int j, const Vec3& pt) const;

    // e_i(g_jk): derivative of the metric components along the i-th frame field.
    Mat3 metric_frame_deriv(int i, const Vec3& pt) const;
    // e_i(phi^k_j), needed for the covariant derivative of phi.
    Mat3 phi_frame_deriv(int i, const Vec3& pt) const;
    // e_i(xi^j), needed for the covariant derivative of the Reeb field.
    Vec3 xi_frame_deriv(int i, const Vec3& pt) const;
    // e_i applied to an arbitrary matrix-valued function of the chart point.
    Mat3 frame_deriv_of(const MatFn& f, int i, const Vec3& pt) const;

    bool constant() const { return constant_; }
    const std::string& name() const { return name_; }

private:
    ACBMStructure() = default;

    bool constant_ = false;
    std::string name_;

    Mat3 g_const_, phi_const_;
    Vec3 xi_const_, eta_const_;
    std::array<std::array<Vec3, 3>, 3> brackets_const_{};

    MatFn g_fn_, phi_fn_, frame_chart_;
    VecFn xi_fn_, eta_fn_;
    BracketFn bracket_fn_;
    MatDerivFn g_deriv_fn_;
};

/// A metric (either B-metric) with enough structure to feed the Koszul
/// formula: componentwise values plus their frame-direction derivatives.
struct MetricField {
    MetricTag tag = MetricTag::G;
    bool constant = true;
    std::function<Mat3(const Vec3&)> value;
    std::function<Mat3(int, const Vec3&)> frame_deriv;  // e_i(g_jk)

    Mat3 operator()(const Vec3& pt) const { return value(pt); }
};

MetricField metric_field(const ACBMStructure& s, MetricTag tag);

/// Levi-Civita connection of a frame metric, as coefficient functions.
class FrameConnection {
public:
    FrameConnection() = default;
    FrameConnection(MetricTag tag, std::function<Gamma3(const Vec3&)> eval, bool constant);

    Gamma3 operator()(const Vec3& pt) const;
    MetricTag metric_tag() const { return tag_; }
    bool constant() const { return constant_; }

private:
    MetricTag tag_ = MetricTag::G;
    bool constant_ = false;
    std::function<Gamma3(const Vec3&)> eval_;
    Gamma3 cached_{};
};

struct AxiomCheck {
    std::string axiom;
    double max_residual = 0.0;
    bool pass = false;
};

struct StructureReport {
    std::vector<AxiomCheck> checks;
    bool pass = false;
};

struct SasakiReport {
    double max_residual_covariant_phi = 0.0;  // defining identity of the class
    double max_residual_reeb = 0.0;           // nabla_X xi = -phi X
    bool sasaki_like = false;
};

/// Checks the structural axioms (phi^2 relation, eta/xi compatibilities,
/// B-metric anti-isometry, signature, bracket antisymmetry) at the sample
/// points. Throws DegenerateMetric when the metric is singular at a point.
StructureReport verify_structure(const ACBMStructure& s, std::span<const Vec3> pts,
                                 double tolerance = tol::alg);

/// The second B-metric associated to the structure.
MetricField associated_metric(const ACBMStructure& s);

/// Solves the Koszul formula in the frame for the Levi-Civita coefficients
/// of `metric`. The sample points are validated for nondegeneracy up front.
FrameConnection koszul_connection(const ACBMStructure& s, const MetricField& metric,
                                  std::span<const Vec3> pts);

/// The (0,3)-tensor measuring the covariant derivative of phi.
double f_tensor(const ACBMStructure& s, const FrameConnection& conn, const Vec3& X,
                const Vec3& Y, const Vec3& Z, const Vec3& pt);

/// Residual test for membership in the Sasaki-like class.
SasakiReport is_sasaki_like(const ACBMStructure& s, const FrameConnection& conn,
                            std::span<const Vec3> pts, double tolerance = tol::num);

/// Builds the connection of the associated metric directly from the
/// connection of g by adding the difference tensor. Cross-checks against
/// the Koszul route in tests.
FrameConnection nabla_tilde_difference(const FrameConnection& conn_g, const ACBMStructure& s);

}  // namespace nullcurve
