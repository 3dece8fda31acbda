#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mink/expr.hpp"
#include "mink/tolerances.hpp"
#include "mink/vec4.hpp"

namespace mink {

/// A parametric curve in E_1^4 supplying position and derivatives up to
/// order 5 with respect to its own parameter t. Symbolic components carry
/// exact derivative trees; sampled components differentiate a local
/// quintic interpolant.
class CurveSource {
public:
    enum class Kind { SymbolicExpr, SampledData, BuiltinFamily };

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    double t_min() const noexcept { return t_min_; }
    double t_max() const noexcept { return t_max_; }

    /// Value (order 0) or d^order/dt^order, 0 <= order <= 5.
    Vec4 eval(double t, int order) const;

    /// All of alpha, alpha', ..., alpha^(max_order) at t.
    std::vector<Vec4> jet(double t, int max_order) const;

    CurveSource with_domain(double t_min, double t_max) const;

    /// Homothety at source level: components scaled by lambda (lambda != 0).
    CurveSource scaled(double lambda) const;

    static CurveSource from_expressions(const std::string& name,
                                        const std::array<std::string, 4>& components,
                                        double t_min, double t_max);

    static CurveSource from_samples(const std::string& name,
                                    std::vector<double> ts,
                                    std::vector<Vec4> points);

private:
    CurveSource() = default;

    Kind kind_ = Kind::SymbolicExpr;
    std::string name_;
    double t_min_ = 0.0, t_max_ = 1.0;

    // symbolic: per-coordinate derivative trees, order 0..5
    std::array<std::array<ExprPtr, 6>, 4> trees_{};

    // sampled: strictly increasing parameter values and points
    std::shared_ptr<const std::vector<double>> sample_t_;
    std::shared_ptr<const std::vector<Vec4>> sample_x_;
    double sample_scale_ = 1.0;

    friend CurveSource builtin_family(const std::string&, const std::map<std::string, double>&);
};

/// Curated curve catalog. Families:
///   spacelike_w            (a sinh(mt), a cosh(mt), b cos(nt), b sin(nt)),  b^2 n^2 - a^2 m^2 = 1
///   timelike_w             same components, a^2 m^2 - b^2 n^2 = 1
///   hyperplanar_spacelike  (sinh t, cosh t, sqrt(2) t, 0)
///   planar_circle          (0, cos t, sin t, 0)
///   planar_timelike        (sinh t, cosh t, 0, 0)
///   nonhelix_control       (t^2/2, t, cos t, sin t) on [0.25, 1.3]
/// Throws UnknownFamily / BadParams.
CurveSource builtin_family(const std::string& name,
                           const std::map<std::string, double>& params = {});

struct BuiltinFamilyInfo {
    std::string name;
    std::string components;
    std::string constraint;
    double t_min, t_max;
};
const std::vector<BuiltinFamilyInfo>& builtin_catalog();

/// Load sampled data from CSV with header `t,x1,x2,x3,x4`.
CurveSource load_sampled_csv(const std::string& path);

/// Arclength of the curve between parameters t0 and t1 (pseudo-norm speed,
/// adaptive quadrature). Throws LightlikeTangent / DomainError.
double arclength(const CurveSource& curve, double t0, double t1,
                 const Tolerances& tols = {});

/// A curve reparametrized by arclength s in [0, length()]. The tangent has
/// unit pseudo-norm and a single causal character across the domain.
class UnitSpeedCurve {
public:
    double length() const noexcept { return length_; }
    Causality tangent_character() const noexcept { return character_; }
    const CurveSource& source() const noexcept { return source_; }
    const Tolerances& tolerances() const noexcept { return tols_; }

    /// Inverse of the arclength map; monotone Newton/bisection hybrid.
    double t_of_s(double s) const;
    double s_of_t(double t) const;

    Vec4 position(double s) const;

    /// alpha'(s), alpha''(s), ..., alpha^(max_order)(s), 1 <= max_order <= 5,
    /// chain-ruled through the inverse arclength map.
    std::vector<Vec4> derivatives(double s, int max_order) const;

private:
    friend UnitSpeedCurve reparametrize_unit_speed(const CurveSource&, const Tolerances&);

    UnitSpeedCurve(CurveSource src, Tolerances tols);

    double speed(double t) const;  // pseudo-norm of the t-derivative
    double cell_arc(double t0, double t1) const;

    CurveSource source_;
    Tolerances tols_;
    Causality character_ = Causality::Spacelike;
    double length_ = 0.0;
    std::vector<double> grid_t_;  // monotone lookup table for inversion
    std::vector<double> grid_s_;
};

/// Throws LightlikeTangent if the speed vanishes anywhere on the domain,
/// MixedCausality if the tangent's causal character is not constant.
UnitSpeedCurve reparametrize_unit_speed(const CurveSource& curve,
                                        const Tolerances& tols = {});

}  // namespace mink
