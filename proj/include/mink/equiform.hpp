#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mink/frenet.hpp"

namespace mink {

/// Scale-invariant apparatus at one point: the equiform parameter sigma
/// (d sigma = kappa1 ds, anchored at the domain start), the radius of
/// curvature rho = 1/kappa1, the scaled frame W_i = rho * f_i, and the
/// equiform curvatures
///   EK1 = d(rho)/ds,  EK2 = kappa2/kappa1,  EK3 = kappa3/kappa1.
struct EquiformApparatus {
    double s = 0.0;
    double sigma = 0.0;
    double rho = 0.0;
    std::array<Vec4, 4> frame{};
    double ek1 = 0.0, ek2 = 0.0, ek3 = 0.0;
    double rho_ddot = 0.0;  // d^2(rho)/ds^2, used by the helix identity
    MuSignature sig{};
    FrenetApparatus frenet{};
};

/// sigma(s) = integral of kappa1 from s0 to s (adaptive quadrature).
double equiform_parameter(const UnitSpeedCurve& curve, double s0, double s,
                          const Tolerances& tols = {});

/// `known_sigma` skips the quadrature when the caller has already
/// accumulated sigma(s) (profile grids, stencil evaluations).
EquiformApparatus equiform_apparatus(const UnitSpeedCurve& curve, double s,
                                     const Tolerances& tols = {},
                                     std::optional<double> known_sigma = std::nullopt);

/// Solve sigma(s) = sigma for s (monotone; d sigma/ds = kappa1 > 0).
double s_of_sigma(const UnitSpeedCurve& curve, double sigma, const Tolerances& tols = {});

/// Point reached by moving d_sigma along the equiform parameter away from
/// s: solves sigma(x) - sigma(s) = d_sigma on a local bracket.
double advance_by_sigma(const UnitSpeedCurve& curve, double s, double d_sigma,
                        const Tolerances& tols = {});

/// Five-point central difference of the equiform frame with respect to
/// sigma. Requires the sigma-stencil to stay inside the domain.
std::array<Vec4, 4> equiform_frame_sigma_derivs(const UnitSpeedCurve& curve, double s,
                                                double h_sigma,
                                                const Tolerances& tols = {});

/// Equiform curvatures recovered from frame inner products:
///   EK1 = <W_j', W_j> / <W_j, W_j>        (any j; j_for_k1 selects it)
///   EK2 = <W_2', W_3> / (mu2 eps_b1 rho^2)
///   EK3 = <W_3', W_4> / (mu4 eps_b2 rho^2)
/// The division by <W_j, W_j> (rather than rho^2) carries the causal sign
/// of the timelike frame member, which makes EK1 independent of j.
std::array<double, 3> equiform_curvatures_via_frame(
    const EquiformApparatus& app, const std::array<Vec4, 4>& frame_derivs,
    int j_for_k1 = 0);

/// Max row-wise pseudo-norm mismatch of the equiform Frenet system
///   W1' = EK1 W1 + W2
///   W2' = mu1 W1 + EK1 W2 + mu2 EK2 W3
///   W3' = mu3 EK2 W2 + EK1 W3 + mu4 EK3 W4
///   W4' = mu5 EK3 W3 + EK1 W4
/// against sigma-derivatives of the constructed frame. `corrupt_ek2`
/// perturbs EK2 on the right-hand side (negative control).
double equiform_frenet_residual(const UnitSpeedCurve& curve, double s, double h_sigma,
                                const Tolerances& tols = {},
                                double corrupt_ek2 = 0.0);

/// Pointwise comparison of an original curve against its homothety by
/// lambda > 0 at corresponding arclengths s* = lambda s.
struct HomothetyReport {
    double lambda = 1.0;
    // max over the grid of |lambda kappa_i*(lambda s) - kappa_i(s)|
    std::array<double, 3> max_kappa_dev{};
    double max_rho_dev = 0.0;    // |rho*(lambda s)/lambda - rho(s)|
    std::array<double, 3> max_ek_dev{};  // |EK_i*(lambda s) - EK_i(s)|
    double max_sigma_dev = 0.0;  // |sigma*(lambda s) - sigma(s)|
    double worst() const;
};

HomothetyReport homothety_check(const UnitSpeedCurve& curve, double lambda,
                                const std::vector<double>& s_grid,
                                const Tolerances& tols = {});

}  // namespace mink
