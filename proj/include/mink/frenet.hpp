#pragma once

#include <array>
#include <optional>

#include "mink/curve.hpp"
#include "mink/tolerances.hpp"
#include "mink/vec4.hpp"

namespace mink {

/// Which frame vector is timelike. Spacelike tangents admit three cases
/// depending on the characters of the normal and first binormal; timelike
/// tangents have a single fixed coefficient pattern.
enum class FrameCase {
    SpacelikeN_SpacelikeB1,  // second binormal timelike
    SpacelikeN_TimelikeB1,
    TimelikeN,
    TimelikeTangent,
};

const char* to_string(FrameCase c) noexcept;

/// Sign pattern of the Frenet system
///   f1' =            k1 f2
///   f2' = mu1 k1 f1        + mu2 k2 f3
///   f3' =        mu3 k2 f2            + mu4 k3 f4
///   f4' =                   mu5 k3 f3
/// together with the metric signs eps_i = <f_i, f_i>. For a timelike
/// tangent the stored mu values reproduce its fixed coefficient matrix
/// (+1, +1, -1, +1, -1). Exactly one eps is -1.
struct MuSignature {
    FrameCase frame_case;
    std::array<int, 5> mu;
    std::array<int, 4> eps;
};

MuSignature signature_for(FrameCase c) noexcept;

/// Frame, curvatures and signature of a unit-speed curve at one point.
/// kappa1 and kappa2 are positive by construction; kappa3 is a signed
/// projection onto the cross-product-oriented second binormal.
struct FrenetApparatus {
    double s = 0.0;
    Vec4 tangent, normal, binormal1, binormal2;
    double kappa1 = 0.0, kappa2 = 0.0, kappa3 = 0.0;
    double kappa1_dot = 0.0;   // d(kappa1)/ds
    double kappa1_ddot = 0.0;  // d^2(kappa1)/ds^2
    MuSignature sig{};

    std::array<Vec4, 4> frame() const { return {tangent, normal, binormal1, binormal2}; }
};

/// Construct the apparatus at s. Throws DegenerateCurvature (kappa1 below
/// eps_deg), DegenerateTorsion (kappa2 below eps_deg; curve planar there),
/// NullFrameVector (the normal or the binormal direction is lightlike).
FrenetApparatus frenet_apparatus(const UnitSpeedCurve& curve, double s,
                                 const Tolerances& tols = {});

/// Max row-wise pseudo-norm mismatch between a five-point central
/// difference of the constructed frame and the Frenet system's right-hand
/// side at s. `corrupt` substitutes a different sign pattern (negative
/// control). Requires [s - 2h, s + 2h] within the domain.
double frenet_residual(const UnitSpeedCurve& curve, double s, double h,
                       const Tolerances& tols = {},
                       const std::optional<MuSignature>& corrupt = std::nullopt);

}  // namespace mink
