#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mink/equiform.hpp"

namespace mink {

/// One profile sample. Rows where the second curvature is degenerate carry
/// k2 = k3 = ek2 = ek3 = 0 with torsion_degenerate set; their case tag
/// reflects the tangent character only.
struct ProfileRow {
    double s = 0.0, sigma = 0.0;
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    double ek1 = 0.0, ek2 = 0.0, ek3 = 0.0;
    FrameCase frame_case = FrameCase::SpacelikeN_SpacelikeB1;
    bool torsion_degenerate = false;
};

struct DroppedSample {
    double s = 0.0;
    std::string reason;
};

/// Invariant table over an ordered arclength grid.
struct CurvatureProfile {
    std::string curve_name;
    std::vector<ProfileRow> rows;
    double grid_spacing = 0.0;
    bool all_torsion_degenerate() const;
};

/// Sample the apparatus on an even inner grid of `samples` points.
/// Samples whose frame fails (degenerate curvature, null frame vectors)
/// are dropped and reported via `dropped`; throws DegenerateCurvature if
/// every sample fails that way.
CurvatureProfile build_profile(const UnitSpeedCurve& curve, int samples,
                               const Tolerances& tols = {},
                               std::vector<DroppedSample>* dropped = nullptr);

struct HelixReport {
    bool is_helix = false;
    double k2_dev = 0.0, k3_dev = 0.0;  // max |K - mean|
    double k2_mean = 0.0, k3_mean = 0.0;
    double tol_used = 0.0;
};

struct WCurveReport {
    HelixReport helix;
    bool is_w_curve = false;
    double k1_max_abs = 0.0;
};

struct PlanarReport {
    bool is_planar = false;
    double k2_max_abs = 0.0;
    bool all_torsion_degenerate = false;
    // corroborating geometric evidence: singular-value gap of centered samples
    double rank_gap_ratio = 0.0;
    bool rank2 = false;
};

/// Affine hyperplane through base point p with pseudo-normalized normal q.
struct HyperplaneFit {
    Vec4 base{};
    Vec4 normal{};
    CausalCharacter normal_character{Causality::Lightlike, 0.0};
    double max_residual = 0.0;  // max |<alpha(s_i) - p, q>|
    double diameter = 0.0;
    bool indeterminate = false;  // candidate normal was lightlike
};

struct HyperplanarReport {
    bool is_hyperplanar = false;      // conjunction of the two verdicts
    bool curvature_verdict = false;   // max |K3| <= tol
    bool geometric_verdict = false;   // fit residual <= tol * diameter
    double k3_max_abs = 0.0;
    double k1_max_abs = 0.0;  // reported: the theorem assumes EK1 != 0
    HyperplaneFit fit{};
};

/// General helix: K2 and K3 both constant over the grid (relative
/// deviation from the mean at most tol); no condition on K1.
HelixReport detect_general_helix(const CurvatureProfile& profile, double tol);

/// W-curve: general helix with K1 identically zero.
WCurveReport detect_w_curve(const CurvatureProfile& profile, double tol);

/// Curve lies in a 2-dimensional affine subspace: K2 identically zero, or
/// the torsion was degenerate at every sample. `curve` supplies position
/// samples for the rank-2 evidence; pass nullptr to skip it.
PlanarReport detect_planar_2d(const CurvatureProfile& profile, double tol,
                              const UnitSpeedCurve* curve = nullptr);

/// Curve lies in a hyperplane: requires K2 nonzero (otherwise
/// TheoremHypothesisViolated directs the caller to detect_planar_2d);
/// checks max |K3| <= tol and, independently, a least-squares hyperplane
/// fit of >= 50 position samples.
HyperplanarReport detect_hyperplanar(const UnitSpeedCurve& curve,
                                     const CurvatureProfile& profile, double tol);

/// Coefficients of the second-order helix identity
///   W3'' + c1 W3 = c2 W1 + c3 W2 + c4 W4.
struct HelixIdentityCoefficients {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
};

HelixIdentityCoefficients helix_identity_coefficients(const EquiformApparatus& app);

/// Pseudo-norm of the identity mismatch at s, normalized by rho^2; W3'' is
/// a five-point central difference in sigma.
double helix_identity_residual(const UnitSpeedCurve& curve, double s, double h_sigma,
                               const Tolerances& tols = {});

enum class Verdict { GeneralHelix, WCurve, Planar2D, Hyperplanar };
const char* to_string(Verdict v) noexcept;

/// All detectors combined; hyperplanarity is skipped (with the reason
/// recorded) when its hypothesis fails.
struct ClassificationReport {
    std::vector<Verdict> verdicts;  // ordered as the enum
    HelixReport helix;
    WCurveReport w_curve;
    PlanarReport planar;
    std::optional<HyperplanarReport> hyperplanar;
    std::string hyperplanar_skipped_reason;
    double tol_used = 0.0;
};

ClassificationReport classify_curve(const UnitSpeedCurve& curve,
                                    const CurvatureProfile& profile, double tol);

}  // namespace mink
