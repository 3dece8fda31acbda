#include "mink/classify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mink {

namespace {

constexpr int kMinSamples = 20;

void require_samples(const CurvatureProfile& profile) {
    if (profile.rows.size() < kMinSamples)
        throw InsufficientSamples("profile has " + std::to_string(profile.rows.size()) +
                                  " rows; need at least " +
                                  std::to_string(kMinSamples));
}

double mean_of(const std::vector<ProfileRow>& rows, double ProfileRow::*field) {
    double sum = 0.0;
    for (const auto& r : rows) sum += r.*field;
    return sum / static_cast<double>(rows.size());
}

double max_abs_dev(const std::vector<ProfileRow>& rows, double ProfileRow::*field,
                   double center) {
    double dev = 0.0;
    for (const auto& r : rows) dev = std::max(dev, std::fabs(r.*field - center));
    return dev;
}

// Euclidean covariance spectrum of centered position samples, ascending.
Eigen::Vector4d covariance_spectrum(const std::vector<Vec4>& pts,
                                    Eigen::Matrix4d* vectors, Vec4* centroid) {
    Eigen::MatrixXd m(static_cast<long>(pts.size()), 4);
    for (std::size_t i = 0; i < pts.size(); ++i)
        m.row(static_cast<long>(i)) << pts[i].x1, pts[i].x2, pts[i].x3, pts[i].x4;
    const Eigen::RowVector4d c = m.colwise().mean();
    m.rowwise() -= c;
    const Eigen::Matrix4d cov = m.transpose() * m;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(cov);
    if (vectors) *vectors = es.eigenvectors();
    if (centroid) *centroid = {c[0], c[1], c[2], c[3]};
    return es.eigenvalues();
}

std::vector<Vec4> position_samples(const UnitSpeedCurve& curve, int n) {
    std::vector<Vec4> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double s = curve.length() * i / static_cast<double>(n - 1);
        pts.push_back(curve.position(s));
    }
    return pts;
}

}  // namespace

bool CurvatureProfile::all_torsion_degenerate() const {
    return !rows.empty() &&
           std::all_of(rows.begin(), rows.end(),
                       [](const ProfileRow& r) { return r.torsion_degenerate; });
}

CurvatureProfile build_profile(const UnitSpeedCurve& curve, int samples,
                               const Tolerances& tols,
                               std::vector<DroppedSample>* dropped) {
    if (samples < 2) throw InsufficientSamples("need at least 2 profile samples");

    CurvatureProfile profile;
    profile.curve_name = curve.source().name();
    // inner grid: margins leave room for finite-difference stencils
    const double margin = std::min(0.02 * curve.length(), 4.0 * tols.fd_step);
    const double lo = margin, hi = curve.length() - margin;
    profile.grid_spacing = (hi - lo) / static_cast<double>(samples - 1);

    // sigma accumulates across the grid instead of re-integrating from zero
    double sigma_acc = equiform_parameter(curve, 0.0, lo, tols);
    double s_prev = lo;
    bool saw_null_frame = false;
    for (int i = 0; i < samples; ++i) {
        const double s = lo + profile.grid_spacing * i;
        sigma_acc += equiform_parameter(curve, s_prev, s, tols);
        s_prev = s;
        ProfileRow row;
        row.s = s;
        try {
            const EquiformApparatus app = equiform_apparatus(curve, s, tols, sigma_acc);
            row.sigma = app.sigma;
            row.k1 = app.frenet.kappa1;
            row.k2 = app.frenet.kappa2;
            row.k3 = app.frenet.kappa3;
            row.ek1 = app.ek1;
            row.ek2 = app.ek2;
            row.ek3 = app.ek3;
            row.frame_case = app.sig.frame_case;
        } catch (const DegenerateTorsion&) {
            // planar sample: only {t, n} and kappa1 are defined
            const std::vector<Vec4> d = curve.derivatives(s, 3);
            const double k1 = pseudo_norm(d[1]);
            const double eps_n = pseudo_dot(d[1], d[1]) > 0.0 ? 1.0 : -1.0;
            const double k1_dot = eps_n * pseudo_dot(d[2], d[1]) / k1;
            row.sigma = sigma_acc;
            row.k1 = k1;
            row.ek1 = -k1_dot / (k1 * k1);
            row.frame_case = curve.tangent_character() == Causality::Timelike
                                 ? FrameCase::TimelikeTangent
                                 : (eps_n < 0.0 ? FrameCase::TimelikeN
                                                : FrameCase::SpacelikeN_SpacelikeB1);
            row.torsion_degenerate = true;
        } catch (const NullFrameVector& e) {
            saw_null_frame = true;
            if (dropped) dropped->push_back({s, e.what()});
            continue;
        } catch (const FrameError& e) {
            if (dropped) dropped->push_back({s, e.what()});
            continue;
        }
        profile.rows.push_back(row);
    }

    if (profile.rows.empty()) {
        if (saw_null_frame) throw NullFrameVector(lo);
        throw DegenerateCurvature(lo);
    }
    return profile;
}

HelixReport detect_general_helix(const CurvatureProfile& profile, double tol) {
    require_samples(profile);
    HelixReport rep;
    rep.tol_used = tol;
    rep.k2_mean = mean_of(profile.rows, &ProfileRow::ek2);
    rep.k3_mean = mean_of(profile.rows, &ProfileRow::ek3);
    rep.k2_dev = max_abs_dev(profile.rows, &ProfileRow::ek2, rep.k2_mean);
    rep.k3_dev = max_abs_dev(profile.rows, &ProfileRow::ek3, rep.k3_mean);
    rep.is_helix = rep.k2_dev <= tol * (1.0 + std::fabs(rep.k2_mean)) &&
                   rep.k3_dev <= tol * (1.0 + std::fabs(rep.k3_mean));
    return rep;
}

WCurveReport detect_w_curve(const CurvatureProfile& profile, double tol) {
    WCurveReport rep;
    rep.helix = detect_general_helix(profile, tol);
    rep.k1_max_abs = max_abs_dev(profile.rows, &ProfileRow::ek1, 0.0);
    rep.is_w_curve = rep.helix.is_helix && rep.k1_max_abs <= tol;
    return rep;
}

PlanarReport detect_planar_2d(const CurvatureProfile& profile, double tol,
                              const UnitSpeedCurve* curve) {
    require_samples(profile);
    PlanarReport rep;
    rep.all_torsion_degenerate = profile.all_torsion_degenerate();
    rep.k2_max_abs = max_abs_dev(profile.rows, &ProfileRow::ek2, 0.0);
    rep.is_planar = rep.all_torsion_degenerate || rep.k2_max_abs <= tol;
    if (curve) {
        const std::vector<Vec4> pts = position_samples(*curve, 64);
        const Eigen::Vector4d ev = covariance_spectrum(pts, nullptr, nullptr);
        // spectrum ascending: rank 2 means ev[2]/ev[1] huge (gap below the
        // second-largest value); guard against an exactly-zero denominator
        const double small = std::max(ev[1], 0.0);
        const double big = std::max(ev[2], 0.0);
        rep.rank_gap_ratio = std::sqrt(big / std::max(small, 1e-300));
        rep.rank2 = rep.rank_gap_ratio > 1e6;
    }
    return rep;
}

HyperplanarReport detect_hyperplanar(const UnitSpeedCurve& curve,
                                     const CurvatureProfile& profile, double tol) {
    require_samples(profile);

    double k2_max = 0.0;
    for (const auto& r : profile.rows)
        k2_max = std::max(k2_max, r.torsion_degenerate ? 0.0 : std::fabs(r.ek2));
    if (profile.all_torsion_degenerate() || k2_max <= tol)
        throw TheoremHypothesisViolated(
            "second equiform curvature vanishes; use the planar test instead");

    HyperplanarReport rep;
    rep.k3_max_abs = max_abs_dev(profile.rows, &ProfileRow::ek3, 0.0);
    rep.k1_max_abs = max_abs_dev(profile.rows, &ProfileRow::ek1, 0.0);
    rep.curvature_verdict = rep.k3_max_abs <= tol;

    // geometric test: smallest principal direction of the Euclidean
    // covariance, reinterpreted as a pseudo-metric normal (the candidate
    // covector's index is lowered by flipping the time component)
    const std::vector<Vec4> pts = position_samples(curve, 64);
    Eigen::Matrix4d vecs;
    Vec4 centroid;
    covariance_spectrum(pts, &vecs, &centroid);
    const Eigen::Vector4d qe = vecs.col(0);  // smallest eigenvalue first
    Vec4 q{-qe[0], qe[1], qe[2], qe[3]};

    HyperplaneFit fit;
    fit.base = centroid;
    const CausalCharacter cc = causal_character(q, 0.0);
    double diam = 0.0;
    for (const Vec4& p : pts) {
        const Vec4 d = p - centroid;
        diam = std::max(diam, euclid_norm(d));
    }
    fit.diameter = 2.0 * diam;

    if (std::fabs(cc.quadratic_form) <= curve.tolerances().eps_null) {
        fit.indeterminate = true;
        fit.normal = q;
        fit.normal_character = cc;
        rep.geometric_verdict = false;
    } else {
        q /= pseudo_norm(q);
        fit.normal = q;
        fit.normal_character = causal_character(q, curve.tolerances().eps_null);
        for (const Vec4& p : pts)
            fit.max_residual = std::max(fit.max_residual,
                                        std::fabs(pseudo_dot(p - centroid, q)));
        rep.geometric_verdict = fit.max_residual <= tol * fit.diameter;
    }
    rep.fit = fit;
    rep.is_hyperplanar = rep.curvature_verdict && rep.geometric_verdict;
    return rep;
}

HelixIdentityCoefficients helix_identity_coefficients(const EquiformApparatus& app) {
    const auto& mu = app.sig.mu;
    const double rho_kdot1 = app.rho * app.rho_ddot;  // rho * d(EK1)/ds
    HelixIdentityCoefficients c;
    c.c1 = -(rho_kdot1 + app.ek1 * app.ek1 + mu[1] * mu[2] * app.ek2 * app.ek2 +
             mu[3] * mu[4] * app.ek3 * app.ek3);
    c.c2 = mu[0] * mu[2] * app.ek2;
    c.c3 = 2.0 * mu[2] * app.ek1 * app.ek2;
    c.c4 = 2.0 * mu[3] * app.ek1 * app.ek3;
    return c;
}

double helix_identity_residual(const UnitSpeedCurve& curve, double s, double h_sigma,
                               const Tolerances& tols) {
    const EquiformApparatus app = equiform_apparatus(curve, s, tols, 0.0);

    std::array<Vec4, 5> w3;
    for (int j = -2; j <= 2; ++j) {
        const double sj = (j == 0) ? s : advance_by_sigma(curve, s, j * h_sigma, tols);
        w3[static_cast<std::size_t>(j + 2)] =
            equiform_apparatus(curve, sj, tols, 0.0).frame[2];
    }
    const Vec4 w3_dd = (-1.0 * w3[0] + 16.0 * w3[1] - 30.0 * w3[2] + 16.0 * w3[3] -
                        1.0 * w3[4]) /
                       (12.0 * h_sigma * h_sigma);

    const HelixIdentityCoefficients c = helix_identity_coefficients(app);
    const Vec4 mismatch = w3_dd + c.c1 * app.frame[2] - c.c2 * app.frame[0] -
                          c.c3 * app.frame[1] - c.c4 * app.frame[3];
    return pseudo_norm(mismatch) / (app.rho * app.rho);
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::GeneralHelix: return "GeneralHelix";
        case Verdict::WCurve: return "WCurve";
        case Verdict::Planar2D: return "Planar2D";
        case Verdict::Hyperplanar: return "Hyperplanar";
    }
    return "Unknown";
}

ClassificationReport classify_curve(const UnitSpeedCurve& curve,
                                    const CurvatureProfile& profile, double tol) {
    ClassificationReport rep;
    rep.tol_used = tol;
    rep.w_curve = detect_w_curve(profile, tol);
    rep.helix = rep.w_curve.helix;
    rep.planar = detect_planar_2d(profile, tol, &curve);
    try {
        rep.hyperplanar = detect_hyperplanar(curve, profile, tol);
    } catch (const TheoremHypothesisViolated& e) {
        rep.hyperplanar_skipped_reason = e.what();
    }

    if (rep.helix.is_helix) rep.verdicts.push_back(Verdict::GeneralHelix);
    if (rep.w_curve.is_w_curve) rep.verdicts.push_back(Verdict::WCurve);
    if (rep.planar.is_planar) rep.verdicts.push_back(Verdict::Planar2D);
    if (rep.hyperplanar && rep.hyperplanar->is_hyperplanar)
        rep.verdicts.push_back(Verdict::Hyperplanar);
    return rep;
}

}  // namespace mink
