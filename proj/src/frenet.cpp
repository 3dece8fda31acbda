#include "mink/frenet.hpp"

#include <cmath>

namespace mink {

const char* to_string(FrameCase c) noexcept {
    switch (c) {
        case FrameCase::SpacelikeN_SpacelikeB1: return "SpacelikeN_SpacelikeB1";
        case FrameCase::SpacelikeN_TimelikeB1: return "SpacelikeN_TimelikeB1";
        case FrameCase::TimelikeN: return "TimelikeN";
        case FrameCase::TimelikeTangent: return "TimelikeTangent";
    }
    return "Unknown";
}

MuSignature signature_for(FrameCase c) noexcept {
    switch (c) {
        case FrameCase::SpacelikeN_SpacelikeB1:
            return {c, {-1, 1, -1, 1, 1}, {1, 1, 1, -1}};
        case FrameCase::SpacelikeN_TimelikeB1:
            return {c, {-1, 1, 1, 1, 1}, {1, 1, -1, 1}};
        case FrameCase::TimelikeN:
            return {c, {1, 1, 1, 1, -1}, {1, -1, 1, 1}};
        case FrameCase::TimelikeTangent:
            return {c, {1, 1, -1, 1, -1}, {-1, 1, 1, 1}};
    }
    return {c, {1, 1, 1, 1, 1}, {1, 1, 1, 1}};
}

namespace {

int strict_sign(double q, double scale2, double eps_null, double s) {
    if (std::fabs(q) <= eps_null * std::max(scale2, 1e-300))
        throw NullFrameVector(s);
    return q > 0.0 ? 1 : -1;
}

FrameCase classify_case(int eps_t, int eps_n, int eps_b1, double s) {
    if (eps_t < 0) return FrameCase::TimelikeTangent;
    if (eps_n < 0) {
        if (eps_b1 < 0) throw NullFrameVector(s);  // two timelike members
        return FrameCase::TimelikeN;
    }
    return eps_b1 < 0 ? FrameCase::SpacelikeN_TimelikeB1
                      : FrameCase::SpacelikeN_SpacelikeB1;
}

}  // namespace

FrenetApparatus frenet_apparatus(const UnitSpeedCurve& curve, double s,
                                 const Tolerances& tols) {
    const std::vector<Vec4> d = curve.derivatives(s, 4);
    const Vec4& d1 = d[0];
    const Vec4& d2 = d[1];
    const Vec4& d3 = d[2];
    const Vec4& d4 = d[3];

    const int eps_t = (curve.tangent_character() == Causality::Spacelike) ? 1 : -1;

    const double q2 = pseudo_dot(d2, d2);
    const double kappa1 = std::sqrt(std::fabs(q2));
    if (kappa1 < tols.eps_deg) throw DegenerateCurvature(s);
    const double e2 = euclid_norm(d2);
    const int eps_n = strict_sign(q2, e2 * e2, tols.eps_null, s);

    const Vec4 normal = d2 / kappa1;
    const double kappa1_dot = eps_n * pseudo_dot(d3, d2) / kappa1;
    const double kappa1_ddot =
        eps_n * ((pseudo_dot(d4, d2) + pseudo_dot(d3, d3)) / kappa1 -
                 pseudo_dot(d3, d2) * kappa1_dot / (kappa1 * kappa1));

    const Vec4 normal_dot = d3 / kappa1 - d2 * (kappa1_dot / (kappa1 * kappa1));
    const Vec4 normal_ddot =
        d4 / kappa1 - d3 * (2.0 * kappa1_dot / (kappa1 * kappa1)) +
        d2 * (2.0 * kappa1_dot * kappa1_dot / (kappa1 * kappa1 * kappa1) -
              kappa1_ddot / (kappa1 * kappa1));

    // Row two of the system forces w = n' - mu1 k1 t with mu1 = -eps_n eps_t.
    const double c21 = -static_cast<double>(eps_n * eps_t);
    const Vec4 w = normal_dot - (c21 * kappa1) * d1;
    const double qw = pseudo_dot(w, w);
    const double ew = euclid_norm(w);
    if (ew < tols.eps_deg || pseudo_norm(w) < tols.eps_deg) {
        // distinguish a vanishing direction (planar) from a lightlike one
        if (ew >= tols.eps_deg) throw NullFrameVector(s);
        throw DegenerateTorsion(s);
    }
    const int eps_b1 = strict_sign(qw, ew * ew, tols.eps_null, s);
    const double kappa2 = std::sqrt(std::fabs(qw));
    const Vec4 binormal1 = w / kappa2;

    const Vec4 w_dot = normal_ddot - c21 * (kappa1_dot * d1 + kappa1 * d2);
    const double kappa2_dot = eps_b1 * pseudo_dot(w_dot, w) / kappa2;
    const Vec4 binormal1_dot = w_dot / kappa2 - w * (kappa2_dot / (kappa2 * kappa2));

    Vec4 b2 = triple_cross(d1, normal, binormal1);
    const double qb2 = pseudo_dot(b2, b2);
    const double eb2 = euclid_norm(b2);
    const int eps_b2 = strict_sign(qb2, eb2 * eb2, tols.eps_null, s);
    b2 /= std::sqrt(std::fabs(qb2));

    FrenetApparatus app;
    app.s = s;
    app.tangent = d1;
    app.normal = normal;
    app.binormal1 = binormal1;
    app.binormal2 = b2;
    app.kappa1 = kappa1;
    app.kappa2 = kappa2;
    app.kappa1_dot = kappa1_dot;
    app.kappa1_ddot = kappa1_ddot;
    app.sig = signature_for(classify_case(eps_t, eps_n, eps_b1, s));
    // mu4 = 1 in every case; the sign of kappa3 follows the triple-cross
    // orientation of the second binormal.
    app.kappa3 = pseudo_dot(binormal1_dot, b2) / static_cast<double>(eps_b2);
    return app;
}

double frenet_residual(const UnitSpeedCurve& curve, double s, double h,
                       const Tolerances& tols,
                       const std::optional<MuSignature>& corrupt) {
    if (s - 2.0 * h < -1e-12 || s + 2.0 * h > curve.length() + 1e-12)
        throw DomainError("finite-difference stencil leaves the domain");

    std::array<std::array<Vec4, 4>, 5> frames;
    FrenetApparatus center;
    for (int j = -2; j <= 2; ++j) {
        const FrenetApparatus app = frenet_apparatus(curve, s + j * h, tols);
        frames[static_cast<std::size_t>(j + 2)] = app.frame();
        if (j == 0) center = app;
    }

    const MuSignature sig = corrupt.value_or(center.sig);
    const auto& mu = sig.mu;
    const double k1 = center.kappa1, k2 = center.kappa2, k3 = center.kappa3;
    const std::array<Vec4, 4> f = center.frame();
    const std::array<Vec4, 4> rhs = {
        k1 * f[1],
        mu[0] * k1 * f[0] + mu[1] * k2 * f[2],
        mu[2] * k2 * f[1] + mu[3] * k3 * f[3],
        mu[4] * k3 * f[2],
    };

    double worst = 0.0;
    for (int r = 0; r < 4; ++r) {
        const auto row = [&](int j) -> const Vec4& {
            return frames[static_cast<std::size_t>(j + 2)][static_cast<std::size_t>(r)];
        };
        const Vec4 deriv =
            (row(-2) - 8.0 * row(-1) + 8.0 * row(1) - row(2)) / (12.0 * h);
        worst = std::max(worst, pseudo_norm(deriv - rhs[static_cast<std::size_t>(r)]));
    }
    return worst;
}

}  // namespace mink
