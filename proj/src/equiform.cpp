#include "mink/equiform.hpp"

#include <algorithm>
#include <cmath>

#include "mink/numerics.hpp"

namespace mink {

double equiform_parameter(const UnitSpeedCurve& curve, double s0, double s,
                          const Tolerances& tols) {
    if (s0 < -1e-9 || std::max(s0, s) > curve.length() + 1e-9 || s < -1e-9)
        throw DomainError("equiform parameter bounds outside [0, L]");
    if (s0 == s) return 0.0;
    return integrate(
        [&](double u) {
            const std::vector<Vec4> d = curve.derivatives(u, 2);
            const double k1 = pseudo_norm(d[1]);
            if (k1 < tols.eps_deg) throw DegenerateCurvature(u);
            return k1;
        },
        s0, s, tols.quad_tol);
}

EquiformApparatus equiform_apparatus(const UnitSpeedCurve& curve, double s,
                                     const Tolerances& tols,
                                     std::optional<double> known_sigma) {
    const FrenetApparatus f = frenet_apparatus(curve, s, tols);
    EquiformApparatus app;
    app.s = s;
    app.frenet = f;
    app.sig = f.sig;
    app.rho = 1.0 / f.kappa1;
    app.sigma = known_sigma ? *known_sigma : equiform_parameter(curve, 0.0, s, tols);
    // rho_dot = -kappa1'/kappa1^2 from the exact derivative chain
    app.ek1 = -f.kappa1_dot / (f.kappa1 * f.kappa1);
    app.ek2 = f.kappa2 / f.kappa1;
    app.ek3 = f.kappa3 / f.kappa1;
    app.rho_ddot = -f.kappa1_ddot / (f.kappa1 * f.kappa1) +
                   2.0 * f.kappa1_dot * f.kappa1_dot /
                       (f.kappa1 * f.kappa1 * f.kappa1);
    const std::array<Vec4, 4> base = f.frame();
    for (int i = 0; i < 4; ++i)
        app.frame[static_cast<std::size_t>(i)] = app.rho * base[static_cast<std::size_t>(i)];
    return app;
}

double s_of_sigma(const UnitSpeedCurve& curve, double sigma, const Tolerances& tols) {
    const double total = equiform_parameter(curve, 0.0, curve.length(), tols);
    if (sigma < -1e-9 || sigma > total + 1e-9)
        throw DomainError("equiform parameter outside range");
    return solve_monotone(
        [&](double s) { return equiform_parameter(curve, 0.0, s, tols) - sigma; },
        [&](double s) { return pseudo_norm(curve.derivatives(s, 2)[1]); }, 0.0,
        curve.length());
}

double advance_by_sigma(const UnitSpeedCurve& curve, double s, double d_sigma,
                        const Tolerances& tols) {
    if (d_sigma == 0.0) return s;
    const auto kappa1_at = [&](double u) {
        return pseudo_norm(curve.derivatives(u, 2)[1]);
    };
    // stencil-sized steps integrate exactly on a single panel
    const bool short_step = std::fabs(d_sigma) <= 0.05;
    const auto sigma_from_s = [&](double x) {
        return short_step ? integrate_panel(kappa1_at, s, x)
                          : equiform_parameter(curve, s, x, tols);
    };
    // expand a bracket on the far side of s until sigma overshoots
    const double dir = d_sigma > 0.0 ? 1.0 : -1.0;
    double step = std::fabs(d_sigma) / kappa1_at(s);
    double far = s;
    for (int it = 0; it < 60; ++it) {
        far = s + dir * step;
        far = std::clamp(far, 0.0, curve.length());
        if (std::fabs(sigma_from_s(far)) >= std::fabs(d_sigma)) break;
        if (far == 0.0 || far == curve.length())
            throw DomainError("equiform step leaves the domain");
        step *= 1.5;
    }
    const double lo = std::min(s, far), hi = std::max(s, far);
    return solve_monotone([&](double x) { return sigma_from_s(x) - d_sigma; },
                          kappa1_at, lo, hi);
}

std::array<Vec4, 4> equiform_frame_sigma_derivs(const UnitSpeedCurve& curve, double s,
                                                double h_sigma, const Tolerances& tols) {
    std::array<std::array<Vec4, 4>, 5> w;
    for (int j = -2; j <= 2; ++j) {
        const double sj = (j == 0) ? s : advance_by_sigma(curve, s, j * h_sigma, tols);
        // only the frame is read; sigma of the stencil point is not needed
        w[static_cast<std::size_t>(j + 2)] =
            equiform_apparatus(curve, sj, tols, 0.0).frame;
    }
    std::array<Vec4, 4> out;
    for (int r = 0; r < 4; ++r) {
        const auto row = [&](int j) -> const Vec4& {
            return w[static_cast<std::size_t>(j + 2)][static_cast<std::size_t>(r)];
        };
        out[static_cast<std::size_t>(r)] =
            (row(-2) - 8.0 * row(-1) + 8.0 * row(1) - row(2)) / (12.0 * h_sigma);
    }
    return out;
}

std::array<double, 3> equiform_curvatures_via_frame(
    const EquiformApparatus& app, const std::array<Vec4, 4>& frame_derivs,
    int j_for_k1) {
    const int j = std::clamp(j_for_k1, 0, 3);
    const Vec4& wj = app.frame[static_cast<std::size_t>(j)];
    const double k1 = pseudo_dot(frame_derivs[static_cast<std::size_t>(j)], wj) /
                      pseudo_dot(wj, wj);
    const double rho2 = app.rho * app.rho;
    const double k2 = pseudo_dot(frame_derivs[1], app.frame[2]) /
                      (app.sig.mu[1] * app.sig.eps[2] * rho2);
    const double k3 = pseudo_dot(frame_derivs[2], app.frame[3]) /
                      (app.sig.mu[3] * app.sig.eps[3] * rho2);
    return {k1, k2, k3};
}

double equiform_frenet_residual(const UnitSpeedCurve& curve, double s, double h_sigma,
                                const Tolerances& tols, double corrupt_ek2) {
    const EquiformApparatus app = equiform_apparatus(curve, s, tols);
    const std::array<Vec4, 4> deriv = equiform_frame_sigma_derivs(curve, s, h_sigma, tols);

    const auto& mu = app.sig.mu;
    const double k1 = app.ek1;
    const double k2 = app.ek2 + corrupt_ek2;
    const double k3 = app.ek3;
    const std::array<Vec4, 4>& w = app.frame;
    const std::array<Vec4, 4> rhs = {
        k1 * w[0] + w[1],
        mu[0] * w[0] + k1 * w[1] + mu[1] * k2 * w[2],
        mu[2] * k2 * w[1] + k1 * w[2] + mu[3] * k3 * w[3],
        mu[4] * k3 * w[2] + k1 * w[3],
    };

    double worst = 0.0;
    for (int r = 0; r < 4; ++r)
        worst = std::max(worst, pseudo_norm(deriv[static_cast<std::size_t>(r)] -
                                            rhs[static_cast<std::size_t>(r)]));
    return worst;
}

double HomothetyReport::worst() const {
    double m = std::max({max_kappa_dev[0], max_kappa_dev[1], max_kappa_dev[2]});
    m = std::max(m, max_rho_dev);
    m = std::max(m, std::max({max_ek_dev[0], max_ek_dev[1], max_ek_dev[2]}));
    return std::max(m, max_sigma_dev);
}

HomothetyReport homothety_check(const UnitSpeedCurve& curve, double lambda,
                                const std::vector<double>& s_grid,
                                const Tolerances& tols) {
    if (!(lambda > 0.0)) throw ZeroScale("homothety check requires lambda > 0");

    const UnitSpeedCurve scaled =
        reparametrize_unit_speed(curve.source().scaled(lambda), tols);

    std::vector<double> grid = s_grid;
    std::sort(grid.begin(), grid.end());

    HomothetyReport rep;
    rep.lambda = lambda;
    double sig_a = 0.0, sig_b = 0.0, prev_a = 0.0, prev_b = 0.0;
    for (const double s : grid) {
        sig_a += equiform_parameter(curve, prev_a, s, tols);
        sig_b += equiform_parameter(scaled, prev_b, lambda * s, tols);
        prev_a = s;
        prev_b = lambda * s;
        const EquiformApparatus a = equiform_apparatus(curve, s, tols, sig_a);
        const EquiformApparatus b = equiform_apparatus(scaled, lambda * s, tols, sig_b);
        const std::array<double, 3> ka{a.frenet.kappa1, a.frenet.kappa2, a.frenet.kappa3};
        const std::array<double, 3> kb{b.frenet.kappa1, b.frenet.kappa2, b.frenet.kappa3};
        for (int i = 0; i < 3; ++i) {
            auto& dev = rep.max_kappa_dev[static_cast<std::size_t>(i)];
            dev = std::max(dev, std::fabs(lambda * kb[static_cast<std::size_t>(i)] -
                                          ka[static_cast<std::size_t>(i)]));
        }
        rep.max_rho_dev = std::max(rep.max_rho_dev, std::fabs(b.rho / lambda - a.rho));
        rep.max_ek_dev[0] = std::max(rep.max_ek_dev[0], std::fabs(b.ek1 - a.ek1));
        rep.max_ek_dev[1] = std::max(rep.max_ek_dev[1], std::fabs(b.ek2 - a.ek2));
        rep.max_ek_dev[2] = std::max(rep.max_ek_dev[2], std::fabs(b.ek3 - a.ek3));
        rep.max_sigma_dev = std::max(rep.max_sigma_dev, std::fabs(b.sigma - a.sigma));
    }
    return rep;
}

}  // namespace mink
