#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mink/frenet.hpp"
#include "support.hpp"

using namespace mink;

namespace {

UnitSpeedCurve unit(const char* family) {
    return reparametrize_unit_speed(builtin_family(family));
}

const double kSqrt3 = std::sqrt(3.0);
const double kKappa2Golden = 2.0 * std::sqrt(6.0) / 3.0;
const double kKappa3Golden = 1.0 / std::sqrt(3.0);

}  // namespace

TEST_CASE("spacelike W-curve golden apparatus") {
    const UnitSpeedCurve u = unit("spacelike_w");
    for (const double s : {0.0, 0.5, 1.3}) {
        const FrenetApparatus f = frenet_apparatus(u, s);
        CHECK(f.sig.frame_case == FrameCase::SpacelikeN_TimelikeB1);
        CHECK(f.kappa1 == doctest::Approx(kSqrt3).epsilon(1e-10));
        CHECK(f.kappa2 == doctest::Approx(kKappa2Golden).epsilon(1e-10));
        // the signed third curvature is negative in the cross-product
        // orientation; its magnitude is the tabulated value
        CHECK(std::fabs(f.kappa3) == doctest::Approx(kKappa3Golden).epsilon(1e-10));
        CHECK(f.kappa1_dot == doctest::Approx(0.0).epsilon(1e-9));

        // b1 = (sqrt2 cosh s, sqrt2 sinh s, -sin s, cos s)
        const double r2 = std::sqrt(2.0);
        CHECK(f.binormal1.x1 == doctest::Approx(r2 * std::cosh(s)).epsilon(1e-9));
        CHECK(f.binormal1.x2 == doctest::Approx(r2 * std::sinh(s)).epsilon(1e-9));
        CHECK(f.binormal1.x3 == doctest::Approx(-std::sin(s)).epsilon(1e-9));
        CHECK(f.binormal1.x4 == doctest::Approx(std::cos(s)).epsilon(1e-9));
    }
}

TEST_CASE("timelike W-curve golden apparatus") {
    const UnitSpeedCurve u = unit("timelike_w");
    for (const double s : {0.0, 0.7}) {
        const FrenetApparatus f = frenet_apparatus(u, s);
        CHECK(f.sig.frame_case == FrameCase::TimelikeTangent);
        CHECK(f.kappa1 == doctest::Approx(kSqrt3).epsilon(1e-10));
        CHECK(f.kappa2 == doctest::Approx(kKappa2Golden).epsilon(1e-10));
        CHECK(std::fabs(f.kappa3) == doctest::Approx(kKappa3Golden).epsilon(1e-10));
    }
}

TEST_CASE("hyperplanar spacelike curve: constant curvatures with kappa3 = 0") {
    const UnitSpeedCurve u = unit("hyperplanar_spacelike");
    const FrenetApparatus f = frenet_apparatus(u, 0.8);
    CHECK(f.sig.frame_case == FrameCase::SpacelikeN_TimelikeB1);
    CHECK(f.kappa1 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(f.kappa2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(f.kappa3 == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("nonhelix control runs in the timelike-normal case") {
    const UnitSpeedCurve u = unit("nonhelix_control");
    const FrenetApparatus f = frenet_apparatus(u, 0.6);
    CHECK(f.sig.frame_case == FrameCase::TimelikeN);
    CHECK(pseudo_dot(f.normal, f.normal) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("spacelike curve with spacelike binormal1 (helix in a spacelike 3-plane)") {
    const CurveSource c = CurveSource::from_expressions(
        "helix_x1", {"0", "cos(t)", "sin(t)", "t"}, 0.0, 6.0);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    const FrenetApparatus f = frenet_apparatus(u, 1.0);
    CHECK(f.sig.frame_case == FrameCase::SpacelikeN_SpacelikeB1);
    CHECK(f.kappa1 == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(f.kappa2 == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(f.kappa3 == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(pseudo_dot(f.binormal2, f.binormal2) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("straight line raises DegenerateCurvature") {
    const CurveSource c = CurveSource::from_expressions("line", {"0", "t", "0", "0"}, 0, 2);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    CHECK_THROWS_AS(frenet_apparatus(u, 1.0), DegenerateCurvature);
}

TEST_CASE("planar curves raise DegenerateTorsion") {
    CHECK_THROWS_AS(frenet_apparatus(unit("planar_circle"), 1.0), DegenerateTorsion);
    CHECK_THROWS_AS(frenet_apparatus(unit("planar_timelike"), 1.0), DegenerateTorsion);
}

TEST_CASE("orthonormality table per case") {
    const struct {
        const char* family;
        FrameCase expected;
    } cases[] = {
        {"spacelike_w", FrameCase::SpacelikeN_TimelikeB1},
        {"timelike_w", FrameCase::TimelikeTangent},
        {"nonhelix_control", FrameCase::TimelikeN},
    };
    for (const auto& tc : cases) {
        const UnitSpeedCurve u = unit(tc.family);
        for (int i = 1; i < 100; ++i) {
            const double s = u.length() * i / 100.0;
            const FrenetApparatus f = frenet_apparatus(u, s);
            REQUIRE(f.sig.frame_case == tc.expected);
            const std::array<Vec4, 4> fr = f.frame();
            int timelike_members = 0;
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    const double expect =
                        (a == b) ? static_cast<double>(f.sig.eps[static_cast<std::size_t>(a)])
                                 : 0.0;
                    CHECK(pseudo_dot(fr[static_cast<std::size_t>(a)],
                                     fr[static_cast<std::size_t>(b)]) ==
                          doctest::Approx(expect).epsilon(1e-7));
                }
                if (f.sig.eps[static_cast<std::size_t>(a)] < 0) ++timelike_members;
            }
            CHECK(timelike_members == 1);
        }
    }
}

TEST_CASE("row-one consistency: kappa1 equals eps_n <t', n>") {
    const UnitSpeedCurve u = unit("nonhelix_control");
    const double h = 1e-4;
    for (const double s : {0.2, 0.5, 0.9}) {
        const FrenetApparatus f = frenet_apparatus(u, s);
        const Vec4 t_dot = testsupport::fd_derivative(
            [&](double x) { return frenet_apparatus(u, x).tangent; }, s, h);
        const double k1 = pseudo_dot(t_dot, f.normal) *
                          static_cast<double>(f.sig.eps[1]);
        CHECK(k1 == doctest::Approx(f.kappa1).epsilon(1e-8));
    }
}

TEST_CASE("Frenet system residual is small on catalog curves") {
    for (const char* family :
         {"spacelike_w", "timelike_w", "hyperplanar_spacelike", "nonhelix_control"}) {
        const UnitSpeedCurve u = unit(family);
        for (const double frac : {0.2, 0.5, 0.8}) {
            const double s = u.length() * frac;
            CHECK(frenet_residual(u, s, 1e-4) < 1e-6);
        }
    }
}

TEST_CASE("corrupting mu3 breaks the residual") {
    const UnitSpeedCurve u = unit("spacelike_w");
    MuSignature bad = signature_for(FrameCase::SpacelikeN_TimelikeB1);
    bad.mu[2] = -bad.mu[2];
    CHECK(frenet_residual(u, 1.0, 1e-4, {}, bad) > 0.1);
}

TEST_CASE("curvatures transform as 1/lambda under homothety") {
    const UnitSpeedCurve u = unit("nonhelix_control");
    const double lambda = 2.0;
    const UnitSpeedCurve scaled =
        reparametrize_unit_speed(u.source().scaled(lambda));
    for (const double frac : {0.25, 0.6}) {
        const double s = u.length() * frac;
        const FrenetApparatus f = frenet_apparatus(u, s);
        const FrenetApparatus g = frenet_apparatus(scaled, lambda * s);
        CHECK(g.kappa1 == doctest::Approx(f.kappa1 / lambda).epsilon(1e-8));
        CHECK(g.kappa2 == doctest::Approx(f.kappa2 / lambda).epsilon(1e-8));
        CHECK(g.kappa3 == doctest::Approx(f.kappa3 / lambda).epsilon(1e-8));
    }
}
