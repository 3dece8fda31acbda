#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "mink/curve.hpp"
#include "support.hpp"

using namespace mink;

namespace {

CurveSource expr_curve(const std::array<std::string, 4>& comps, double t0, double t1,
                       const char* name = "test") {
    return CurveSource::from_expressions(name, comps, t0, t1);
}

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("arclength of a unit circle quarter") {
    const CurveSource c = expr_curve({"0", "cos(t)", "sin(t)", "0"}, 0, 2 * kPi);
    CHECK(arclength(c, 0.0, kPi) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(arclength(c, 1.0, 1.0) == 0.0);
}

TEST_CASE("arclength of an already unit-speed mixed-hyperbolic curve") {
    const CurveSource c = expr_curve(
        {"sinh(t)", "cosh(t)", "sqrt(2)*cos(t)", "sqrt(2)*sin(t)"}, 0, 2);
    CHECK(arclength(c, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("arclength is additive") {
    const CurveSource c = expr_curve({"t^2/2", "t", "cos(t)", "sin(t)"}, 0.25, 1.3);
    const double a = arclength(c, 0.3, 0.7);
    const double b = arclength(c, 0.7, 1.2);
    const double whole = arclength(c, 0.3, 1.2);
    CHECK(a + b == doctest::Approx(whole).epsilon(1e-10));
}

TEST_CASE("arclength scales linearly under homothety") {
    const CurveSource c = expr_curve({"t^2/2", "t", "cos(t)", "sin(t)"}, 0.25, 1.3);
    for (const double lambda : {0.5, 2.0, 10.0}) {
        const CurveSource scaled = c.scaled(lambda);
        CHECK(arclength(scaled, 0.3, 1.2) ==
              doctest::Approx(lambda * arclength(c, 0.3, 1.2)).epsilon(1e-10));
    }
}

TEST_CASE("reparametrization of a radius-2 circle") {
    const CurveSource c = expr_curve({"0", "2*cos(t)", "2*sin(t)", "0"}, 0, 2 * kPi);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    CHECK(u.length() == doctest::Approx(4 * kPi).epsilon(1e-9));
    CHECK(u.tangent_character() == Causality::Spacelike);
    // unit-speed invariant on a grid
    for (int i = 0; i <= 200; ++i) {
        const double s = u.length() * i / 200.0;
        const Vec4 d1 = u.derivatives(s, 1)[0];
        CHECK(std::fabs(std::fabs(pseudo_dot(d1, d1)) - 1.0) < 1e-8);
    }
}

TEST_CASE("already unit-speed curve keeps s = t - t_min") {
    const CurveSource c = expr_curve(
        {"sinh(t)", "cosh(t)", "sqrt(2)*cos(t)", "sqrt(2)*sin(t)"}, 0.5, 2.5);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    CHECK(u.length() == doctest::Approx(2.0).epsilon(1e-10));
    for (const double s : {0.0, 0.3, 1.1, 1.9}) {
        CHECK(u.t_of_s(s) == doctest::Approx(0.5 + s).epsilon(1e-10));
        CHECK(u.s_of_t(0.5 + s) == doctest::Approx(s).epsilon(1e-10));
    }
}

TEST_CASE("timelike W-curve is recognized as timelike and unit speed") {
    const CurveSource c = expr_curve(
        {"sqrt(2)*sinh(t)", "sqrt(2)*cosh(t)", "cos(t)", "sin(t)"}, 0, 2);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    CHECK(u.tangent_character() == Causality::Timelike);
    CHECK(u.length() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("lightlike tangent is rejected") {
    const CurveSource c = expr_curve({"t", "t", "0", "0"}, 0, 1);
    CHECK_THROWS_AS(reparametrize_unit_speed(c), LightlikeTangent);
}

TEST_CASE("mixed causality is rejected") {
    // <a', a'> = t: timelike for t < 0, spacelike for t > 0; the domain is
    // offset so the crossing falls between causal-scan nodes
    const CurveSource c = expr_curve({"t", "(2/3)*(1+t)^1.5", "0", "0"}, -0.499, 0.501);
    CHECK_THROWS_AS(reparametrize_unit_speed(c), MixedCausality);
}

TEST_CASE("second arclength derivative of the spacelike W-curve") {
    const CurveSource c = expr_curve(
        {"sinh(t)", "cosh(t)", "sqrt(2)*cos(t)", "sqrt(2)*sin(t)"}, 0, 2);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    const Vec4 d2 = u.derivatives(0.0, 2)[1];
    CHECK(d2.x1 == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(d2.x2 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(d2.x3 == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
    CHECK(d2.x4 == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("straight line has vanishing second derivative") {
    const CurveSource c = expr_curve({"0", "t", "0", "0"}, 0, 2);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    CHECK(euclid_norm(u.derivatives(1.0, 2)[1]) == 0.0);
}

TEST_CASE("arclength derivatives agree with the finite-difference oracle") {
    // non-unit-speed source exercises the full chain rule
    const CurveSource c = expr_curve({"t^2/2", "t", "cos(t)", "sin(t)"}, 0.25, 1.3);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    const double h = 1e-4;
    for (const double s : {0.1, 0.4, 0.8}) {
        const std::vector<Vec4> d = u.derivatives(s, 3);
        const Vec4 fd1 = testsupport::fd_derivative(
            [&](double x) { return u.position(x); }, s, h);
        const Vec4 fd2 = testsupport::fd_derivative(
            [&](double x) { return u.derivatives(x, 1)[0]; }, s, h);
        const Vec4 fd3 = testsupport::fd_derivative(
            [&](double x) { return u.derivatives(x, 2)[1]; }, s, h);
        CHECK(euclid_norm(d[0] - fd1) < 1e-6);
        CHECK(euclid_norm(d[1] - fd2) < 1e-6);
        CHECK(euclid_norm(d[2] - fd3) < 1e-6);
    }
}

TEST_CASE("fifth derivatives of every builtin family are finite") {
    for (const auto& info : builtin_catalog()) {
        const CurveSource c = builtin_family(info.name);
        const UnitSpeedCurve u = reparametrize_unit_speed(c);
        for (int i = 1; i <= 9; ++i) {
            const double s = u.length() * i / 10.0;
            const std::vector<Vec4> d = u.derivatives(s, 5);
            for (const Vec4& v : d) CHECK(all_finite(v));
        }
    }
}

TEST_CASE("builtin registry") {
    CHECK(builtin_catalog().size() == 6);
    CHECK_THROWS_AS(builtin_family("does_not_exist"), UnknownFamily);
    // constraint b^2 n^2 - a^2 m^2 = 1 fails for these params
    CHECK_THROWS_AS(builtin_family("spacelike_w", {{"a", 1.0}, {"b", 1.0}}), BadParams);
    CHECK_THROWS_AS(builtin_family("planar_circle", {{"a", 1.0}}), BadParams);
    CHECK_THROWS_AS(builtin_family("spacelike_w", {{"radius", 2.0}}), BadParams);

    const CurveSource sw = builtin_family("spacelike_w");
    const UnitSpeedCurve usw = reparametrize_unit_speed(sw);
    CHECK(usw.tangent_character() == Causality::Spacelike);
    CHECK(usw.length() == doctest::Approx(2.0).epsilon(1e-10));

    const CurveSource tw =
        builtin_family("timelike_w", {{"a", std::sqrt(2.0)}, {"m", 1.0}, {"b", 1.0},
                                      {"n", 1.0}});
    CHECK(reparametrize_unit_speed(tw).tangent_character() == Causality::Timelike);
}

TEST_CASE("sampled-data ingestion") {
    const std::string path = "test_samples_tmp.csv";
    {
        std::ofstream out(path);
        out << "t,x1,x2,x3,x4\n";
        for (int i = 0; i <= 400; ++i) {
            const double t = i * 0.005;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", t,
                          std::sinh(t), std::cosh(t), std::sqrt(2.0) * std::cos(t),
                          std::sqrt(2.0) * std::sin(t));
            out << buf;
        }
    }
    const CurveSource c = load_sampled_csv(path);
    CHECK(c.kind() == CurveSource::Kind::SampledData);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    CHECK(u.tangent_character() == Causality::Spacelike);
    CHECK(u.length() == doctest::Approx(2.0).epsilon(1e-7));
    // interpolated second derivative close to the analytic one
    const Vec4 d2 = u.derivatives(1.0, 2)[1];
    CHECK(d2.x1 == doctest::Approx(std::sinh(1.0)).epsilon(1e-6));
    CHECK(d2.x2 == doctest::Approx(std::cosh(1.0)).epsilon(1e-6));
    std::remove(path.c_str());
}

TEST_CASE("sampled-data validation") {
    CHECK_THROWS_AS(load_sampled_csv("no_such_file.csv"), FileError);

    std::vector<double> ts{0, 1, 2};
    std::vector<Vec4> xs{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 2, 0, 0}};
    CHECK_THROWS_AS(CurveSource::from_samples("short", ts, xs), SpecValidationError);

    ts = {0, 1, 2, 3, 4, 5, 5, 7, 8, 9, 10};
    xs.assign(11, Vec4{0, 1, 0, 0});
    CHECK_THROWS_AS(CurveSource::from_samples("nonmono", ts, xs), SpecValidationError);
}

TEST_CASE("domain violations are reported") {
    const CurveSource c = expr_curve({"0", "cos(t)", "sin(t)", "0"}, 0, 1);
    CHECK_THROWS_AS(arclength(c, 0.0, 2.0), DomainError);
    const UnitSpeedCurve u = reparametrize_unit_speed(c);
    CHECK_THROWS_AS(u.derivatives(2.0, 2), DomainError);
    CHECK_THROWS_AS(u.derivatives(0.5, 0), DomainError);
}
