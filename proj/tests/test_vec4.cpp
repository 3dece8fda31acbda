#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mink/vec4.hpp"
#include "support.hpp"

using namespace mink;
using testsupport::det4;
using testsupport::random_vec;
using testsupport::to_array;

TEST_CASE("pseudo dot follows the (-,+,+,+) signature") {
    CHECK(pseudo_dot(basis_e1, basis_e1) == -1.0);
    CHECK(pseudo_dot(basis_e2, basis_e2) == 1.0);
    CHECK(pseudo_dot(basis_e3, basis_e3) == 1.0);
    CHECK(pseudo_dot(basis_e4, basis_e4) == 1.0);
    CHECK(pseudo_dot({1, 2, 0, 0}, {3, 1, 0, 0}) == -1.0);
}

TEST_CASE("pseudo dot is symmetric and bilinear") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const Vec4 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
        const double a = u(rng), b = u(rng);
        CHECK(pseudo_dot(x, y) == pseudo_dot(y, x));  // term-by-term identical
        CHECK(pseudo_dot(a * x + b * y, z) ==
              doctest::Approx(a * pseudo_dot(x, z) + b * pseudo_dot(y, z))
                  .epsilon(1e-12));
    }
}

TEST_CASE("pseudo norm") {
    CHECK(pseudo_norm({1, 0, 0, 0}) == 1.0);
    CHECK(pseudo_norm({1, 1, 0, 0}) == 0.0);  // lightlike
    CHECK(pseudo_norm({1, 2, 2, 0}) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-15));
}

TEST_CASE("causal classification carries the quadratic form") {
    const double eps = 1e-10;
    CHECK(causal_character({0, 1, 0, 0}, eps).kind == Causality::Spacelike);
    CHECK(causal_character({1, 0, 0, 0}, eps).kind == Causality::Timelike);
    CHECK(causal_character({1, 1, 0, 0}, eps).kind == Causality::Lightlike);
    CHECK(causal_character({1, 2, 0, 0}, eps).quadratic_form == 3.0);
}

TEST_CASE("triple cross of the spatial basis") {
    const Vec4 r = triple_cross(basis_e2, basis_e3, basis_e4);
    CHECK(r == Vec4{-1, 0, 0, 0});
}

TEST_CASE("triple cross with a repeated argument vanishes") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const Vec4 x = random_vec(rng), y = random_vec(rng);
        CHECK(euclid_norm(triple_cross(x, x, y)) == 0.0);
    }
}

TEST_CASE("triple cross is pseudo-orthogonal to its arguments") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        const Vec4 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
        const Vec4 r = triple_cross(a, b, c);
        const double scale =
            1e-9 * std::max(1.0, euclid_norm(a) * euclid_norm(b) * euclid_norm(c));
        CHECK(std::fabs(pseudo_dot(r, a)) < scale);
        CHECK(std::fabs(pseudo_dot(r, b)) < scale);
        CHECK(std::fabs(pseudo_dot(r, c)) < scale);
    }
}

TEST_CASE("triple cross antisymmetry in the first two arguments is exact") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        const Vec4 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
        CHECK(triple_cross(a, b, c) == -triple_cross(b, a, c));
    }
}

TEST_CASE("pairing the cross product against a fourth vector is a determinant") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const Vec4 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
        const Vec4 y = random_vec(rng);
        const double det =
            det4({to_array(y), to_array(a), to_array(b), to_array(c)});
        CHECK(pseudo_dot(triple_cross(a, b, c), y) ==
              doctest::Approx(det).epsilon(1e-10));
    }
}

TEST_CASE("homothety") {
    CHECK(apply_homothety({1, 2, 3, 4}, 2.0) == Vec4{2, 4, 6, 8});
    CHECK(apply_homothety({1, 0, 0, 0}, 1.0) == Vec4{1, 0, 0, 0});
    CHECK_THROWS_AS(apply_homothety({1, 0, 0, 0}, 0.0), ZeroScale);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const Vec4 x = random_vec(rng);
        const double lambda = u(rng);
        if (lambda == 0.0) continue;
        CHECK(pseudo_norm(apply_homothety(x, lambda)) ==
              doctest::Approx(std::fabs(lambda) * pseudo_norm(x)).epsilon(1e-12));
    }
}
