#pragma once

// Shared test helpers: finite-difference oracles (kept independent of the
// library's symbolic derivative path), random generators, and small
// utilities. Oracles here are the reference implementations the library is
// checked against.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "mink/vec4.hpp"

namespace testsupport {

// Five-point central first derivative, error O(h^4).
inline double fd_derivative(const std::function<double(double)>& f, double x,
                            double h) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// Richardson-extrapolated central difference: combines h and h/2 stencils
// for an O(h^6) estimate. Used as the independent derivative oracle.
inline double fd_derivative_richardson(const std::function<double(double)>& f,
                                       double x, double h) {
    const double d1 = fd_derivative(f, x, h);
    const double d2 = fd_derivative(f, x, 0.5 * h);
    return d2 + (d2 - d1) / 15.0;
}

// Same, but reports whether the two stencils agree; points where the
// difference quotient has not converged (wild higher derivatives) are not
// usable as oracle values.
struct FdResult {
    double value = 0.0;
    bool converged = false;
};

inline FdResult fd_derivative_checked(const std::function<double(double)>& f,
                                      double x, double h) {
    const double d1 = fd_derivative(f, x, h);
    const double d2 = fd_derivative(f, x, 0.5 * h);
    FdResult r;
    r.value = d2 + (d2 - d1) / 15.0;
    r.converged = std::isfinite(d1) && std::isfinite(d2) &&
                  std::fabs(d1 - d2) <= 1e-7 * (1.0 + std::fabs(d2));
    return r;
}

inline mink::Vec4 fd_derivative(const std::function<mink::Vec4(double)>& f, double x,
                                double h) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// Five-point second derivative, error O(h^4).
inline mink::Vec4 fd_second_derivative(const std::function<mink::Vec4(double)>& f,
                                       double x, double h) {
    return (-1.0 * f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) -
            1.0 * f(x + 2 * h)) /
           (12 * h * h);
}

// Plain 4x4 determinant by Laplace expansion over the first row; the
// independent evaluator for cross-product checks.
inline double det4(const std::array<std::array<double, 4>, 4>& m) {
    auto det3 = [](double a, double b, double c, double d, double e, double f,
                   double g, double h, double i) {
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    };
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
        std::array<double, 9> sub{};
        int idx = 0;
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (c != j) sub[static_cast<std::size_t>(idx++)] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        const double minor = det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5],
                                  sub[6], sub[7], sub[8]);
        sum += ((j % 2 == 0) ? 1.0 : -1.0) * m[0][static_cast<std::size_t>(j)] * minor;
    }
    return sum;
}

inline std::array<double, 4> to_array(const mink::Vec4& v) {
    return {v.x1, v.x2, v.x3, v.x4};
}

inline mink::Vec4 random_vec(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace testsupport
