#include "mink/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace mink {
namespace {

// 15-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.0,
    0.2011940939974345223006283033946,
    0.3941513470775633698972073709810,
    0.5709721726085388475372267372539,
    0.7244177313601700474161860546139,
    0.8482065834104272162006483207742,
    0.9372733924007059043077589477102,
    0.9879925180204854284895657185866,
};
constexpr double kWeights[8] = {
    0.2025782419255612728806201999675,
    0.1984314853271115764561183264438,
    0.1861610000155622110268005618664,
    0.1662692058169939335532008604812,
    0.1395706779261543144478047945110,
    0.1071592204671719350118695466858,
    0.0703660474881081247092674164507,
    0.0307532419961172683546283935772,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = kWeights[0] * f(mid);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i];
        sum += kWeights[i] * (f(mid - dx) + f(mid + dx));
    }
    return sum * half;
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl15(f, a, mid);
    const double right = gl15(f, mid, b);
    const double delta = left + right - whole;
    // floor the budget at roundoff scale so subdivision terminates
    const double floor_tol = 16.0 * std::numeric_limits<double>::epsilon() *
                             (std::fabs(left) + std::fabs(right));
    if (std::fabs(delta) <= std::max(tol, floor_tol) || depth >= 40)
        return left + right;
    const double child_tol = std::max(0.5 * tol, floor_tol);
    return integrate_rec(f, a, mid, left, child_tol, depth + 1) +
           integrate_rec(f, mid, b, right, child_tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
    if (a == b) return 0.0;
    const double sign = (b >= a) ? 1.0 : -1.0;
    const double lo = std::min(a, b), hi = std::max(a, b);
    return sign * integrate_rec(f, lo, hi, gl15(f, lo, hi), abs_tol, 0);
}

double integrate_panel(const std::function<double(double)>& f, double a, double b) {
    if (a == b) return 0.0;
    return gl15(f, a, b);
}

double solve_monotone(const std::function<double(double)>& f,
                      const std::function<double(double)>& dfdx, double lo,
                      double hi) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo > 0.0 || fhi < 0.0)
        throw DomainError("root bracket does not straddle zero");

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fx > 0.0)
            hi = x;
        else
            lo = x;

        const double d = dfdx(x);
        double next = (d > 0.0) ? x - fx / d : std::numeric_limits<double>::quiet_NaN();
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);

        const double step = std::fabs(next - x);
        x = next;
        if (step <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(x)) ||
            hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(x)))
            return x;
    }
    return x;
}

}  // namespace mink
