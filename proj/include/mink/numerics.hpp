#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "mink/errors.hpp"

namespace mink {

/// Adaptive Gauss-Legendre quadrature with interval bisection.
/// The 15-point rule is compared against its two-panel refinement; panels
/// are split until the difference falls below the local tolerance budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

/// Single 15-point Gauss-Legendre panel, no refinement. Exact to roundoff
/// for smooth integrands on short intervals.
double integrate_panel(const std::function<double(double)>& f, double a, double b);

/// Find x in [lo, hi] with f(x) = 0 for strictly monotone f, by a
/// bracket-preserving Newton iteration with bisection fallback. Iterates to
/// machine-level tolerance; `dfdx` must be positive on the bracket.
double solve_monotone(const std::function<double(double)>& f,
                      const std::function<double(double)>& dfdx, double lo,
                      double hi);

}  // namespace mink
