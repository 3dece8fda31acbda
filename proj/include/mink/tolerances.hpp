#pragma once

namespace mink {

/// Numeric thresholds threaded through the kernel. Defaults match the
/// documented contract; the CLI and spec documents may override them.
struct Tolerances {
    double eps_null = 1e-10;   // |<x,x>| at or below this is lightlike
    double eps_deg = 1e-9;     // curvature below this is degenerate
    double tol = 1e-6;         // classification / verification tolerance
    double fd_step = 1e-4;     // step for finite-difference residual checks
    double quad_tol = 1e-10;   // absolute quadrature tolerance
};

}  // namespace mink
