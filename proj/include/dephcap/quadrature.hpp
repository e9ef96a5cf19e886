// quadrature.hpp — Composite Gauss-Legendre integration with oscillation-aware
// panels and refinement-to-tolerance, for the bath spectral integrals.

#pragma once

#include <functional>

namespace dephcap {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    // Highest angular frequency present in the integrand; panels are sized
    // to resolve half a period. Zero means a smooth, non-oscillatory integrand.
    double max_frequency = 0.0;
    // Smoothness scale of the non-oscillatory part; panels never exceed half
    // of it.
    double smooth_scale = 1.0;
    int max_refinements = 8;
};

// Integrate f on [a, b]: 15-point Gauss-Legendre per panel, panel widths
// halved until two successive composites agree within abs_tol. Throws
// std::runtime_error if the refinement cap is hit without convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opts = {});

} // namespace dephcap
