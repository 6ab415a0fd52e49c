#pragma once

#include <complex>
#include <span>
#include <vector>

namespace nlg {

struct CirclePoint {
    double theta = 0.0;   // radians in [0, 2*pi)
    double modulus = 0.0; // |sum_k gamma_k e^{i k theta}|
};

struct CircleOptions {
    int grid = 4096;   // uniform scan resolution
    double tol = 1e-9; // absolute tolerance on the returned modulus
};

// Global maximum of |sum_k gamma_k z^k| over the unit circle: a uniform grid
// scan followed by golden-section refinement of every locally maximal arc.
CirclePoint max_modulus_on_circle(std::span<const std::complex<double>> gamma,
                                  const CircleOptions& opt = {});

double circle_modulus(std::span<const std::complex<double>> gamma, double theta);

} // namespace nlg
