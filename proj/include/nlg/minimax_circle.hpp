#pragma once

#include <vector>

#include "nlg/circle.hpp"
#include "nlg/game.hpp"

namespace nlg {

struct MinimaxOptions {
    double tol = 1e-6;   // target width of the [lower, upper] bracket
    int rotations = 64;  // rotation fan added per fresh circle point
    int grid = 4096;     // circle scan resolution for the separation step
    int max_outer = 10000;
};

struct MinimaxResult {
    double lower = 0.0;  // exact-LP lower bound on the minimax value
    double upper = 0.0;  // circle maximum achieved by the returned distribution
    SymmetricDistribution dist;
    std::vector<CirclePoint> support; // near-active circle points under dist
    bool converged = false;
    int iterations = 0;
};

// min over weight-class distributions p of max_{|z|=1} |sum_i p_i c_i z^i|,
// computed by a cutting-plane loop: an exact zero-sum LP over a growing set
// of (circle point, rotation) cuts supplies lower bounds and candidate
// distributions, and the circle maximizer supplies violated points until the
// bracket closes below tol.
MinimaxResult minimax_circle(const SymmetricXorCoeffs& c, const MinimaxOptions& opt = {});

} // namespace nlg
