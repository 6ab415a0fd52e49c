#pragma once

#include <cstdint>
#include <vector>

namespace nlg {

// Unit vectors realizing two-player XOR correlations: the inner product
// (u_x, v_y) is the expected output-parity correlation on input (x, y).
struct VectorStrategy {
    int d = 0;
    std::vector<std::vector<double>> u; // one unit vector per row input
    std::vector<std::vector<double>> v; // one unit vector per column input
};

struct AscentOptions {
    int restarts = 8;
    int max_iters = 2000;
    double improve_tol = 1e-10;
    int threads = 1; // restarts run concurrently; the merge is deterministic
};

struct AscentResult {
    double value = 0.0;
    VectorStrategy vectors;
    bool degenerate = false;     // all-zero objective matrix
    std::vector<double> trace;   // objective after each sweep of the best restart
};

// Maximizes sum_{x,y} G[x][y] (u_x, v_y) by alternating closed-form updates:
// each u_x is set to the normalized weighted sum of the v's, then
// symmetrically. The result is a certified lower bound on the best value
// over unit vectors of any dimension.
AscentResult alternating_ascent(const std::vector<std::vector<double>>& G, int d,
                                std::uint64_t seed, const AscentOptions& opt = {});

} // namespace nlg
