#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nlg/game.hpp"

namespace nlg {

// Independent per-player randomized responses: q[i][x] is the probability
// that player i answers 1 on input x. No shared randomness.
struct ProductStrategy {
    std::vector<std::vector<double>> q;
};

void validate_product(const Game& g, const ProductStrategy& s);

// Exact expectation of the predicate over independent responses on one
// input; win probability is (1 + value) / 2.
double product_value(const Game& g, const ProductStrategy& s, int input_index);
double product_value(const Game& g, const ProductStrategy& s, std::span<const int> x);

// Rounds every response probability above 1/2 to 1 and the rest to 0.
ProductStrategy round_product(const ProductStrategy& s);

// Two-player XOR games without shared randomness are all-or-nothing: either
// some deterministic strategy wins every input, or no strategy wins more
// than half. Decided by 2-coloring the parity-labeled input graph.
struct XorDichotomy {
    bool perfect = false;
    std::optional<DeterministicStrategy> strategy; // verified winner when perfect
};

XorDichotomy xor_dichotomy(const Game& g);

struct ProductWorstOptions {
    int grid = 200;        // first-player probability grid resolution
    int refine_rounds = 40;
    int threads = 1;       // grid cells scan concurrently, merge deterministic
};

struct ProductWorstResult {
    double value = 0.0;        // best min-over-inputs game value found
    ProductStrategy strategy;
    std::optional<double> exact_value;          // algebraic value when recognized
    std::optional<ProductStrategy> exact_strategy;
};

// Maximizes the minimum win probability over inputs for two-player
// binary-input games. The first player's two probabilities are searched on a
// grid with golden-section refinement; the second player's best response is
// exact (piecewise-linear maximization per input).
ProductWorstResult product_worst(const Game& g, const ProductWorstOptions& opt = {});

} // namespace nlg
