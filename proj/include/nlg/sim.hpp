#pragma once

#include <cstdint>
#include <variant>

#include "nlg/ascent.hpp"
#include "nlg/game.hpp"
#include "nlg/noshared.hpp"

namespace nlg {

struct SimulationResult {
    std::uint64_t rounds = 0;
    std::uint64_t wins = 0;
    double empirical_value = 0.0; // 2 * wins / rounds - 1
    double standard_error = 0.0;  // sqrt((1 - v^2) / rounds)
    std::uint64_t seed = 0;
};

using AnyStrategy = std::variant<MixedStrategy, ProductStrategy, VectorStrategy>;

// Monte Carlo referee: draws inputs from pi, samples responses per strategy
// semantics and tallies the predicate. Bit-reproducible for a given seed;
// vector strategies are limited to two-player XOR games, where the response
// parity follows P[a xor b = 0 | x, y] = (1 + (u_x, v_y)) / 2.
SimulationResult simulate(const Game& g, const AnyStrategy& strategy, const Distribution& pi,
                          std::uint64_t rounds, std::uint64_t seed);

} // namespace nlg
