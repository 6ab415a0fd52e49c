#pragma once

#include <cstdint>
#include <vector>

#include "nlg/rational.hpp"

namespace nlg {

// Minimax solution of a finite zero-sum matrix game. Rows maximize, columns
// minimize. Both certificate mixes verify exactly against the payoff matrix:
// row_mix guarantees >= value on every column, col_mix <= value on every row.
struct ZeroSumSolution {
    Rat value;
    std::vector<Rat> row_mix;
    std::vector<Rat> col_mix;
    long pivots = 0;
};

// Exact-rational simplex (two phases, revised form with an integer basis
// inverse). Anti-cycling is enforced by switching to Bland's rule whenever
// the objective stalls.
ZeroSumSolution solve_zero_sum(const std::vector<std::vector<Rat>>& payoff);

// Same game given as payoff[i][j] = ints[i*cols + j] / denom with denom > 0.
// Entries must stay below 2^61 in magnitude.
ZeroSumSolution solve_zero_sum_scaled(std::size_t rows, std::size_t cols,
                                      const std::int8_t* ints, const Int& denom);
ZeroSumSolution solve_zero_sum_scaled(std::size_t rows, std::size_t cols,
                                      const std::int64_t* ints, const Int& denom);

} // namespace nlg
