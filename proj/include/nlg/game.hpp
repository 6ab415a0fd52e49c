#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlg/errors.hpp"
#include "nlg/rational.hpp"

namespace nlg {

// A cooperative multi-player game with binary outputs. The referee's
// predicate is stored as a dense table of +1/-1 values so that exact
// enumeration, hashing and table comparison are trivial.
//
// Input tuples are flattened row-major (player 0 most significant); output
// tuples are bit masks with player i at bit i. All indices are 0-based
// internally; user-facing text (files, CLI) is 1-based.
struct Game {
    int n_players = 0;
    std::vector<int> input_sizes;     // |X_i|, one per player
    std::vector<std::int8_t> table;   // [input_index * 2^n + output_mask] -> +1/-1
    std::string name;

    int num_inputs() const {
        int p = 1;
        for (int s : input_sizes) p *= s;
        return p;
    }
    int num_outputs() const { return 1 << n_players; }

    std::int8_t value(int input_index, unsigned output_mask) const {
        return table[static_cast<std::size_t>(input_index) * num_outputs() + output_mask];
    }

    bool binary_inputs() const {
        for (int s : input_sizes)
            if (s != 2) return false;
        return true;
    }

    int input_index(std::span<const int> x) const;
    std::vector<int> input_tuple(int index) const;
    // Hamming weight of an input tuple; meaningful for binary inputs.
    int input_weight(int index) const;
};

// Validates player count, alphabet sizes and the +1/-1 totality of the table.
Game make_game(int n_players, std::vector<int> input_sizes, std::string name,
               std::vector<std::int8_t> table);

bool same_table(const Game& a, const Game& b);

// XOR game view: V(a|x) = parity[x] * (-1)^(a_1 xor ... xor a_n),
// i.e. parity[x] is the predicate value on the all-zeros output.
struct XorGameView {
    Game base;
    std::vector<std::int8_t> parity; // per input index, +1/-1
};

// Throws not_xor_game unless every input has exactly one winning parity.
XorGameView xor_view(const Game& g);

// Rebuilds the full predicate table from a parity table.
Game game_from_parity(int n_players, std::vector<int> input_sizes, std::string name,
                      const std::vector<std::int8_t>& parity);

// Winning-parity signs of a symmetric XOR game with binary inputs, indexed by
// the Hamming weight of the input tuple.
struct SymmetricXorCoeffs {
    int n = 0;
    std::vector<std::int8_t> c; // size n+1, values +1/-1
};

SymmetricXorCoeffs symmetric_coeffs(const Game& g);

// Inverse of symmetric_coeffs up to table reconstruction.
Game game_from_symmetric_coeffs(const SymmetricXorCoeffs& c, std::string name);

// Referee input distribution, exact rational weights over flattened inputs.
struct Distribution {
    std::vector<Rat> w;
};

Distribution uniform_distribution(const Game& g);
Distribution point_mass(const Game& g, int input_index);
// Throws shape_mismatch / error unless sizes match, weights are >= 0 and sum
// to exactly 1.
void validate_distribution(const Game& g, const Distribution& d);

// Total probability per Hamming-weight class of a symmetric binary-input
// game. Numeric (binary64): the quantum pipeline consumes these, and the
// constructions that need them have irrational weights.
struct SymmetricDistribution {
    std::vector<double> p; // size n+1
};

SymmetricDistribution uniform_symmetric_distribution(int n);
// pi(x) = p_{|x|} / C(n,|x|), flattened over 2^n binary input tuples.
std::vector<double> expand_symmetric(const SymmetricDistribution& p);
// Aggregates an exact distribution on a binary-input game into per-weight
// totals; fails with not_symmetric if weights differ inside a class.
SymmetricDistribution aggregate_symmetric(const Game& g, const Distribution& d);

// One response table per player.
struct DeterministicStrategy {
    std::vector<std::vector<std::uint8_t>> tables;
};

// Strategies are encoded as integers by concatenating the response tables
// (player 0's table in the low bits), so increasing encoding order is a
// stable enumeration order.
std::uint64_t strategy_bits(const Game& g);
DeterministicStrategy strategy_from_encoding(const Game& g, std::uint64_t enc);
std::uint64_t strategy_encoding(const Game& g, const DeterministicStrategy& s);

// Output mask produced by a deterministic strategy on a flattened input.
unsigned strategy_response(const Game& g, const DeterministicStrategy& s, int input_index);
std::int8_t deterministic_value(const Game& g, const DeterministicStrategy& s, int input_index);

// Convex mix of deterministic strategies (shared randomness).
struct MixedStrategy {
    std::vector<std::pair<Rat, DeterministicStrategy>> atoms;
};

// Merges duplicate strategies and checks exact weight normalization.
MixedStrategy normalize_mixed(const Game& g, MixedStrategy s);

// Game value omega = P[win] - P[lose] of a mixed strategy on one input.
Rat mixed_value_on_input(const Game& g, const MixedStrategy& s, int input_index);

// Exact omega under a distribution; win probability is (1 + omega) / 2.
Rat value_of_mixed(const Game& g, const MixedStrategy& s, const Distribution& d);

inline Rat win_probability(const Rat& omega) { return (Rat(1) + omega) / 2; }

} // namespace nlg
