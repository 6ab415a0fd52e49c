#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nlg/game.hpp"

namespace nlg {

enum class ClassicalMethod { enumeration, lp, closed_form };

struct ClassicalReport {
    Rat value;
    Rat win_prob;
    MixedStrategy strategy;                      // optimal (mixed) strategy certificate
    std::optional<Distribution> worst_distribution; // worst-case mode only
    ClassicalMethod method = ClassicalMethod::enumeration;
    std::string note;
};

struct EnumerationOptions {
    std::uint64_t strategy_cap = std::uint64_t{1} << 20;
    std::uint64_t input_cap = std::uint64_t{1} << 16;
    int threads = 1;
};

// Exact maximum over all deterministic strategies for a fixed distribution.
// Ties resolve to the lexicographically smallest strategy encoding.
ClassicalReport classical_fixed(const Game& g, const Distribution& pi,
                                const EnumerationOptions& opt = {});

// Value of the best strategy enumeration without the certificate bookkeeping.
Rat max_deterministic_value(const Game& g, const Distribution& pi,
                            const EnumerationOptions& opt = {});

// Worst-case value over referee distributions: builds the full
// (strategies x inputs) sign matrix and solves the zero-sum LP exactly.
// The row mix is the optimal mixed strategy, the column mix the worst
// distribution.
ClassicalReport classical_worst(const Game& g, const EnumerationOptions& opt = {});

// Closed-form worst-case classical values. MA games with an odd player count
// yield an interval; its lower endpoint is irrational, so only the upper
// endpoint is exact.
struct ClosedFormClassical {
    std::optional<Rat> exact;    // single exact value
    std::optional<Rat> exact_hi; // exact upper endpoint when interval-valued
    double lo = 0.0;
    double hi = 0.0;
    std::string note;
};
ClosedFormClassical closed_form_classical(const std::string& game_id, int param);

// The four CHSH strategies that each lose on exactly one input, at weight 1/4.
MixedStrategy chsh_mix();

// EQUAL-EQUAL mix: constant-unequal strategy with probability p, remainder
// uniform over all balanced-split strategies.
MixedStrategy ee_mix(int m);

// Distribution with weight alpha on diagonal inputs and beta off-diagonal,
// at the worst-case parameter values.
Distribution ee_worst_dist(int m);

// n-party AND mix: the all-zeros strategy plus the odd-identity class.
MixedStrategy nand_mix(int n);

// Worst distribution concentrating on the all-ones input.
Distribution nand_worst_dist(int n);

} // namespace nlg
