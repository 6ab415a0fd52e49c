#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlg/game.hpp"

namespace nlg {

// CHSH: 2 players, binary inputs, win iff a xor b == x and y.
Game build_chsh();

// Mermin-Ardehali: n >= 2 players, binary inputs; the answers' XOR must be 0
// when sum(x) mod 4 is 0 or 1, and 1 when it is 2 or 3.
Game build_ma(int n);

// EQUAL-EQUAL: 2 players, inputs 1..m (0..m-1 internally), win iff
// (x == y) == (a == b). Requires m >= 2.
Game build_ee(int m);

// n-party AND: binary inputs, win iff xor(a) == and(x). Requires n >= 1.
Game build_nand(int n);

// n-party MAJORITY: binary inputs, win iff xor(a) == [at least half of x set].
Game build_nmaj(int n);

// OR-AND: 2 players, binary inputs, win iff (x or y) == (a and b).
Game build_or_and();

struct BuiltinInfo {
    std::string id;
    bool takes_param;
    int min_param;
    std::string summary;
    std::function<Game(int)> make; // param ignored when takes_param is false
};

const std::vector<BuiltinInfo>& builtin_registry();

// Throws error for unknown ids or out-of-range parameters.
Game make_builtin(const std::string& id, std::optional<int> param);

// Identifies a game whose predicate table coincides with a builtin, searching
// in registry order (so the CHSH table reports as "chsh", not "nand 2").
std::optional<std::pair<std::string, std::optional<int>>> match_builtin(const Game& g);

} // namespace nlg
