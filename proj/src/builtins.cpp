#include "nlg/builtins.hpp"

#include <bit>

namespace nlg {

namespace {

// Builds a game from a per-input winning-parity predicate.
template <typename ParityFn>
Game xor_game(int n_players, std::vector<int> sizes, std::string name, ParityFn win_parity) {
    Game shape;
    shape.n_players = n_players;
    shape.input_sizes = sizes;
    std::vector<std::int8_t> parity(shape.num_inputs());
    for (int idx = 0; idx < shape.num_inputs(); ++idx) {
        const std::vector<int> x = shape.input_tuple(idx);
        parity[idx] = win_parity(x) ? -1 : 1; // parity[x] = V(all-zeros | x)
    }
    return game_from_parity(n_players, std::move(sizes), std::move(name), parity);
}

} // namespace

Game build_chsh() {
    return xor_game(2, {2, 2}, "chsh",
                    [](const std::vector<int>& x) { return (x[0] & x[1]) != 0; });
}

Game build_ma(int n) {
    if (n < 2) throw error("ma game needs n >= 2 players");
    return xor_game(n, std::vector<int>(n, 2), "ma" + std::to_string(n),
                    [](const std::vector<int>& x) {
                        int sum = 0;
                        for (int b : x) sum += b;
                        return sum % 4 >= 2;
                    });
}

Game build_ee(int m) {
    if (m < 2) throw error("ee game needs m >= 2 input values");
    // win iff (x == y) == (a == b); a == b is parity 0.
    return xor_game(2, {m, m}, "ee" + std::to_string(m),
                    [](const std::vector<int>& x) { return x[0] != x[1]; });
}

Game build_nand(int n) {
    if (n < 1) throw error("nand game needs n >= 1 players");
    return xor_game(n, std::vector<int>(n, 2), "nand" + std::to_string(n),
                    [n](const std::vector<int>& x) {
                        for (int b : x)
                            if (!b) return false;
                        return true;
                    });
}

Game build_nmaj(int n) {
    if (n < 1) throw error("nmaj game needs n >= 1 players");
    return xor_game(n, std::vector<int>(n, 2), "nmaj" + std::to_string(n),
                    [n](const std::vector<int>& x) {
                        int ones = 0;
                        for (int b : x) ones += b;
                        return 2 * ones >= n;
                    });
}

Game build_or_and() {
    // Not an XOR game: win iff (x or y) == (a and b).
    const int outs = 4;
    std::vector<std::int8_t> table(4 * outs);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int mask = 0; mask < outs; ++mask) {
                const int a = mask & 1, b = (mask >> 1) & 1;
                const bool win = ((x | y) != 0) == ((a & b) != 0);
                table[static_cast<std::size_t>((x * 2 + y)) * outs + mask] = win ? 1 : -1;
            }
    return make_game(2, {2, 2}, "orand", std::move(table));
}

const std::vector<BuiltinInfo>& builtin_registry() {
    static const std::vector<BuiltinInfo> reg = {
        {"chsh", false, 0, "CHSH game: a xor b == x and y", [](int) { return build_chsh(); }},
        {"orand", false, 0, "OR-AND game: x or y == a and b", [](int) { return build_or_and(); }},
        {"ee", true, 2, "EQUAL-EQUAL game on m input values", [](int m) { return build_ee(m); }},
        {"ma", true, 2, "Mermin-Ardehali game on n players", [](int n) { return build_ma(n); }},
        {"nand", true, 1, "n-party AND game", [](int n) { return build_nand(n); }},
        {"nmaj", true, 1, "n-party MAJORITY game", [](int n) { return build_nmaj(n); }},
    };
    return reg;
}

Game make_builtin(const std::string& id, std::optional<int> param) {
    for (const BuiltinInfo& b : builtin_registry()) {
        if (b.id != id) continue;
        if (b.takes_param != param.has_value())
            throw error(b.takes_param ? "builtin '" + id + "' needs a parameter"
                                      : "builtin '" + id + "' takes no parameter");
        return b.make(param.value_or(0));
    }
    throw error("unknown builtin game '" + id + "'");
}

std::optional<std::pair<std::string, std::optional<int>>> match_builtin(const Game& g) {
    for (const BuiltinInfo& b : builtin_registry()) {
        std::optional<int> param;
        if (b.takes_param) {
            if (b.id == "ee") {
                if (g.n_players != 2 || g.input_sizes[0] != g.input_sizes[1]) continue;
                param = g.input_sizes[0];
            } else {
                if (!g.binary_inputs()) continue;
                param = g.n_players;
            }
            if (*param < b.min_param) continue;
        } else if (g.n_players != 2 || !g.binary_inputs()) {
            continue;
        }
        try {
            if (same_table(g, b.make(param.value_or(0)))) return std::make_pair(b.id, param);
        } catch (const error&) {
            continue;
        }
    }
    return std::nullopt;
}

} // namespace nlg
