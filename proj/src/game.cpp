#include "nlg/game.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace nlg {

int Game::input_index(std::span<const int> x) const {
    if (static_cast<int>(x.size()) != n_players)
        throw shape_mismatch("input tuple has wrong arity");
    int idx = 0;
    for (int i = 0; i < n_players; ++i) {
        if (x[i] < 0 || x[i] >= input_sizes[i])
            throw shape_mismatch("input value out of range for player " + std::to_string(i + 1));
        idx = idx * input_sizes[i] + x[i];
    }
    return idx;
}

std::vector<int> Game::input_tuple(int index) const {
    std::vector<int> x(n_players);
    for (int i = n_players - 1; i >= 0; --i) {
        x[i] = index % input_sizes[i];
        index /= input_sizes[i];
    }
    return x;
}

int Game::input_weight(int index) const {
    int w = 0;
    for (int i = n_players - 1; i >= 0; --i) {
        w += index % input_sizes[i] != 0;
        index /= input_sizes[i];
    }
    return w;
}

Game make_game(int n_players, std::vector<int> input_sizes, std::string name,
               std::vector<std::int8_t> table) {
    if (n_players < 1) throw error("game needs at least one player");
    if (static_cast<int>(input_sizes.size()) != n_players)
        throw shape_mismatch("input_sizes must have one entry per player");
    std::size_t inputs = 1;
    for (int s : input_sizes) {
        if (s < 1) throw error("every input alphabet must be non-empty");
        inputs *= static_cast<std::size_t>(s);
    }
    const std::size_t expect = inputs << n_players;
    if (table.size() != expect)
        throw shape_mismatch("predicate table has " + std::to_string(table.size()) +
                             " entries, expected " + std::to_string(expect));
    for (std::int8_t v : table)
        if (v != 1 && v != -1) throw error("predicate entries must be +1 or -1");
    Game g;
    g.n_players = n_players;
    g.input_sizes = std::move(input_sizes);
    g.table = std::move(table);
    g.name = std::move(name);
    return g;
}

bool same_table(const Game& a, const Game& b) {
    return a.n_players == b.n_players && a.input_sizes == b.input_sizes && a.table == b.table;
}

XorGameView xor_view(const Game& g) {
    const int outs = g.num_outputs();
    XorGameView v;
    v.base = g;
    v.parity.resize(g.num_inputs());
    for (int x = 0; x < g.num_inputs(); ++x) {
        const std::int8_t even = g.value(x, 0);
        for (int a = 0; a < outs; ++a) {
            const std::int8_t want = (std::popcount(static_cast<unsigned>(a)) % 2 == 0)
                                         ? even
                                         : static_cast<std::int8_t>(-even);
            if (g.value(x, static_cast<unsigned>(a)) != want)
                throw not_xor_game("predicate on input " + std::to_string(x) +
                                   " does not depend only on the output parity");
        }
        v.parity[x] = even;
    }
    return v;
}

Game game_from_parity(int n_players, std::vector<int> input_sizes, std::string name,
                      const std::vector<std::int8_t>& parity) {
    Game shape;
    shape.n_players = n_players;
    shape.input_sizes = input_sizes;
    const int inputs = shape.num_inputs();
    if (static_cast<int>(parity.size()) != inputs)
        throw shape_mismatch("parity table size does not match the input space");
    const int outs = 1 << n_players;
    std::vector<std::int8_t> table(static_cast<std::size_t>(inputs) * outs);
    for (int x = 0; x < inputs; ++x)
        for (int a = 0; a < outs; ++a)
            table[static_cast<std::size_t>(x) * outs + a] =
                (std::popcount(static_cast<unsigned>(a)) % 2 == 0)
                    ? parity[x]
                    : static_cast<std::int8_t>(-parity[x]);
    return make_game(n_players, std::move(input_sizes), std::move(name), std::move(table));
}

SymmetricXorCoeffs symmetric_coeffs(const Game& g) {
    if (!g.binary_inputs()) throw not_binary_inputs("symmetric coefficients need binary inputs");
    XorGameView v = xor_view(g);
    SymmetricXorCoeffs c;
    c.n = g.n_players;
    c.c.assign(g.n_players + 1, 0);
    for (int x = 0; x < g.num_inputs(); ++x) {
        const int w = g.input_weight(x);
        if (c.c[w] == 0)
            c.c[w] = v.parity[x];
        else if (c.c[w] != v.parity[x])
            throw not_symmetric("winning parity differs inside Hamming-weight class " +
                                std::to_string(w));
    }
    return c;
}

Game game_from_symmetric_coeffs(const SymmetricXorCoeffs& c, std::string name) {
    if (static_cast<int>(c.c.size()) != c.n + 1)
        throw shape_mismatch("coefficient vector must have n+1 entries");
    std::vector<std::int8_t> parity(1u << c.n);
    for (unsigned x = 0; x < parity.size(); ++x)
        parity[x] = c.c[std::popcount(x)];
    return game_from_parity(c.n, std::vector<int>(c.n, 2), std::move(name), parity);
}

Distribution uniform_distribution(const Game& g) {
    Distribution d;
    d.w.assign(g.num_inputs(), rat(1, g.num_inputs()));
    return d;
}

Distribution point_mass(const Game& g, int input_index) {
    if (input_index < 0 || input_index >= g.num_inputs())
        throw shape_mismatch("point mass input out of range");
    Distribution d;
    d.w.assign(g.num_inputs(), Rat(0));
    d.w[input_index] = Rat(1);
    return d;
}

void validate_distribution(const Game& g, const Distribution& d) {
    if (static_cast<int>(d.w.size()) != g.num_inputs())
        throw shape_mismatch("distribution size does not match the input space");
    Rat sum(0);
    for (const Rat& p : d.w) {
        if (p < 0) throw error("distribution weights must be non-negative");
        sum += p;
    }
    if (sum != 1) throw error("distribution weights sum to " + rat_to_string(sum) + ", not 1");
}

SymmetricDistribution uniform_symmetric_distribution(int n) {
    SymmetricDistribution s;
    s.p.resize(n + 1);
    double binom = 1.0;
    const double scale = std::pow(0.5, n);
    for (int i = 0; i <= n; ++i) {
        s.p[i] = binom * scale;
        binom = binom * (n - i) / (i + 1);
    }
    return s;
}

std::vector<double> expand_symmetric(const SymmetricDistribution& p) {
    const int n = static_cast<int>(p.p.size()) - 1;
    std::vector<double> binom(n + 1, 1.0);
    for (int i = 1; i <= n; ++i) binom[i] = binom[i - 1] * (n - i + 1) / i;
    std::vector<double> pi(1u << n);
    for (unsigned x = 0; x < pi.size(); ++x) {
        const int w = std::popcount(x);
        pi[x] = p.p[w] / binom[w];
    }
    return pi;
}

SymmetricDistribution aggregate_symmetric(const Game& g, const Distribution& d) {
    if (!g.binary_inputs()) throw not_binary_inputs("symmetric aggregation needs binary inputs");
    validate_distribution(g, d);
    const int n = g.n_players;
    std::vector<Rat> per_input(n + 1);
    std::vector<bool> seen(n + 1, false);
    for (int x = 0; x < g.num_inputs(); ++x) {
        const int w = g.input_weight(x);
        if (!seen[w]) {
            per_input[w] = d.w[x];
            seen[w] = true;
        } else if (per_input[w] != d.w[x]) {
            throw not_symmetric("distribution is not constant on Hamming-weight class " +
                                std::to_string(w));
        }
    }
    SymmetricDistribution s;
    s.p.resize(n + 1);
    Int binom;
    for (int w = 0; w <= n; ++w) {
        mpz_bin_uiui(binom.get_mpz_t(), n, w);
        s.p[w] = to_double(per_input[w] * Rat(binom));
    }
    return s;
}

std::uint64_t strategy_bits(const Game& g) {
    std::uint64_t bits = 0;
    for (int s : g.input_sizes) bits += static_cast<std::uint64_t>(s);
    return bits;
}

DeterministicStrategy strategy_from_encoding(const Game& g, std::uint64_t enc) {
    DeterministicStrategy s;
    s.tables.resize(g.n_players);
    std::uint64_t off = 0;
    for (int i = 0; i < g.n_players; ++i) {
        s.tables[i].resize(g.input_sizes[i]);
        for (int k = 0; k < g.input_sizes[i]; ++k)
            s.tables[i][k] = static_cast<std::uint8_t>((enc >> (off + k)) & 1u);
        off += g.input_sizes[i];
    }
    return s;
}

std::uint64_t strategy_encoding(const Game& g, const DeterministicStrategy& s) {
    if (static_cast<int>(s.tables.size()) != g.n_players)
        throw shape_mismatch("strategy has wrong number of players");
    std::uint64_t enc = 0, off = 0;
    for (int i = 0; i < g.n_players; ++i) {
        if (static_cast<int>(s.tables[i].size()) != g.input_sizes[i])
            throw shape_mismatch("strategy table for player " + std::to_string(i + 1) +
                                 " does not cover the alphabet");
        for (int k = 0; k < g.input_sizes[i]; ++k) {
            if (s.tables[i][k] > 1) throw error("strategy responses must be bits");
            enc |= static_cast<std::uint64_t>(s.tables[i][k]) << (off + k);
        }
        off += g.input_sizes[i];
    }
    return enc;
}

unsigned strategy_response(const Game& g, const DeterministicStrategy& s, int input_index) {
    const std::vector<int> x = g.input_tuple(input_index);
    unsigned mask = 0;
    for (int i = 0; i < g.n_players; ++i)
        mask |= static_cast<unsigned>(s.tables[i][x[i]]) << i;
    return mask;
}

std::int8_t deterministic_value(const Game& g, const DeterministicStrategy& s, int input_index) {
    return g.value(input_index, strategy_response(g, s, input_index));
}

MixedStrategy normalize_mixed(const Game& g, MixedStrategy s) {
    std::map<std::uint64_t, Rat> merged;
    Rat sum(0);
    for (auto& [w, strat] : s.atoms) {
        if (w < 0) throw error("mixed strategy weights must be non-negative");
        merged[strategy_encoding(g, strat)] += w;
        sum += w;
    }
    if (sum != 1) throw error("mixed strategy weights sum to " + rat_to_string(sum) + ", not 1");
    MixedStrategy out;
    for (auto& [enc, w] : merged)
        if (w != 0) out.atoms.emplace_back(w, strategy_from_encoding(g, enc));
    return out;
}

Rat mixed_value_on_input(const Game& g, const MixedStrategy& s, int input_index) {
    Rat v(0);
    for (const auto& [w, strat] : s.atoms)
        v += w * Rat(static_cast<long>(deterministic_value(g, strat, input_index)));
    return v;
}

Rat value_of_mixed(const Game& g, const MixedStrategy& s, const Distribution& d) {
    validate_distribution(g, d);
    Rat v(0);
    for (int x = 0; x < g.num_inputs(); ++x)
        if (d.w[x] != 0) v += d.w[x] * mixed_value_on_input(g, s, x);
    return v;
}

} // namespace nlg
