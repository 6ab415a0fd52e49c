#include "nlg/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "nlg/builtins.hpp"

namespace nlg {

namespace {

struct Line {
    int number; // 1-based
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(ParseErrorKind kind, const Line& line, int column, const std::string& msg) {
    throw parse_error(kind, line.number, column, msg);
}

int parse_int(const Line& line, int column, const std::string& tok, const std::string& what) {
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        fail(ParseErrorKind::syntax, line, column, "expected " + what + ", got '" + tok + "'");
    return v;
}

Rat parse_weight(const Line& line, int column, const std::string& tok) {
    const auto q = parse_rational(tok);
    if (!q)
        fail(ParseErrorKind::syntax, line, column,
             "expected a rational p/q (decimals are not accepted), got '" + tok + "'");
    if (*q < 0)
        fail(ParseErrorKind::value_out_of_range, line, column, "weights must be non-negative");
    return *q;
}

// Reads the n 1-based input values opening a row; returns the flat index.
int parse_input_tuple(const Game& shape, const Line& line, std::size_t first) {
    const int n = shape.n_players;
    if (line.tokens.size() < first + n)
        fail(ParseErrorKind::arity_mismatch, line, 0,
             "expected " + std::to_string(n) + " input values");
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) {
        const int v = parse_int(line, static_cast<int>(first + i + 1), line.tokens[first + i],
                                "an input value");
        if (v < 1 || v > shape.input_sizes[i])
            fail(ParseErrorKind::value_out_of_range, line, static_cast<int>(first + i + 1),
                 "input value " + std::to_string(v) + " outside 1.." +
                     std::to_string(shape.input_sizes[i]));
        x[i] = v - 1;
    }
    return shape.input_index(x);
}

} // namespace

GameDocument parse_game(const std::string& text) {
    const std::vector<Line> lines = tokenize(text);
    std::size_t at = 0;
    auto expect_keyword = [&](const std::string& kw) -> const Line& {
        if (at >= lines.size())
            throw parse_error(ParseErrorKind::syntax, lines.empty() ? 1 : lines.back().number, 0,
                              "missing '" + kw + "' line");
        const Line& line = lines[at];
        if (line.tokens[0] != kw)
            fail(ParseErrorKind::syntax, line, 1, "expected '" + kw + "', got '" + line.tokens[0] + "'");
        ++at;
        return line;
    };

    const Line& game_line = expect_keyword("game");
    if (game_line.tokens.size() != 2)
        fail(ParseErrorKind::syntax, game_line, 0, "usage: game <name>");
    const std::string name = game_line.tokens[1];

    const Line& players_line = expect_keyword("players");
    if (players_line.tokens.size() != 2)
        fail(ParseErrorKind::syntax, players_line, 0, "usage: players <n>");
    const int n = parse_int(players_line, 2, players_line.tokens[1], "a player count");
    if (n < 1) fail(ParseErrorKind::value_out_of_range, players_line, 2, "players must be >= 1");

    const Line& inputs_line = expect_keyword("inputs");
    if (static_cast<int>(inputs_line.tokens.size()) != n + 1)
        fail(ParseErrorKind::arity_mismatch, inputs_line, 0,
             "expected one alphabet size per player");
    std::vector<int> sizes(n);
    for (int i = 0; i < n; ++i) {
        sizes[i] = parse_int(inputs_line, i + 2, inputs_line.tokens[i + 1], "an alphabet size");
        if (sizes[i] < 1)
            fail(ParseErrorKind::value_out_of_range, inputs_line, i + 2,
                 "alphabet sizes must be >= 1");
    }

    Game shape;
    shape.n_players = n;
    shape.input_sizes = sizes;
    const int inputs = shape.num_inputs();
    const int outs = shape.num_outputs();

    std::optional<Game> builtin_game;
    std::vector<std::int8_t> parity(inputs, 0);
    std::vector<bool> parity_set(inputs, false);
    bool any_win = false;
    std::vector<std::int8_t> table(static_cast<std::size_t>(inputs) * outs, 0);
    std::vector<bool> table_set(static_cast<std::size_t>(inputs) * outs, false);
    bool any_table = false;

    std::vector<Rat> dist_w(inputs, Rat(0));
    std::vector<bool> dist_set(inputs, false);
    bool any_dist = false;
    MixedStrategy strategy;

    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        const std::string& kw = line.tokens[0];
        if (kw == "builtin") {
            if (builtin_game || any_win || any_table)
                fail(ParseErrorKind::syntax, line, 1, "conflicting predicate definitions");
            if (line.tokens.size() < 2 || line.tokens.size() > 3)
                fail(ParseErrorKind::syntax, line, 0, "usage: builtin <id> [param]");
            std::optional<int> param;
            if (line.tokens.size() == 3)
                param = parse_int(line, 3, line.tokens[2], "a builtin parameter");
            Game g;
            try {
                g = make_builtin(line.tokens[1], param);
            } catch (const error& e) {
                fail(ParseErrorKind::syntax, line, 2, e.what());
            }
            if (g.n_players != n || g.input_sizes != sizes)
                fail(ParseErrorKind::arity_mismatch, line, 0,
                     "builtin shape does not match the declared players/inputs");
            g.name = name;
            builtin_game = std::move(g);
        } else if (kw == "win") {
            if (builtin_game || any_table)
                fail(ParseErrorKind::syntax, line, 1, "conflicting predicate definitions");
            if (line.tokens.size() != static_cast<std::size_t>(n) + 3 ||
                line.tokens[n + 1] != ":")
                fail(ParseErrorKind::syntax, line, 0, "usage: win <x...> : <parity>");
            const int idx = parse_input_tuple(shape, line, 1);
            const int par = parse_int(line, n + 3, line.tokens[n + 2], "a parity bit");
            if (par != 0 && par != 1)
                fail(ParseErrorKind::value_out_of_range, line, n + 3, "parity must be 0 or 1");
            if (parity_set[idx]) fail(ParseErrorKind::syntax, line, 0, "duplicate win row");
            parity_set[idx] = true;
            parity[idx] = par == 0 ? 1 : -1;
            any_win = true;
        } else if (kw == "table") {
            if (builtin_game || any_win)
                fail(ParseErrorKind::syntax, line, 1, "conflicting predicate definitions");
            if (line.tokens.size() != 2 * static_cast<std::size_t>(n) + 3 ||
                line.tokens[2 * n + 1] != ":")
                fail(ParseErrorKind::syntax, line, 0, "usage: table <x...> <a...> : <+1|-1>");
            const int idx = parse_input_tuple(shape, line, 1);
            unsigned mask = 0;
            for (int i = 0; i < n; ++i) {
                const int a =
                    parse_int(line, n + i + 2, line.tokens[n + 1 + i], "an output bit");
                if (a != 0 && a != 1)
                    fail(ParseErrorKind::value_out_of_range, line, n + i + 2,
                         "outputs must be bits");
                mask |= static_cast<unsigned>(a) << i;
            }
            const std::string& v = line.tokens[2 * n + 2];
            if (v != "+1" && v != "-1" && v != "1")
                fail(ParseErrorKind::value_out_of_range, line, 2 * n + 3,
                     "predicate value must be +1 or -1");
            const std::size_t cell = static_cast<std::size_t>(idx) * outs + mask;
            if (table_set[cell]) fail(ParseErrorKind::syntax, line, 0, "duplicate table row");
            table_set[cell] = true;
            table[cell] = v == "-1" ? -1 : 1;
            any_table = true;
        } else if (kw == "dist") {
            if (line.tokens.size() != static_cast<std::size_t>(n) + 3 ||
                line.tokens[n + 1] != ":")
                fail(ParseErrorKind::syntax, line, 0, "usage: dist <x...> : <p/q>");
            const int idx = parse_input_tuple(shape, line, 1);
            if (dist_set[idx]) fail(ParseErrorKind::syntax, line, 0, "duplicate dist row");
            dist_set[idx] = true;
            dist_w[idx] = parse_weight(line, n + 3, line.tokens[n + 2]);
            any_dist = true;
        } else if (kw == "strategy") {
            if (line.tokens.size() != static_cast<std::size_t>(n) + 2)
                fail(ParseErrorKind::syntax, line, 0,
                     "usage: strategy <weight p/q> <bits per player>");
            const Rat w = parse_weight(line, 2, line.tokens[1]);
            DeterministicStrategy s;
            s.tables.resize(n);
            for (int i = 0; i < n; ++i) {
                const std::string& bits = line.tokens[2 + i];
                if (static_cast<int>(bits.size()) != sizes[i])
                    fail(ParseErrorKind::arity_mismatch, line, i + 3,
                         "player " + std::to_string(i + 1) + " table needs " +
                             std::to_string(sizes[i]) + " bits");
                s.tables[i].resize(sizes[i]);
                for (int k = 0; k < sizes[i]; ++k) {
                    if (bits[k] != '0' && bits[k] != '1')
                        fail(ParseErrorKind::value_out_of_range, line, i + 3,
                             "strategy tables are bit strings");
                    s.tables[i][k] = bits[k] == '1';
                }
            }
            strategy.atoms.emplace_back(w, std::move(s));
        } else {
            fail(ParseErrorKind::syntax, line, 1, "unknown directive '" + kw + "'");
        }
    }

    GameDocument doc;
    if (builtin_game) {
        doc.game = std::move(*builtin_game);
    } else if (any_win) {
        for (int idx = 0; idx < inputs; ++idx)
            if (!parity_set[idx])
                throw parse_error(ParseErrorKind::missing_rows, lines.back().number, 0,
                                  "win table is missing " +
                                      std::to_string(std::count(parity_set.begin(),
                                                                parity_set.end(), false)) +
                                      " input row(s)");
        doc.game = game_from_parity(n, sizes, name, parity);
    } else if (any_table) {
        for (std::size_t cell = 0; cell < table_set.size(); ++cell)
            if (!table_set[cell])
                throw parse_error(ParseErrorKind::missing_rows, lines.back().number, 0,
                                  "predicate table is incomplete");
        doc.game = make_game(n, sizes, name, table);
    } else {
        throw parse_error(ParseErrorKind::missing_rows,
                          lines.empty() ? 1 : lines.back().number, 0,
                          "no predicate: expected a builtin, win rows or table rows");
    }

    if (any_dist) {
        Rat sum(0);
        for (const Rat& q : dist_w) sum += q;
        if (sum != 1)
            throw parse_error(ParseErrorKind::not_normalized, lines.back().number, 0,
                              "distribution weights sum to " + rat_to_string(sum) + ", not 1");
        Distribution d;
        d.w = std::move(dist_w);
        doc.dist = std::move(d);
    }
    if (!strategy.atoms.empty()) {
        Rat sum(0);
        for (const auto& [w, s] : strategy.atoms) sum += w;
        if (sum != 1)
            throw parse_error(ParseErrorKind::not_normalized, lines.back().number, 0,
                              "strategy weights sum to " + rat_to_string(sum) + ", not 1");
        doc.strategy = normalize_mixed(doc.game, strategy);
    }
    return doc;
}

std::string serialize_game(const Game& g, const Distribution* dist,
                           const MixedStrategy* strategy) {
    std::ostringstream out;
    std::string name = g.name.empty() ? "game" : g.name;
    std::replace(name.begin(), name.end(), ' ', '-');
    out << "game " << name << "\n";
    out << "players " << g.n_players << "\n";
    out << "inputs";
    for (int s : g.input_sizes) out << ' ' << s;
    out << "\n";

    auto write_tuple = [&](int idx) {
        for (int v : g.input_tuple(idx)) out << ' ' << v + 1;
    };

    if (const auto id = match_builtin(g)) {
        out << "builtin " << id->first;
        if (id->second) out << ' ' << *id->second;
        out << "\n";
    } else {
        bool xor_form = true;
        std::vector<std::int8_t> parity;
        try {
            parity = xor_view(g).parity;
        } catch (const not_xor_game&) {
            xor_form = false;
        }
        if (xor_form) {
            for (int idx = 0; idx < g.num_inputs(); ++idx) {
                out << "win";
                write_tuple(idx);
                out << " : " << (parity[idx] > 0 ? 0 : 1) << "\n";
            }
        } else {
            for (int idx = 0; idx < g.num_inputs(); ++idx)
                for (int mask = 0; mask < g.num_outputs(); ++mask) {
                    out << "table";
                    write_tuple(idx);
                    for (int i = 0; i < g.n_players; ++i) out << ' ' << (mask >> i & 1);
                    out << " : " << (g.value(idx, static_cast<unsigned>(mask)) > 0 ? "+1" : "-1")
                        << "\n";
                }
        }
    }

    if (dist) {
        validate_distribution(g, *dist);
        for (int idx = 0; idx < g.num_inputs(); ++idx) {
            if (dist->w[idx] == 0) continue;
            out << "dist";
            write_tuple(idx);
            out << " : " << rat_to_string(dist->w[idx]) << "\n";
        }
    }
    if (strategy) {
        for (const auto& [w, s] : strategy->atoms) {
            out << "strategy " << rat_to_string(w);
            for (const auto& tbl : s.tables) {
                out << ' ';
                for (std::uint8_t bit : tbl) out << static_cast<char>('0' + bit);
            }
            out << "\n";
        }
    }
    return out.str();
}

} // namespace nlg
