#pragma once

#include <optional>
#include <string>

#include "nlg/game.hpp"

namespace nlg {

enum class ParseErrorKind {
    syntax,
    arity_mismatch,
    missing_rows,
    not_normalized,
    value_out_of_range,
};

class parse_error : public error {
public:
    parse_error(ParseErrorKind kind, int line, int column, const std::string& what)
        : error("line " + std::to_string(line) +
                (column > 0 ? ":" + std::to_string(column) : "") + ": " + what),
          kind(kind),
          line(line),
          column(column) {}

    ParseErrorKind kind;
    int line;   // 1-based
    int column; // 1-based, 0 when the whole line is meant
};

struct GameDocument {
    Game game;
    std::optional<Distribution> dist;
    std::optional<MixedStrategy> strategy;
};

// Line-oriented game format (extension .nlg). Input values are 1-based in
// files, matching the user-facing convention; rationals are mandatory for
// weights, decimals are rejected.
//
//   game <name>
//   players <n>
//   inputs <m_1> ... <m_n>
//   builtin <id> [param]              -- or explicit rows:
//   win <x_1> ... <x_n> : <parity>    -- parity in {0,1} is the winning XOR
//   table <x...> <a...> : <+1|-1>     -- general non-XOR predicate rows
//   dist <x...> : <p/q>               -- omitted rows carry weight 0
//   strategy <p/q> <bits_1> ... <bits_n>
//   # comment
GameDocument parse_game(const std::string& text);

// Canonical form: a builtin reference when the table matches one, explicit
// rows sorted lexicographically otherwise; rationals in lowest terms.
std::string serialize_game(const Game& g, const Distribution* dist = nullptr,
                           const MixedStrategy* strategy = nullptr);

} // namespace nlg
