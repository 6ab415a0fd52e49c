#include "nlg/classical.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "nlg/builtins.hpp"
#include "nlg/simplex.hpp"

namespace nlg {

namespace {

using i128 = __int128;

// Bit positions of each player's response within a strategy encoding, per
// flattened input.
std::vector<std::vector<int>> response_bit_positions(const Game& g) {
    std::vector<int> offsets(g.n_players);
    int off = 0;
    for (int i = 0; i < g.n_players; ++i) {
        offsets[i] = off;
        off += g.input_sizes[i];
    }
    std::vector<std::vector<int>> pos(g.num_inputs(), std::vector<int>(g.n_players));
    for (int x = 0; x < g.num_inputs(); ++x) {
        const std::vector<int> tuple = g.input_tuple(x);
        for (int i = 0; i < g.n_players; ++i) pos[x][i] = offsets[i] + tuple[i];
    }
    return pos;
}

unsigned response_mask(const std::vector<int>& positions, std::uint64_t enc) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        mask |= static_cast<unsigned>((enc >> positions[i]) & 1u) << i;
    return mask;
}

std::uint64_t checked_strategy_count(const Game& g, const EnumerationOptions& opt) {
    const std::uint64_t bits = strategy_bits(g);
    if (bits >= 63) throw cap_exceeded(~std::uint64_t{0}, opt.strategy_cap, "");
    const std::uint64_t count = std::uint64_t{1} << bits;
    if (count > opt.strategy_cap)
        throw cap_exceeded(count, opt.strategy_cap,
                           "a closed form may be available via closed_form_classical");
    return count;
}

// Distribution weights over a common denominator; fast path when everything
// fits in 64 bits.
struct ScaledWeights {
    Int den;
    std::vector<Int> num;
    bool fits64 = false;
    std::vector<std::int64_t> num64;
};

ScaledWeights scale_weights(const Distribution& d) {
    ScaledWeights s;
    s.den = 1;
    for (const Rat& q : d.w) {
        Int l;
        mpz_lcm(l.get_mpz_t(), s.den.get_mpz_t(), denominator(q).get_mpz_t());
        s.den = l;
    }
    s.num.resize(d.w.size());
    s.fits64 = s.den.fits_slong_p();
    s.num64.assign(d.w.size(), 0);
    for (std::size_t i = 0; i < d.w.size(); ++i) {
        s.num[i] = numerator(d.w[i]) * (s.den / denominator(d.w[i]));
        if (s.fits64) s.num64[i] = static_cast<std::int64_t>(s.num[i].get_si());
    }
    return s;
}

struct BestStrategy {
    bool valid = false;
    Rat value;
    std::uint64_t encoding = 0;
};

// Scans encodings [from, to); exact arithmetic, int64 fast path. Since the
// weights sum to the denominator, partial signed sums cannot overflow.
BestStrategy scan_range(const Game& g, const ScaledWeights& w,
                        const std::vector<std::vector<int>>& pos, std::uint64_t from,
                        std::uint64_t to) {
    BestStrategy best;
    const int inputs = g.num_inputs();
    std::int64_t best_num64 = 0;
    Int best_num;
    for (std::uint64_t e = from; e < to; ++e) {
        if (w.fits64) {
            std::int64_t acc = 0;
            for (int x = 0; x < inputs; ++x) {
                const std::int64_t n = w.num64[x];
                if (n == 0) continue;
                acc += g.value(x, response_mask(pos[x], e)) > 0 ? n : -n;
            }
            if (!best.valid || acc > best_num64) {
                best.valid = true;
                best_num64 = acc;
                best.encoding = e;
            }
        } else {
            Int acc(0);
            for (int x = 0; x < inputs; ++x) {
                if (w.num[x] == 0) continue;
                if (g.value(x, response_mask(pos[x], e)) > 0)
                    acc += w.num[x];
                else
                    acc -= w.num[x];
            }
            if (!best.valid || acc > best_num) {
                best.valid = true;
                best_num = acc;
                best.encoding = e;
            }
        }
    }
    if (best.valid)
        best.value = w.fits64 ? rat(Int(static_cast<long>(best_num64)), w.den)
                              : rat(best_num, w.den);
    return best;
}

BestStrategy best_deterministic(const Game& g, const Distribution& pi,
                                const EnumerationOptions& opt) {
    validate_distribution(g, pi);
    const std::uint64_t count = checked_strategy_count(g, opt);
    const ScaledWeights w = scale_weights(pi);
    const auto pos = response_bit_positions(g);

    const int threads = std::max(1, opt.threads);
    if (threads == 1 || count < 4096) return scan_range(g, w, pos, 0, count);

    std::vector<BestStrategy> parts(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = std::min(count, lo + chunk);
            if (lo < hi) parts[t] = scan_range(g, w, pos, lo, hi);
        });
    for (auto& th : pool) th.join();
    BestStrategy best;
    for (const BestStrategy& p : parts) {
        if (!p.valid) continue;
        // deterministic merge: higher value first, then smaller encoding
        if (!best.valid || p.value > best.value ||
            (p.value == best.value && p.encoding < best.encoding))
            best = p;
    }
    return best;
}

Int pow2_int(int k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return p;
}

} // namespace

ClassicalReport classical_fixed(const Game& g, const Distribution& pi,
                                const EnumerationOptions& opt) {
    const BestStrategy best = best_deterministic(g, pi, opt);
    ClassicalReport rep;
    rep.value = best.value;
    rep.win_prob = win_probability(best.value);
    rep.strategy.atoms.emplace_back(Rat(1), strategy_from_encoding(g, best.encoding));
    rep.method = ClassicalMethod::enumeration;
    return rep;
}

Rat max_deterministic_value(const Game& g, const Distribution& pi,
                            const EnumerationOptions& opt) {
    return best_deterministic(g, pi, opt).value;
}

ClassicalReport classical_worst(const Game& g, const EnumerationOptions& opt) {
    const std::uint64_t count = checked_strategy_count(g, opt);
    const std::uint64_t inputs = static_cast<std::uint64_t>(g.num_inputs());
    if (inputs > opt.input_cap)
        throw cap_exceeded(inputs, opt.input_cap, "input space too large for the worst-case LP");
    const auto pos = response_bit_positions(g);

    // Payoff-identical strategies are interchangeable, so only the first
    // representative of each payoff row enters the LP.
    std::vector<std::int8_t> rows;
    rows.reserve(std::min<std::uint64_t>(count, 1 << 16) * inputs);
    std::vector<std::uint64_t> encodings;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
    std::vector<std::int8_t> row(inputs);
    for (std::uint64_t e = 0; e < count; ++e) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t x = 0; x < inputs; ++x) {
            row[x] = g.value(static_cast<int>(x), response_mask(pos[x], e));
            h = (h ^ static_cast<std::uint8_t>(row[x])) * 0x100000001b3ULL;
        }
        bool dup = false;
        for (std::size_t idx : seen[h])
            if (std::equal(row.begin(), row.end(), rows.begin() + idx * inputs)) {
                dup = true;
                break;
            }
        if (dup) continue;
        seen[h].push_back(encodings.size());
        encodings.push_back(e);
        rows.insert(rows.end(), row.begin(), row.end());
    }

    const ZeroSumSolution sol =
        solve_zero_sum_scaled(encodings.size(), inputs, rows.data(), Int(1));

    ClassicalReport rep;
    rep.value = sol.value;
    rep.win_prob = win_probability(sol.value);
    rep.method = ClassicalMethod::lp;
    for (std::size_t i = 0; i < encodings.size(); ++i)
        if (sol.row_mix[i] != 0)
            rep.strategy.atoms.emplace_back(sol.row_mix[i],
                                            strategy_from_encoding(g, encodings[i]));
    Distribution worst;
    worst.w = sol.col_mix;
    rep.worst_distribution = std::move(worst);
    return rep;
}

ClosedFormClassical closed_form_classical(const std::string& game_id, int param) {
    ClosedFormClassical out;
    if (game_id == "chsh") {
        out.exact = rat(1, 2);
    } else if (game_id == "ee") {
        if (param < 2) throw error("ee closed form needs m >= 2");
        const long m = param;
        out.exact = m % 2 == 0 ? rat(m, 3 * m - 4) : rat(m + 1, 3 * m - 1);
    } else if (game_id == "nand") {
        if (param < 1) throw error("nand closed form needs n >= 1");
        const Rat p = pow2_rat(param - 2);
        out.exact = p / (Rat(3) * p - 1);
    } else if (game_id == "ma") {
        if (param < 2) throw error("ma closed form needs n >= 2");
        if (param % 2 == 0) {
            out.exact = pow2_rat(-param / 2);
        } else {
            out.exact_hi = pow2_rat(-(param - 1) / 2);
            out.lo = std::pow(2.0, -0.5 * param);
            out.hi = to_double(*out.exact_hi);
            out.note = "interval; the exact odd-n value is open";
            return out;
        }
    } else {
        throw error("no closed form for game id '" + game_id + "'");
    }
    out.lo = out.hi = to_double(*out.exact);
    return out;
}

MixedStrategy chsh_mix() {
    const Game g = build_chsh();
    auto strat = [](std::uint8_t a0, std::uint8_t a1, std::uint8_t b0, std::uint8_t b1) {
        DeterministicStrategy s;
        s.tables = {{a0, a1}, {b0, b1}};
        return s;
    };
    MixedStrategy mix;
    mix.atoms.emplace_back(rat(1, 4), strat(0, 0, 0, 0)); // a=0,      b=0
    mix.atoms.emplace_back(rat(1, 4), strat(0, 1, 0, 0)); // a=x,      b=0
    mix.atoms.emplace_back(rat(1, 4), strat(0, 0, 0, 1)); // a=0,      b=y
    mix.atoms.emplace_back(rat(1, 4), strat(0, 1, 1, 0)); // a=x,      b=not y
    return normalize_mixed(g, mix);
}

MixedStrategy ee_mix(int m) {
    if (m < 2) throw error("ee mix needs m >= 2");
    const Rat p = m % 2 == 0 ? rat(m - 2, 3 * m - 4) : rat(m - 1, 3 * m - 1);

    MixedStrategy mix;
    DeterministicStrategy unequal;
    unequal.tables = {std::vector<std::uint8_t>(m, 0), std::vector<std::uint8_t>(m, 1)};
    if (p != 0) mix.atoms.emplace_back(p, unequal);

    // all splits with floor(m/2) zeros; both players answer identically
    const int zeros = m / 2;
    Int cnt;
    mpz_bin_uiui(cnt.get_mpz_t(), m, zeros);
    const Rat each = (Rat(1) - p) / Rat(cnt);
    std::vector<int> pick(zeros);
    for (int i = 0; i < zeros; ++i) pick[i] = i;
    for (;;) {
        std::vector<std::uint8_t> t(m, 1);
        for (int i : pick) t[i] = 0;
        DeterministicStrategy s;
        s.tables = {t, t};
        mix.atoms.emplace_back(each, s);
        // next combination
        int i = zeros - 1;
        while (i >= 0 && pick[i] == m - zeros + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < zeros; ++j) pick[j] = pick[j - 1] + 1;
    }
    return normalize_mixed(build_ee(m), mix);
}

Distribution ee_worst_dist(int m) {
    if (m < 2) throw error("ee worst distribution needs m >= 2");
    const Rat alpha = m % 2 == 0 ? rat(m - 2, static_cast<long>(m) * (3 * m - 4))
                                 : rat(m - 1, static_cast<long>(m) * (3 * m - 1));
    const Rat beta = m % 2 == 0 ? rat(2, static_cast<long>(m) * (3 * m - 4))
                                : rat(2, static_cast<long>(m - 1) * (3 * m - 1));
    Distribution d;
    d.w.resize(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) d.w[static_cast<std::size_t>(x) * m + y] = x == y ? alpha : beta;
    return d;
}

MixedStrategy nand_mix(int n) {
    if (n < 2) throw error("nand mix needs n >= 2");
    const Int denom = 3 * pow2_int(n - 1) - 2;
    MixedStrategy mix;

    DeterministicStrategy zeros;
    zeros.tables.assign(n, {0, 0});
    mix.atoms.emplace_back(rat(pow2_int(n - 1) - 1, denom), zeros);

    // Non-zero positions answer x_i, except the last one flips to keep the
    // number of identity responses odd.
    const Rat each = rat(Int(1), denom);
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        DeterministicStrategy s;
        s.tables.assign(n, {0, 0});
        int last = -1, members = 0;
        for (int i = 0; i < n; ++i)
            if (subset >> i & 1u) {
                s.tables[i] = {0, 1}; // a_i(x) = x
                last = i;
                ++members;
            }
        if (members % 2 == 0) s.tables[last] = {1, 0}; // a_i(x) = not x
        mix.atoms.emplace_back(each, s);
    }
    return normalize_mixed(build_nand(n), mix);
}

Distribution nand_worst_dist(int n) {
    if (n < 2) throw error("nand worst distribution needs n >= 2");
    const Int denom = 3 * pow2_int(n - 1) - 2;
    Distribution d;
    d.w.assign(std::size_t{1} << n, rat(Int(1), denom));
    d.w.back() = rat(pow2_int(n - 1) - 1, denom); // all-ones input is last
    return d;
}

} // namespace nlg
