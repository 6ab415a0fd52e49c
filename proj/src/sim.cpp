#include "nlg/sim.hpp"

#include <algorithm>
#include <cmath>

#include "nlg/rng.hpp"

namespace nlg {

namespace {

int sample_index(const std::vector<double>& cumulative, double u) {
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    return static_cast<int>(std::min(idx, cumulative.size() - 1));
}

} // namespace

SimulationResult simulate(const Game& g, const AnyStrategy& strategy, const Distribution& pi,
                          std::uint64_t rounds, std::uint64_t seed) {
    if (rounds < 1) throw error("simulation needs at least one round");
    validate_distribution(g, pi);

    std::vector<double> input_cdf(pi.w.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pi.w.size(); ++i) {
        acc += to_double(pi.w[i]);
        input_cdf[i] = acc;
    }

    struct MixedCtx {
        std::vector<double> cdf;
        const MixedStrategy* mix;
    };
    struct VectorCtx {
        std::vector<std::int8_t> parity;   // per input index
        std::vector<double> correlation;   // (u_x, v_y) per input index
    };
    std::variant<MixedCtx, const ProductStrategy*, VectorCtx> ctx;

    if (const auto* mix = std::get_if<MixedStrategy>(&strategy)) {
        if (mix->atoms.empty()) throw shape_mismatch("mixed strategy has no atoms");
        Rat total(0);
        for (const auto& [wt, s] : mix->atoms) {
            (void)s;
            if (wt < 0) throw error("mixed strategy weights must be non-negative");
            total += wt;
        }
        if (total != 1)
            throw error("mixed strategy weights sum to " + rat_to_string(total) + ", not 1");
        MixedCtx m;
        m.mix = mix;
        double w = 0.0;
        for (const auto& [wt, s] : mix->atoms) {
            (void)s;
            w += to_double(wt);
            m.cdf.push_back(w);
        }
        ctx = std::move(m);
    } else if (const auto* prod = std::get_if<ProductStrategy>(&strategy)) {
        validate_product(g, *prod);
        ctx = prod;
    } else {
        const auto& vec = std::get<VectorStrategy>(strategy);
        if (g.n_players != 2) throw shape_mismatch("vector strategies need a two-player game");
        const XorGameView view = xor_view(g);
        if (static_cast<int>(vec.u.size()) != g.input_sizes[0] ||
            static_cast<int>(vec.v.size()) != g.input_sizes[1])
            throw shape_mismatch("vector strategy does not match the input alphabets");
        VectorCtx v;
        v.parity = view.parity;
        v.correlation.resize(pi.w.size());
        for (int x = 0; x < g.input_sizes[0]; ++x)
            for (int y = 0; y < g.input_sizes[1]; ++y) {
                double dot = 0.0;
                for (int k = 0; k < vec.d; ++k) dot += vec.u[x][k] * vec.v[y][k];
                v.correlation[static_cast<std::size_t>(x) * g.input_sizes[1] + y] =
                    std::clamp(dot, -1.0, 1.0);
            }
        ctx = std::move(v);
    }

    CounterRng rng(seed);
    std::uint64_t wins = 0;
    for (std::uint64_t round = 0; round < rounds; ++round) {
        const int x = sample_index(input_cdf, rng.next_unit());
        bool win;
        if (const auto* m = std::get_if<MixedCtx>(&ctx)) {
            const int atom = sample_index(m->cdf, rng.next_unit());
            win = deterministic_value(g, m->mix->atoms[atom].second, x) > 0;
        } else if (const auto* prod = std::get_if<const ProductStrategy*>(&ctx)) {
            const std::vector<int> tuple = g.input_tuple(x);
            unsigned mask = 0;
            for (int i = 0; i < g.n_players; ++i)
                mask |= static_cast<unsigned>(rng.next_unit() < (*prod)->q[i][tuple[i]]) << i;
            win = g.value(x, mask) > 0;
        } else {
            const auto& v = std::get<VectorCtx>(ctx);
            const bool same = rng.next_unit() < 0.5 * (1.0 + v.correlation[x]);
            win = (same ? v.parity[x] : -v.parity[x]) > 0;
        }
        wins += win;
    }

    SimulationResult res;
    res.rounds = rounds;
    res.wins = wins;
    res.seed = seed;
    res.empirical_value = 2.0 * static_cast<double>(wins) / static_cast<double>(rounds) - 1.0;
    res.standard_error = std::sqrt(
        std::max(0.0, 1.0 - res.empirical_value * res.empirical_value) /
        static_cast<double>(rounds));
    return res;
}

} // namespace nlg
