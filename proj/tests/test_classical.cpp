#include "doctest.h"

#include <cmath>
#include <set>

#include "nlg/builtins.hpp"
#include "nlg/classical.hpp"
#include "nlg/rng.hpp"
#include "support/oracles.hpp"

using namespace nlg;

TEST_CASE("fixed-distribution values by enumeration") {
    const Game chsh = build_chsh();
    CHECK(classical_fixed(chsh, uniform_distribution(chsh)).value == rat(1, 2));

    const Game ee6 = build_ee(6);
    CHECK(classical_fixed(ee6, uniform_distribution(ee6)).value == rat(2, 3));

    // a point mass is winnable whenever some response wins
    for (int x = 0; x < 4; ++x)
        CHECK(classical_fixed(chsh, point_mass(chsh, x)).value == Rat(1));
}

TEST_CASE("enumeration certificate achieves the reported value") {
    const Game g = build_ee(4);
    const Distribution pi = ee_worst_dist(4);
    const ClassicalReport rep = classical_fixed(g, pi);
    CHECK(value_of_mixed(g, rep.strategy, pi) == rep.value);
    CHECK(rep.strategy.atoms.size() == 1);
}

TEST_CASE("ties resolve to the smallest strategy encoding") {
    // an always-win game: every strategy is optimal, so the all-zeros
    // strategy (encoding 0) must be reported
    Game always = make_game(2, {2, 2}, "always", std::vector<int8_t>(16, 1));
    const ClassicalReport rep = classical_fixed(always, uniform_distribution(always));
    CHECK(strategy_encoding(always, rep.strategy.atoms[0].second) == 0);
}

TEST_CASE("enumeration cap") {
    EnumerationOptions opt;
    opt.strategy_cap = 1 << 10;
    CHECK_THROWS_AS(classical_fixed(build_ee(6), uniform_distribution(build_ee(6)), opt),
                    cap_exceeded);
}

TEST_CASE("worst-case values match the closed forms") {
    CHECK(classical_worst(build_chsh()).value == rat(1, 2));
    CHECK(classical_worst(build_ee(4)).value == rat(1, 2));
    CHECK(classical_worst(build_ee(5)).value == rat(3, 7));
    CHECK(classical_worst(build_nand(3)).value == rat(2, 5));

    // the one-player AND game is won outright by echoing the input, which is
    // what the closed form degenerates to at n = 1
    CHECK(classical_worst(build_nand(1)).value == Rat(1));
    CHECK(*closed_form_classical("nand", 1).exact == Rat(1));
}

TEST_CASE("worst-case certificates cross-verify") {
    const Game g = build_ee(4);
    const ClassicalReport rep = classical_worst(g);

    // the strategy mix achieves >= value on every single input
    for (int x = 0; x < g.num_inputs(); ++x)
        CHECK(mixed_value_on_input(g, rep.strategy, x) >= rep.value);

    // the distribution caps every deterministic strategy at <= value
    CHECK(max_deterministic_value(g, *rep.worst_distribution) == rep.value);
}

TEST_CASE("chsh worst distribution is uniform") {
    const ClassicalReport rep = classical_worst(build_chsh());
    for (const Rat& w : rep.worst_distribution->w) CHECK(w == rat(1, 4));
}

TEST_CASE("closed forms") {
    CHECK(*closed_form_classical("chsh", 0).exact == rat(1, 2));
    CHECK(*closed_form_classical("ee", 4).exact == rat(1, 2));
    CHECK(*closed_form_classical("ee", 7).exact == rat(2, 5));
    CHECK(*closed_form_classical("nand", 6).exact == rat(16, 47));
    CHECK(*closed_form_classical("ma", 4).exact == rat(1, 4));

    const ClosedFormClassical ma3 = closed_form_classical("ma", 3);
    CHECK(!ma3.exact);
    CHECK(*ma3.exact_hi == rat(1, 2));
    CHECK(ma3.lo == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-15));

    CHECK_THROWS_AS(closed_form_classical("oddcycle", 3), error);
}

TEST_CASE("ma worst-case values: even exact, odd recorded") {
    CHECK(classical_worst(build_ma(2)).value == rat(1, 2));
    CHECK(classical_worst(build_ma(4)).value == rat(1, 4));

    // Odd player counts have no known closed form; these exact LP values are
    // pinned here for reproducibility (cross-checked against the naive
    // oracle) and must sit inside the known interval. Both land on the
    // interval's upper end.
    const Rat ma3 = classical_worst(build_ma(3)).value;
    CHECK(ma3 == rat(1, 2));
    CHECK(ma3 == oracle::worst_case_value(build_ma(3)));
    CHECK(to_double(ma3) >= std::pow(2.0, -1.5) - 1e-12);
    CHECK(ma3 <= rat(1, 2));

    const Rat ma5 = classical_worst(build_ma(5)).value;
    CHECK(ma5 == rat(1, 4));
    CHECK(to_double(ma5) >= std::pow(2.0, -2.5) - 1e-12);
    CHECK(ma5 <= rat(1, 4));
}

TEST_CASE("chsh mix: each strategy loses exactly once") {
    const Game g = build_chsh();
    const MixedStrategy mix = chsh_mix();
    CHECK(mix.atoms.size() == 4);
    std::set<int> losing_inputs;
    for (const auto& [w, s] : mix.atoms) {
        CHECK(w == rat(1, 4));
        int losses = 0, where = -1;
        for (int x = 0; x < 4; ++x)
            if (deterministic_value(g, s, x) < 0) {
                ++losses;
                where = x;
            }
        CHECK(losses == 1);
        losing_inputs.insert(where);
    }
    CHECK(losing_inputs.size() == 4);
    CHECK(value_of_mixed(g, mix, uniform_distribution(g)) == rat(1, 2));
}

TEST_CASE("ee mix parameters and per-input values") {
    CHECK(ee_mix(3).atoms[0].first == rat(1, 4)); // p = (m-1)/(3m-1)

    const Game g = build_ee(4);
    const MixedStrategy mix = ee_mix(4);
    for (int x = 0; x < g.num_inputs(); ++x)
        CHECK(mixed_value_on_input(g, mix, x) == rat(1, 2));

    // odd case achieves its closed form on every input as well
    const Game g5 = build_ee(5);
    const MixedStrategy mix5 = ee_mix(5);
    for (int x = 0; x < g5.num_inputs(); ++x)
        CHECK(mixed_value_on_input(g5, mix5, x) == rat(3, 7));
}

TEST_CASE("ee worst distribution") {
    const Distribution d4 = ee_worst_dist(4);
    for (const Rat& w : d4.w) CHECK(w == rat(1, 16)); // alpha = beta: uniform

    const Distribution d6 = ee_worst_dist(6);
    CHECK(d6.w[0] == rat(1, 21));
    CHECK(d6.w[1] == rat(1, 42));
    Rat sum(0);
    for (const Rat& w : d6.w) sum += w;
    CHECK(sum == Rat(1)); // m*alpha + m(m-1)*beta = 1

    CHECK(max_deterministic_value(build_ee(6), d6) == rat(3, 7));
}

TEST_CASE("nand mix and worst distribution") {
    {
        const Game g = build_nand(2);
        const MixedStrategy mix = nand_mix(2);
        for (int x = 0; x < 4; ++x) CHECK(mixed_value_on_input(g, mix, x) == rat(1, 2));
    }
    {
        const Game g = build_nand(3);
        const MixedStrategy mix = nand_mix(3);
        for (int x = 0; x < 8; ++x) CHECK(mixed_value_on_input(g, mix, x) == rat(2, 5));

        const Distribution d = nand_worst_dist(3);
        CHECK(d.w.back() == rat(3, 10));
        for (std::size_t i = 0; i + 1 < d.w.size(); ++i) CHECK(d.w[i] == rat(1, 10));
        CHECK(max_deterministic_value(g, d) == rat(2, 5));

        // the mix against the worst distribution hits the closed form exactly
        CHECK(value_of_mixed(g, mix, d) == rat(2, 5));
    }
}

TEST_CASE("worst-case value never exceeds any fixed-distribution value") {
    CounterRng rng(2718);
    for (const Game& g : {build_chsh(), build_ee(3), build_nand(3), build_or_and()}) {
        const Rat worst = classical_worst(g).value;
        CHECK(worst <= classical_fixed(g, uniform_distribution(g)).value);
        for (int trial = 0; trial < 5; ++trial) {
            Distribution d;
            long total = 0;
            std::vector<long> parts(g.num_inputs());
            for (auto& p : parts) total += p = 1 + rng.next_u64() % 7;
            for (long p : parts) d.w.push_back(rat(p, total));
            CHECK(worst <= classical_fixed(g, d).value);
        }
    }
}

TEST_CASE("fixed value is invariant under input relabeling") {
    const Game g = build_ee(3);
    // relabel player 0's alphabet by the cycle 0 -> 1 -> 2 -> 0
    const int perm[3] = {1, 2, 0};
    std::vector<int8_t> table(g.table.size());
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int mask = 0; mask < 4; ++mask)
                table[static_cast<std::size_t>(perm[x] * 3 + y) * 4 + mask] =
                    g.value(x * 3 + y, mask);
    const Game relabeled = make_game(2, {3, 3}, "relabeled", std::move(table));

    Distribution d;
    long total = 0;
    std::vector<long> parts(9);
    CounterRng rng(5);
    for (auto& p : parts) total += p = 1 + rng.next_u64() % 4;
    for (long p : parts) d.w.push_back(rat(p, total));
    Distribution d_perm;
    d_perm.w.resize(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) d_perm.w[perm[x] * 3 + y] = d.w[x * 3 + y];

    CHECK(classical_fixed(g, d).value == classical_fixed(relabeled, d_perm).value);
}

TEST_CASE("threaded enumeration matches single-threaded") {
    const Game g = build_ee(5);
    EnumerationOptions threaded;
    threaded.threads = 4;
    const ClassicalReport a = classical_fixed(g, uniform_distribution(g));
    const ClassicalReport b = classical_fixed(g, uniform_distribution(g), threaded);
    CHECK(a.value == b.value);
    CHECK(strategy_encoding(g, a.strategy.atoms[0].second) ==
          strategy_encoding(g, b.strategy.atoms[0].second));
}

TEST_CASE("worst-case agrees with the naive oracle on small random games") {
    CounterRng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const int nx = 1 + rng.next_u64() % 3, ny = 1 + rng.next_u64() % 3;
        const Game g = oracle::random_game(rng, nx, ny);
        CHECK(classical_worst(g).value == oracle::worst_case_value(g));
    }
}
