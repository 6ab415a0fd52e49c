#include "doctest.h"

#include "nlg/builtins.hpp"
#include "nlg/classical.hpp"
#include "nlg/game.hpp"
#include "nlg/rng.hpp"

using namespace nlg;

namespace {

int8_t predicate_at(const Game& g, std::initializer_list<int> x, std::initializer_list<int> a) {
    const std::vector<int> xs(x);
    unsigned mask = 0;
    int i = 0;
    for (int bit : a) mask |= static_cast<unsigned>(bit) << i++;
    return g.value(g.input_index(xs), mask);
}

} // namespace

TEST_CASE("chsh predicate") {
    const Game g = build_chsh();
    CHECK(g.n_players == 2);
    CHECK(g.input_sizes == std::vector<int>{2, 2});
    CHECK(predicate_at(g, {1, 1}, {0, 1}) == 1);
    CHECK(predicate_at(g, {0, 0}, {0, 1}) == -1);
    CHECK(predicate_at(g, {1, 0}, {0, 0}) == 1);
}

TEST_CASE("mermin-ardehali predicate") {
    CHECK(predicate_at(build_ma(3), {1, 1, 0}, {1, 0, 0}) == 1);
    // two-player table: input sum 2 demands odd output parity
    const XorGameView v = xor_view(build_ma(2));
    CHECK(v.parity[3] == -1);
    CHECK(same_table(build_ma(2), build_chsh()));
    CHECK(predicate_at(build_ma(4), {1, 1, 1, 1}, {0, 0, 0, 0}) == 1);
    CHECK_THROWS_AS(build_ma(1), error);
}

TEST_CASE("equal-equal predicate uses 0-based internal inputs") {
    const Game g3 = build_ee(3);
    CHECK(predicate_at(g3, {2, 2}, {1, 1}) == 1);
    CHECK(predicate_at(g3, {0, 2}, {0, 0}) == -1); // paper inputs (1,3)
    CHECK(predicate_at(build_ee(5), {0, 1}, {0, 1}) == 1); // paper inputs (1,2)
    CHECK_THROWS_AS(build_ee(1), error);
}

TEST_CASE("nand, nmaj and or-and predicates") {
    CHECK(same_table(build_nand(2), build_chsh()));
    // 2 of 3 inputs true: odd output parity wins
    CHECK(predicate_at(build_nmaj(3), {1, 1, 0}, {1, 0, 0}) == 1);
    CHECK(predicate_at(build_or_and(), {0, 0}, {1, 1}) == -1);
}

TEST_CASE("xor_view recovers winning parities") {
    const XorGameView chsh = xor_view(build_chsh());
    CHECK(chsh.parity == std::vector<int8_t>{1, 1, 1, -1});

    const XorGameView ee3 = xor_view(build_ee(3));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(ee3.parity[x * 3 + y] == (x == y ? 1 : -1));

    // all-win predicate is not an XOR game
    Game constant = make_game(2, {2, 2}, "always", std::vector<int8_t>(16, 1));
    CHECK_THROWS_AS(xor_view(constant), not_xor_game);
}

TEST_CASE("rebuilding a predicate from its parity table is lossless") {
    for (const Game& g : {build_chsh(), build_ma(3), build_ee(3), build_nmaj(4)}) {
        const XorGameView v = xor_view(g);
        CHECK(same_table(game_from_parity(g.n_players, g.input_sizes, g.name, v.parity), g));
    }
}

TEST_CASE("xor round trip on random parity tables") {
    CounterRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int nx = 1 + rng.next_u64() % 3, ny = 1 + rng.next_u64() % 3;
        std::vector<int8_t> parity(nx * ny);
        for (auto& p : parity) p = rng.next_u64() & 1 ? 1 : -1;
        const Game g = game_from_parity(2, {static_cast<int>(nx), static_cast<int>(ny)},
                                        "rand", parity);
        CHECK(xor_view(g).parity == parity);
    }
}

TEST_CASE("symmetric coefficients") {
    CHECK(symmetric_coeffs(build_nand(3)).c == std::vector<int8_t>{1, 1, 1, -1});
    CHECK(symmetric_coeffs(build_nmaj(4)).c == std::vector<int8_t>{1, 1, -1, -1, -1});
    CHECK(symmetric_coeffs(build_chsh()).c == std::vector<int8_t>{1, 1, -1});
    CHECK_THROWS_AS(symmetric_coeffs(build_ee(3)), not_binary_inputs);

    // asymmetric parity table: weight-1 class with mixed parities
    Game skew = game_from_parity(2, {2, 2}, "skew", {1, 1, -1, 1});
    CHECK_THROWS_AS(symmetric_coeffs(skew), not_symmetric);

    // reconstruction is permutation invariant by construction
    const SymmetricXorCoeffs c = symmetric_coeffs(build_nmaj(5));
    const Game back = game_from_symmetric_coeffs(c, "back");
    CHECK(same_table(back, build_nmaj(5)));
}

TEST_CASE("value_of_mixed on chsh") {
    const Game g = build_chsh();
    MixedStrategy zeros;
    zeros.atoms.emplace_back(Rat(1), strategy_from_encoding(g, 0));
    CHECK(value_of_mixed(g, zeros, uniform_distribution(g)) == rat(1, 2));

    const MixedStrategy mix = chsh_mix();
    for (int x = 0; x < 4; ++x) {
        CHECK(value_of_mixed(g, mix, point_mass(g, x)) == rat(1, 2));
    }

    Game constant = make_game(2, {2, 2}, "always", std::vector<int8_t>(16, 1));
    CHECK(value_of_mixed(constant, mix, uniform_distribution(constant)) == Rat(1));
}

TEST_CASE("omega stays in [-1,1] and win probability matches") {
    CounterRng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int nx = 1 + rng.next_u64() % 3, ny = 1 + rng.next_u64() % 3;
        std::vector<int8_t> table(static_cast<std::size_t>(nx) * ny * 4);
        for (auto& v : table) v = rng.next_u64() & 1 ? 1 : -1;
        const Game g = make_game(2, {static_cast<int>(nx), static_cast<int>(ny)}, "rand",
                                 std::move(table));

        MixedStrategy mix;
        const std::uint64_t strategies = std::uint64_t{1} << strategy_bits(g);
        mix.atoms.emplace_back(rat(1, 3), strategy_from_encoding(g, rng.next_u64() % strategies));
        mix.atoms.emplace_back(rat(2, 3), strategy_from_encoding(g, rng.next_u64() % strategies));

        // random rational distribution
        Distribution d;
        long total = 0;
        std::vector<long> parts(g.num_inputs());
        for (auto& p : parts) total += p = 1 + rng.next_u64() % 5;
        for (long p : parts) d.w.push_back(rat(p, total));

        const Rat omega = value_of_mixed(g, mix, d);
        CHECK(omega >= Rat(-1));
        CHECK(omega <= Rat(1));
        CHECK(win_probability(omega) == (Rat(1) + omega) / 2);
        CHECK(win_probability(omega) + win_probability(-omega) == Rat(1));
    }
}

TEST_CASE("strategy encoding round trip") {
    const Game g = build_ee(3);
    for (std::uint64_t e = 0; e < 64; ++e)
        CHECK(strategy_encoding(g, strategy_from_encoding(g, e)) == e);

    MixedStrategy dup;
    dup.atoms.emplace_back(rat(1, 2), strategy_from_encoding(g, 5));
    dup.atoms.emplace_back(rat(1, 4), strategy_from_encoding(g, 5));
    dup.atoms.emplace_back(rat(1, 4), strategy_from_encoding(g, 9));
    const MixedStrategy merged = normalize_mixed(g, dup);
    CHECK(merged.atoms.size() == 2);
    CHECK(merged.atoms[0].first == rat(3, 4));

    MixedStrategy bad = dup;
    bad.atoms.pop_back();
    CHECK_THROWS_AS(normalize_mixed(g, bad), error);
}

TEST_CASE("distribution helpers") {
    const Game g = build_chsh();
    CHECK_NOTHROW(validate_distribution(g, uniform_distribution(g)));
    CHECK_NOTHROW(validate_distribution(g, point_mass(g, 2)));

    Distribution bad;
    bad.w = {rat(1, 2), rat(1, 2), rat(1, 36), Rat(0)};
    CHECK_THROWS_AS(validate_distribution(g, bad), error);

    const SymmetricDistribution u = uniform_symmetric_distribution(4);
    CHECK(u.p.size() == 5);
    CHECK(u.p[2] == doctest::Approx(6.0 / 16).epsilon(1e-15));
    const std::vector<double> pi = expand_symmetric(u);
    double sum = 0;
    for (double p : pi) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    const SymmetricDistribution agg = aggregate_symmetric(g, uniform_distribution(g));
    CHECK(agg.p[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(agg.p[1] == doctest::Approx(0.5).epsilon(1e-15));
}
