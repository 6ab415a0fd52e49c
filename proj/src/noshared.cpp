#include "nlg/noshared.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>
#include <utility>

#include "nlg/builtins.hpp"

namespace nlg {

void validate_product(const Game& g, const ProductStrategy& s) {
    if (static_cast<int>(s.q.size()) != g.n_players)
        throw shape_mismatch("product strategy has wrong number of players");
    for (int i = 0; i < g.n_players; ++i) {
        if (static_cast<int>(s.q[i].size()) != g.input_sizes[i])
            throw shape_mismatch("product strategy table for player " + std::to_string(i + 1) +
                                 " does not cover the alphabet");
        for (double p : s.q[i])
            if (!(p >= 0.0 && p <= 1.0)) throw error("response probabilities must lie in [0,1]");
    }
}

double product_value(const Game& g, const ProductStrategy& s, int input_index) {
    validate_product(g, s);
    const std::vector<int> x = g.input_tuple(input_index);
    const int outs = g.num_outputs();
    double v = 0.0;
    for (int mask = 0; mask < outs; ++mask) {
        double prob = 1.0;
        for (int i = 0; i < g.n_players; ++i) {
            const double qi = s.q[i][x[i]];
            prob *= (mask >> i & 1) ? qi : 1.0 - qi;
        }
        v += prob * g.value(input_index, static_cast<unsigned>(mask));
    }
    return v;
}

double product_value(const Game& g, const ProductStrategy& s, std::span<const int> x) {
    return product_value(g, s, g.input_index(x));
}

ProductStrategy round_product(const ProductStrategy& s) {
    ProductStrategy r = s;
    for (auto& table : r.q)
        for (double& p : table) p = p > 0.5 ? 1.0 : 0.0;
    return r;
}

namespace {

// Union-find with parity to the root.
struct ParityDsu {
    std::vector<int> parent;
    std::vector<std::uint8_t> parity;

    explicit ParityDsu(int n) : parent(n), parity(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    std::pair<int, std::uint8_t> find(int v) {
        std::uint8_t p = 0;
        while (parent[v] != v) {
            p ^= parity[v];
            v = parent[v];
        }
        return {v, p};
    }

    // Enforce color(a) xor color(b) == rel; false on contradiction.
    bool merge(int a, int b, std::uint8_t rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return static_cast<std::uint8_t>(pa ^ pb) == rel;
        parent[ra] = rb;
        parity[ra] = static_cast<std::uint8_t>(pa ^ pb ^ rel);
        return true;
    }
};

} // namespace

XorDichotomy xor_dichotomy(const Game& g) {
    if (g.n_players != 2) throw shape_mismatch("the dichotomy applies to two-player games");
    const XorGameView view = xor_view(g);
    const int nx = g.input_sizes[0], ny = g.input_sizes[1];

    ParityDsu dsu(nx + ny);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) {
            const std::uint8_t need = view.parity[x * ny + y] > 0 ? 0 : 1;
            if (!dsu.merge(x, nx + y, need)) return {};
        }

    DeterministicStrategy s;
    s.tables.resize(2);
    s.tables[0].resize(nx);
    s.tables[1].resize(ny);
    for (int x = 0; x < nx; ++x) s.tables[0][x] = dsu.find(x).second;
    for (int y = 0; y < ny; ++y) s.tables[1][y] = dsu.find(nx + y).second;
    for (int idx = 0; idx < g.num_inputs(); ++idx)
        if (deterministic_value(g, s, idx) != 1)
            throw error("internal: 2-coloring produced a losing strategy");
    return {true, std::move(s)};
}

namespace {

// Win probability on input (x, y) as a linear function a + b*v of the second
// player's probability v, for a fixed first-player probability u.
struct LinearWin {
    double a, b;
    double at(double v) const { return a + b * v; }
};

LinearWin win_linear(const std::array<std::array<double, 2>, 2>& w, double u) {
    // w[a][b] = 1 if output pair (a, b) wins, else 0
    const double a = (1.0 - u) * w[0][0] + u * w[1][0];
    const double b = (1.0 - u) * (w[0][1] - w[0][0]) + u * (w[1][1] - w[1][0]);
    return {a, b};
}

} // namespace

ProductWorstResult product_worst(const Game& g, const ProductWorstOptions& opt) {
    if (g.n_players != 2 || !g.binary_inputs())
        throw shape_mismatch("product-strategy minimax handles two-player binary-input games");

    // win indicator per input pair and output pair
    std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> win{};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    win[x][y][a][b] =
                        g.value(x * 2 + y, static_cast<unsigned>(a | (b << 1))) > 0 ? 1.0 : 0.0;

    // Best response of the second player is exact: per column input y, the
    // minimum over x of two linear functions of v_y is maximized at an
    // endpoint or at their intersection.
    auto best_response = [&](double u0, double u1, double* v_out) {
        const double us[2] = {u0, u1};
        double objective = 1.0;
        for (int y = 0; y < 2; ++y) {
            const LinearWin l0 = win_linear(win[0][y], us[0]);
            const LinearWin l1 = win_linear(win[1][y], us[1]);
            double best_v = 0.0, best_val = std::min(l0.at(0.0), l1.at(0.0));
            const double at1 = std::min(l0.at(1.0), l1.at(1.0));
            if (at1 > best_val) {
                best_val = at1;
                best_v = 1.0;
            }
            if (std::abs(l0.b - l1.b) > 1e-15) {
                const double vx = (l1.a - l0.a) / (l0.b - l1.b);
                if (vx > 0.0 && vx < 1.0) {
                    const double val = std::min(l0.at(vx), l1.at(vx));
                    if (val > best_val) {
                        best_val = val;
                        best_v = vx;
                    }
                }
            }
            if (v_out) v_out[y] = best_v;
            objective = std::min(objective, best_val);
        }
        return objective;
    };

    const int grid = std::max(opt.grid, 2);
    struct Cell {
        double obj = -1.0;
        int i = 0, j = 0;
    };
    auto scan_rows = [&](int i_from, int i_to) {
        Cell best;
        for (int i = i_from; i < i_to; ++i)
            for (int j = 0; j <= grid; ++j) {
                const double obj =
                    best_response(static_cast<double>(i) / grid,
                                  static_cast<double>(j) / grid, nullptr);
                if (obj > best.obj) best = {obj, i, j};
            }
        return best;
    };
    Cell top;
    const int threads = std::max(opt.threads, 1);
    if (threads == 1) {
        top = scan_rows(0, grid + 1);
    } else {
        std::vector<Cell> parts(threads);
        std::vector<std::thread> pool;
        const int chunk = (grid + threads) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                parts[t] = scan_rows(std::min(t * chunk, grid + 1),
                                     std::min((t + 1) * chunk, grid + 1));
            });
        for (auto& th : pool) th.join();
        for (const Cell& p : parts)
            if (p.obj > top.obj || (p.obj == top.obj && std::make_pair(p.i, p.j) <
                                                            std::make_pair(top.i, top.j)))
                top = p;
    }
    double best_u0 = static_cast<double>(top.i) / grid;
    double best_u1 = static_cast<double>(top.j) / grid;
    double best_obj = top.obj;

    // Coordinate-wise golden-section polish around the grid optimum.
    constexpr double inv_phi = 0.6180339887498949;
    const double span0 = 2.0 / grid;
    for (int round = 0; round < opt.refine_rounds; ++round) {
        for (int coord = 0; coord < 2; ++coord) {
            double a = std::max(0.0, (coord == 0 ? best_u0 : best_u1) - span0);
            double b = std::min(1.0, (coord == 0 ? best_u0 : best_u1) + span0);
            auto eval = [&](double t) {
                return coord == 0 ? best_response(t, best_u1, nullptr)
                                  : best_response(best_u0, t, nullptr);
            };
            double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
            double f1 = eval(x1), f2 = eval(x2);
            while (b - a > 1e-12) {
                if (f1 < f2) {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + inv_phi * (b - a);
                    f2 = eval(x2);
                } else {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - inv_phi * (b - a);
                    f1 = eval(x1);
                }
            }
            const double t = f1 > f2 ? x1 : x2;
            const double ft = std::max(f1, f2);
            if (ft >= best_obj) {
                best_obj = ft;
                (coord == 0 ? best_u0 : best_u1) = t;
            }
        }
    }

    double v[2];
    best_obj = best_response(best_u0, best_u1, v);

    ProductWorstResult res;
    res.value = 2.0 * best_obj - 1.0;
    res.strategy.q = {{best_u0, best_u1}, {v[0], v[1]}};

    if (same_table(g, build_or_and())) {
        const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
        res.exact_value = std::sqrt(5.0) - 2.0;
        ProductStrategy exact;
        exact.q = {{golden, 1.0}, {golden, 1.0}};
        res.exact_strategy = std::move(exact);
    }
    return res;
}

} // namespace nlg
