#include "nlg/ascent.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "nlg/errors.hpp"
#include "nlg/rng.hpp"

namespace nlg {

namespace {

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void random_unit(std::vector<double>& v, CounterRng& rng) {
    double n = 0.0;
    while (n < 1e-12) {
        for (double& x : v) x = rng.next_symmetric();
        n = norm(v);
    }
    for (double& x : v) x /= n;
}

} // namespace

AscentResult alternating_ascent(const std::vector<std::vector<double>>& G, int d,
                                std::uint64_t seed, const AscentOptions& opt) {
    const std::size_t rows = G.size();
    if (rows == 0 || G[0].empty()) throw error("objective matrix must be non-empty");
    const std::size_t cols = G[0].size();
    for (const auto& r : G)
        if (r.size() != cols) throw error("objective matrix must be rectangular");
    if (d < 1) throw error("vector dimension must be positive");

    bool all_zero = true;
    for (const auto& r : G)
        for (double g : r)
            if (g != 0.0) all_zero = false;

    AscentResult best;
    best.vectors.d = d;
    best.vectors.u.assign(rows, std::vector<double>(d, 0.0));
    best.vectors.v.assign(cols, std::vector<double>(d, 0.0));
    for (auto& u : best.vectors.u) u[0] = 1.0;
    for (auto& v : best.vectors.v) v[0] = 1.0;
    if (all_zero) {
        best.degenerate = true;
        return best;
    }

    auto objective = [&](const VectorStrategy& s) {
        double val = 0.0;
        for (std::size_t x = 0; x < rows; ++x)
            for (std::size_t y = 0; y < cols; ++y) {
                if (G[x][y] == 0.0) continue;
                double dot = 0.0;
                for (int k = 0; k < d; ++k) dot += s.u[x][k] * s.v[y][k];
                val += G[x][y] * dot;
            }
        return val;
    };

    const int restarts = std::max(opt.restarts, 1);
    struct Run {
        double value = -1e300;
        VectorStrategy vectors;
        std::vector<double> trace;
    };
    std::vector<Run> runs(restarts);

    auto one_restart = [&](int restart) {
        CounterRng rng(seed, static_cast<std::uint64_t>(restart) << 32);
        VectorStrategy s;
        s.d = d;
        s.u.assign(rows, std::vector<double>(d));
        s.v.assign(cols, std::vector<double>(d));
        for (auto& u : s.u) random_unit(u, rng);
        for (auto& v : s.v) random_unit(v, rng);

        std::vector<double> trace;
        double prev = objective(s);
        trace.push_back(prev);
        std::vector<double> dir(d);
        for (int it = 0; it < opt.max_iters; ++it) {
            // u_x <- direction of sum_y G[x][y] v_y
            for (std::size_t x = 0; x < rows; ++x) {
                std::fill(dir.begin(), dir.end(), 0.0);
                for (std::size_t y = 0; y < cols; ++y) {
                    const double g = G[x][y];
                    if (g == 0.0) continue;
                    for (int k = 0; k < d; ++k) dir[k] += g * s.v[y][k];
                }
                const double n = norm(dir);
                if (n > 1e-300)
                    for (int k = 0; k < d; ++k) s.u[x][k] = dir[k] / n;
            }
            // v_y <- direction of sum_x G[x][y] u_x
            for (std::size_t y = 0; y < cols; ++y) {
                std::fill(dir.begin(), dir.end(), 0.0);
                for (std::size_t x = 0; x < rows; ++x) {
                    const double g = G[x][y];
                    if (g == 0.0) continue;
                    for (int k = 0; k < d; ++k) dir[k] += g * s.u[x][k];
                }
                const double n = norm(dir);
                if (n > 1e-300)
                    for (int k = 0; k < d; ++k) s.v[y][k] = dir[k] / n;
            }
            const double val = objective(s);
            trace.push_back(val);
            if (val - prev < opt.improve_tol) {
                prev = val;
                break;
            }
            prev = val;
        }
        runs[restart] = {prev, std::move(s), std::move(trace)};
    };

    const int threads = std::min(std::max(opt.threads, 1), restarts);
    if (threads == 1) {
        for (int r = 0; r < restarts; ++r) one_restart(r);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int r = next.fetch_add(1); r < restarts; r = next.fetch_add(1))
                    one_restart(r);
            });
        for (auto& th : pool) th.join();
    }

    // merge by value, earliest restart wins ties: independent of thread count
    int winner = 0;
    for (int r = 1; r < restarts; ++r)
        if (runs[r].value > runs[winner].value) winner = r;
    best.value = runs[winner].value;
    best.vectors = std::move(runs[winner].vectors);
    best.trace = std::move(runs[winner].trace);
    return best;
}

} // namespace nlg
