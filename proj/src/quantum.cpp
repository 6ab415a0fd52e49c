#include "nlg/quantum.hpp"

#include <cmath>

#include "nlg/builtins.hpp"
#include "nlg/errors.hpp"

namespace nlg {

namespace {

// Detects a diagonal-alpha / off-diagonal-beta distribution on an m x m
// input space and returns beta.
std::optional<Rat> alphabeta_parameter(const Game& g, const Distribution& pi) {
    if (g.n_players != 2 || g.input_sizes[0] != g.input_sizes[1]) return std::nullopt;
    const int m = g.input_sizes[0];
    const Rat alpha = pi.w[0];
    const Rat beta = m > 1 ? pi.w[1] : Rat(0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (pi.w[static_cast<std::size_t>(x) * m + y] != (x == y ? alpha : beta))
                return std::nullopt;
    return beta;
}

} // namespace

QuantumReport quantum_2xor_fixed(const Game& g, const Distribution& pi, std::uint64_t seed,
                                 const AscentOptions& opt) {
    if (g.n_players != 2) throw shape_mismatch("vector ascent handles two-player games");
    const XorGameView view = xor_view(g);
    validate_distribution(g, pi);

    const int nx = g.input_sizes[0], ny = g.input_sizes[1];
    std::vector<std::vector<double>> G(nx, std::vector<double>(ny));
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) {
            const int idx = x * ny + y;
            G[x][y] = to_double(pi.w[idx]) * view.parity[idx];
        }

    AscentResult ascent = alternating_ascent(G, nx + ny, seed, opt);

    QuantumReport rep;
    rep.method = QuantumMethod::vector_ascent;
    rep.lower = ascent.value;
    rep.upper = 1.0;
    rep.vectors = std::move(ascent.vectors);
    if (ascent.degenerate) rep.note = "degenerate all-zero objective";

    // Symmetric binary-input games: the circle formula pins the value.
    if (g.binary_inputs()) {
        try {
            const SymmetricXorCoeffs c = symmetric_coeffs(g);
            const SymmetricDistribution p = aggregate_symmetric(g, pi);
            const QuantumReport circle = quantum_symmetric_fixed(c, p);
            if (circle.lower > rep.lower) rep.lower = circle.lower;
            if (circle.upper < rep.upper) rep.upper = circle.upper;
            rep.support = circle.support;
            rep.method = QuantumMethod::circle;
        } catch (const not_symmetric&) {
        }
    }

    // EQUAL-EQUAL under an alpha/beta distribution: analytic bounds apply.
    if (const auto id = match_builtin(g); id && id->first == "ee") {
        if (const auto beta = alphabeta_parameter(g, pi)) {
            const QuantumReport bound = ee_alphabeta_value(id->second.value_or(0), *beta);
            if (bound.upper < rep.upper) {
                rep.upper = bound.upper;
                rep.exact_upper = bound.exact_upper;
                rep.method = QuantumMethod::analytic_bound;
                rep.note = "upper bound from the alpha/beta analysis";
            }
            if (bound.lower > rep.lower) rep.lower = bound.lower;
        }
    }
    return rep;
}

QuantumReport quantum_symmetric_fixed(const SymmetricXorCoeffs& c, const SymmetricDistribution& p,
                                      const CircleOptions& opt) {
    if (c.c.size() != p.p.size()) throw shape_mismatch("coefficients and distribution lengths differ");
    double sum = 0.0;
    for (double v : p.p) {
        if (v < -1e-12) throw error("weight-class probabilities must be non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw error("weight-class probabilities sum to " + std::to_string(sum) + ", not 1");

    std::vector<std::complex<double>> gamma(c.c.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = {p.p[i] * c.c[i], 0.0};
    const CirclePoint z = max_modulus_on_circle(gamma, opt);

    QuantumReport rep;
    rep.method = QuantumMethod::circle;
    rep.lower = z.modulus - opt.tol;
    rep.upper = z.modulus + opt.tol;
    rep.support = {z};
    return rep;
}

QuantumReport quantum_symmetric_worst(const SymmetricXorCoeffs& c, const MinimaxOptions& opt) {
    const MinimaxResult res = minimax_circle(c, opt);
    QuantumReport rep;
    rep.method = QuantumMethod::minimax;
    rep.lower = res.lower;
    rep.upper = res.upper;
    rep.worst_p = res.dist;
    rep.support = res.support;
    rep.converged = res.converged;
    rep.note = "symmetric-adversary minimax";
    return rep;
}

QuantumReport ee_quantum_bounds(int m) {
    if (m < 2) throw error("ee bounds need m >= 2");
    QuantumReport rep;
    rep.method = QuantumMethod::closed_form;
    if (m % 2 == 0) {
        rep.exact_lower = rep.exact_upper = rat(m, 3 * m - 4);
    } else {
        rep.exact_lower = rat(m + 1, 3 * m - 1);
        rep.exact_upper = rat(static_cast<long>(m) * m + 1,
                              static_cast<long>(3 * m - 1) * (m - 1));
    }
    rep.lower = to_double(*rep.exact_lower);
    rep.upper = to_double(*rep.exact_upper);
    return rep;
}

Rat ee_tsirelson_bound_sq(int m, const Rat& alpha, const Rat& beta, const Rat& s_norm) {
    const Rat ab = alpha + beta;
    const Rat mm(static_cast<long>(m));
    return mm * mm * ab * ab + s_norm * s_norm * mm * beta * (mm * beta - 2 * ab);
}

QuantumReport ee_alphabeta_value(int m, const Rat& beta) {
    if (m < 2) throw error("ee analysis needs m >= 2");
    const Rat top = rat(1, static_cast<long>(m) * (m - 1));
    if (beta < 0 || beta > top)
        throw error("beta must lie in [0, 1/(m(m-1))], got " + rat_to_string(beta));
    const Rat threshold = rat(2, static_cast<long>(m) * (3 * m - 4));

    QuantumReport rep;
    rep.method = QuantumMethod::closed_form;
    if (beta >= threshold) {
        rep.exact_lower = rep.exact_upper = 2 * beta * (m - 1) * m - 1;
    } else if (m % 2 == 0) {
        rep.exact_lower = rep.exact_upper = 1 - beta * (m - 2) * m;
    } else {
        rep.exact_lower = 1 - beta * (m - 1) * (m - 1);
        rep.exact_upper = 1 - beta * (m - 2) * m;
        rep.note = "odd m below threshold: rational bracket";
    }
    rep.lower = to_double(*rep.exact_lower);
    rep.upper = to_double(*rep.exact_upper);
    return rep;
}

SymmetricDistribution nand_limit_distribution(int n) {
    if (n < 2) throw error("limit distribution needs n >= 2");
    const double q = std::exp(-1.0 / std::sqrt(static_cast<double>(n)));
    const double p = (2.0 / 3.0) * (1.0 - q) / (q * (1.0 - std::pow(q, n)));
    SymmetricDistribution s;
    s.p.resize(n + 1);
    for (int i = 0; i < n; ++i) s.p[i] = p * std::pow(q, n - i);
    s.p[n] = 1.0 / 3.0;
    return s;
}

SymmetricDistribution nmaj_distribution(int k) {
    if (k < 1) throw error("majority distribution needs k >= 1");
    const int n = 2 * k - 1;
    std::vector<double> r(n + 1);
    for (int i = 0; i < k; ++i) {
        r[i] = 1.0 / (2 * k - 1 - 2 * i);
        r[n - i] = r[i];
    }
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += 1.0 / (2 * i - 1);
    s *= 2.0;
    SymmetricDistribution out;
    out.p.resize(n + 1);
    for (int i = 0; i <= n; ++i) out.p[i] = r[i] / s;
    return out;
}

WWStatus werner_wolf_check(int n, double classical_value, double quantum_value) {
    if (classical_value <= 0.0) return WWStatus::not_applicable;
    return quantum_value / classical_value <= werner_wolf_bound(n) + 1e-9 ? WWStatus::pass
                                                                          : WWStatus::fail;
}

} // namespace nlg
