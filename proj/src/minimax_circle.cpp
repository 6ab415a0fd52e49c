#include "nlg/minimax_circle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "nlg/errors.hpp"
#include "nlg/simplex.hpp"

namespace nlg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kScale = 281474976710656.0; // 2^48, LP quantization

struct Cut {
    double theta;
    double phi;
};

std::vector<std::complex<double>> weighted_coeffs(const SymmetricXorCoeffs& c,
                                                  const std::vector<double>& p) {
    std::vector<std::complex<double>> gamma(c.c.size());
    for (std::size_t i = 0; i < gamma.size(); ++i)
        gamma[i] = std::complex<double>(p[i] * c.c[i], 0.0);
    return gamma;
}

} // namespace

MinimaxResult minimax_circle(const SymmetricXorCoeffs& c, const MinimaxOptions& opt) {
    const std::size_t m = c.c.size();
    if (m == 0 || static_cast<int>(m) != c.n + 1)
        throw error("coefficient vector must have n+1 entries");
    for (std::int8_t s : c.c)
        if (s != 1 && s != -1) throw error("coefficients must be +1 or -1");

    const int K = std::max(opt.rotations, 4);
    CircleOptions circle_opt;
    circle_opt.grid = opt.grid;
    circle_opt.tol = std::min(1e-9, opt.tol / 16);

    std::vector<Cut> cuts;
    auto add_fan = [&](double theta) {
        for (int k = 0; k < K; ++k) cuts.push_back({theta, kTwoPi * k / K});
    };
    // With real coefficients the cut at the conjugate point coincides with
    // this one entrywise, so a single row covers both.
    auto add_exact = [&](double theta, double phi) {
        for (const Cut& q : cuts)
            if (std::abs(q.theta - theta) < 1e-13 && std::abs(q.phi - phi) < 1e-13) return;
        cuts.push_back({theta, phi});
    };
    add_fan(0.0);

    auto build_and_solve = [&]() {
        std::vector<std::int64_t> rows(cuts.size() * m);
        for (std::size_t r = 0; r < cuts.size(); ++r)
            for (std::size_t i = 0; i < m; ++i) {
                const double e = c.c[i] * std::cos(static_cast<double>(i) * cuts[r].theta -
                                                   cuts[r].phi);
                rows[r * m + i] = std::llround(e * kScale);
            }
        return solve_zero_sum_scaled(cuts.size(), m, rows.data(),
                                     Int(static_cast<long>(1) << 48));
    };

    MinimaxResult res;
    res.dist.p.assign(m, 1.0 / static_cast<double>(m));
    double best_upper = 1e300;
    std::vector<double> best_p(m, 1.0 / static_cast<double>(m));

    // Seed with the maximizer under the uniform distribution.
    {
        const CirclePoint z0 = max_modulus_on_circle(weighted_coeffs(c, best_p), circle_opt);
        add_fan(z0.theta);
    }

    int iter = 0;
    double lower = 0.0;
    for (; iter < opt.max_outer; ++iter) {
        const ZeroSumSolution lp = build_and_solve();
        lower = to_double(lp.value) - 1e-12; // quantization slack
        std::vector<double> p(m);
        for (std::size_t i = 0; i < m; ++i) p[i] = to_double(lp.col_mix[i]);

        const auto gamma = weighted_coeffs(c, p);
        const CirclePoint zstar = max_modulus_on_circle(gamma, circle_opt);
        const double upper = zstar.modulus + circle_opt.tol;
        if (upper < best_upper) {
            best_upper = upper;
            best_p = p;
        }
        if (best_upper - lower <= opt.tol) {
            res.converged = true;
            ++iter;
            break;
        }
        // Separate: rotation fan plus the exact phase of the violation.
        std::complex<double> val(0.0, 0.0);
        const std::complex<double> z = std::polar(1.0, zstar.theta);
        for (std::size_t i = gamma.size(); i-- > 0;) val = val * z + gamma[i];
        add_exact(zstar.theta, std::arg(val));
        bool fresh = true;
        for (std::size_t r = 0; r + 1 < cuts.size(); ++r)
            if (std::abs(cuts[r].theta - zstar.theta) < 1e-6 && cuts[r].phi == 0.0) fresh = false;
        if (fresh) add_fan(zstar.theta);
    }

    res.lower = lower;
    res.upper = best_upper;
    res.dist.p = best_p;
    res.iterations = iter;

    // Near-active circle points under the returned distribution.
    const auto gamma = weighted_coeffs(c, best_p);
    std::vector<double> seen;
    for (const Cut& q : cuts) {
        bool dup = false;
        for (double t : seen)
            if (std::abs(t - q.theta) < 1e-7) dup = true;
        if (dup) continue;
        seen.push_back(q.theta);
        const double mod = circle_modulus(gamma, q.theta);
        if (mod >= best_upper - 64 * opt.tol)
            res.support.push_back({q.theta, mod});
    }
    std::sort(res.support.begin(), res.support.end(),
              [](const CirclePoint& a, const CirclePoint& b) { return a.theta < b.theta; });
    return res;
}

} // namespace nlg
