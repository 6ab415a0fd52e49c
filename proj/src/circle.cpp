#include "nlg/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlg/errors.hpp"

namespace nlg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Golden-section maximization of f over [a, b] down to interval width w.
template <typename F>
std::pair<double, double> golden_max(F f, double a, double b, double w) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > w) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

} // namespace

double circle_modulus(std::span<const std::complex<double>> gamma, double theta) {
    const std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = gamma.size(); k-- > 0;) acc = acc * z + gamma[k];
    return std::abs(acc);
}

CirclePoint max_modulus_on_circle(std::span<const std::complex<double>> gamma,
                                  const CircleOptions& opt) {
    if (gamma.empty()) throw error("coefficient list must be non-empty");
    const int n = std::max(opt.grid, 16);
    std::vector<double> f(n);
    for (int k = 0; k < n; ++k) f[k] = circle_modulus(gamma, kTwoPi * k / n);

    // Refinement window: curvature is bounded by sum k^2 |gamma_k|.
    double curv = 0.0;
    for (std::size_t k = 0; k < gamma.size(); ++k)
        curv += static_cast<double>(k) * static_cast<double>(k) * std::abs(gamma[k]);
    const double width = std::min(1e-8, std::sqrt(8.0 * opt.tol / std::max(curv, 1.0)));

    CirclePoint best;
    best.theta = 0.0;
    best.modulus = f[0];
    for (int k = 0; k < n; ++k) {
        const double prev = f[(k + n - 1) % n];
        const double next = f[(k + 1) % n];
        if (f[k] < prev || f[k] < next) continue; // not a local maximum on the grid
        const double a = kTwoPi * (k - 1) / n;
        const double b = kTwoPi * (k + 1) / n;
        auto [theta, val] = golden_max(
            [&](double t) { return circle_modulus(gamma, t); }, a, b, width);
        if (val > best.modulus) {
            best.modulus = val;
            best.theta = theta;
        }
    }
    best.theta = std::fmod(best.theta + kTwoPi, kTwoPi);
    return best;
}

} // namespace nlg
