#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlg/ascent.hpp"
#include "nlg/circle.hpp"
#include "nlg/game.hpp"
#include "nlg/minimax_circle.hpp"

namespace nlg {

enum class QuantumMethod { vector_ascent, circle, minimax, closed_form, analytic_bound };

// Quantum values are reported as a [lower, upper] bracket. Heuristic lower
// bounds are never promoted to claimed-exact values; closed forms carry
// exact rational endpoints alongside the doubles.
struct QuantumReport {
    double lower = 0.0;
    double upper = 0.0;
    std::optional<Rat> exact_lower;
    std::optional<Rat> exact_upper;
    std::optional<VectorStrategy> vectors;
    std::optional<SymmetricDistribution> worst_p;
    std::vector<CirclePoint> support;
    QuantumMethod method = QuantumMethod::vector_ascent;
    std::string note;
    bool converged = true;
};

// Two-player XOR value for a fixed distribution via alternating vector
// ascent (lower bound); the upper bound tightens to the circle value for
// symmetric binary-input games and to the analytic bound for EQUAL-EQUAL
// games under an alpha/beta distribution.
QuantumReport quantum_2xor_fixed(const Game& g, const Distribution& pi, std::uint64_t seed,
                                 const AscentOptions& opt = {});

// Symmetric binary-input XOR value for a fixed weight-class distribution:
// the circle maximum of the weighted coefficients.
QuantumReport quantum_symmetric_fixed(const SymmetricXorCoeffs& c,
                                      const SymmetricDistribution& p,
                                      const CircleOptions& opt = {});

// Worst case over weight-class distributions (symmetric-adversary minimax).
QuantumReport quantum_symmetric_worst(const SymmetricXorCoeffs& c,
                                      const MinimaxOptions& opt = {});

// Worst-case EQUAL-EQUAL bounds: exact for even m, a rational bracket for
// odd m.
QuantumReport ee_quantum_bounds(int m);

// Value of EQUAL-EQUAL under the distribution with weight alpha on diagonal
// and beta off-diagonal inputs, alpha = (1 - m(m-1) beta) / m. Exact in both
// beta regimes; odd m below the threshold yields a rational bracket.
QuantumReport ee_alphabeta_value(int m, const Rat& beta);

// Quadratic bound S^2 <= m^2 (alpha+beta)^2 + s^2 m beta (m beta - 2(alpha+beta))
// on the sum of directional norms; evaluated exactly.
Rat ee_tsirelson_bound_sq(int m, const Rat& alpha, const Rat& beta, const Rat& s_norm);

// Weight-class distribution p_n = 1/3, p_i = p q^{n-i} with q = e^{-1/sqrt(n)},
// driving the n-party AND circle value towards 1/3 from above.
SymmetricDistribution nand_limit_distribution(int n);

// Weight-class distribution p_i = r_i / s with r_i = 1/(2k-1-2i) mirrored,
// driving the (2k-1)-party MAJORITY circle value towards 0.
SymmetricDistribution nmaj_distribution(int k);

enum class WWStatus { pass, fail, not_applicable };

inline double werner_wolf_bound(int n) { return std::pow(2.0, 0.5 * (n - 1)); }

// Checks quantum/classical <= 2^{(n-1)/2} + 1e-9 for an n-party binary-input
// XOR game value pair; non-positive classical values are not applicable.
WWStatus werner_wolf_check(int n, double classical_value, double quantum_value);

} // namespace nlg
