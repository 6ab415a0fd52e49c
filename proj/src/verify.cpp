#include "nlg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlg/builtins.hpp"
#include "nlg/classical.hpp"
#include "nlg/noshared.hpp"
#include "nlg/quantum.hpp"

namespace nlg {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(10);
    s << v;
    return s.str();
}

std::string fmt(const Rat& v) { return rat_to_string(v) + " = " + fmt(to_double(v)); }

// Max over deterministic strategies of the value under a numeric symmetric
// distribution (binary inputs); used for validator ratios only.
double max_deterministic_value_numeric(const Game& g, const SymmetricDistribution& p) {
    const std::vector<double> pi = expand_symmetric(p);
    const std::uint64_t count = std::uint64_t{1} << strategy_bits(g);
    double best = -1.0;
    for (std::uint64_t e = 0; e < count; ++e) {
        const DeterministicStrategy s = strategy_from_encoding(g, e);
        double v = 0.0;
        for (int x = 0; x < g.num_inputs(); ++x)
            v += pi[x] * deterministic_value(g, s, x);
        best = std::max(best, v);
    }
    return best;
}

struct ValueTriple {
    std::string label;
    int players;
    double classical;
    double quantum;
    double tol; // numeric tolerance of the quantum estimate
};

class Runner {
public:
    explicit Runner(const VerifyOptions& opt) : opt_(opt) {
        eopt_.threads = opt.threads;
    }

    std::vector<CheckResult> run() {
        if (enabled("chsh")) chsh_checks();
        if (enabled("ma")) ma_checks();
        if (enabled("ee")) ee_checks();
        if (enabled("nand")) nand_checks();
        if (enabled("nmaj")) nmaj_checks();
        if (enabled("orand")) orand_checks();
        if (enabled("validators")) validator_checks();
        return std::move(results_);
    }

private:
    VerifyOptions opt_;
    EnumerationOptions eopt_;
    std::vector<CheckResult> results_;
    std::vector<ValueTriple> triples_;

    bool enabled(const std::string& group) const {
        return opt_.only.empty() || group.find(opt_.only) != std::string::npos;
    }

    void add(const std::string& group, const std::string& name, bool pass,
             const std::string& computed, const std::string& expected) {
        results_.push_back({group, name, computed, expected, pass});
    }

    void add_exact(const std::string& group, const std::string& name, const Rat& computed,
                   const Rat& expected) {
        add(group, name, computed == expected, fmt(computed), fmt(expected));
    }

    void add_close(const std::string& group, const std::string& name, double computed,
                   double expected, double tol) {
        add(group, name, std::abs(computed - expected) <= tol, fmt(computed),
            fmt(expected) + " +- " + fmt(tol));
    }

    // Worst-distribution certificate: caps every deterministic strategy and
    // the cap is attained.
    void add_cap_check(const std::string& group, const std::string& name, const Game& g,
                       const Distribution& d, const Rat& value) {
        validate_distribution(g, d);
        const Rat best = max_deterministic_value(g, d, eopt_);
        add(group, name, best == value, fmt(best), fmt(value));
    }

    // Strategy-mix certificate: achieves exactly the value on every input.
    void add_mix_check(const std::string& group, const std::string& name, const Game& g,
                       const MixedStrategy& mix, const Rat& value) {
        bool ok = true;
        for (int x = 0; x < g.num_inputs() && ok; ++x)
            ok = mixed_value_on_input(g, mix, x) == value;
        add(group, name, ok, ok ? "holds on every input" : "violated", fmt(value));
    }

    void chsh_checks() {
        const Game g = build_chsh();
        const Rat half = rat(1, 2);

        add_exact("chsh", "uniform classical value",
                  classical_fixed(g, uniform_distribution(g), eopt_).value, half);

        const ClassicalReport worst = classical_worst(g, eopt_);
        add_exact("chsh", "worst-case classical value", worst.value, half);
        bool uniform_dist = true;
        for (const Rat& w : worst.worst_distribution->w) uniform_dist &= w == rat(1, 4);
        add("chsh", "worst distribution is uniform", uniform_dist,
            uniform_dist ? "uniform" : "not uniform", "uniform");

        const MixedStrategy mix = chsh_mix();
        add_mix_check("chsh", "four-strategy mix achieves 1/2 on every input", g, mix, half);
        bool loses_one = true;
        for (const auto& [w, s] : mix.atoms) {
            (void)w;
            int losses = 0;
            for (int x = 0; x < g.num_inputs(); ++x) losses += deterministic_value(g, s, x) < 0;
            loses_one &= losses == 1;
        }
        add("chsh", "each mix strategy loses on exactly one input", loses_one,
            loses_one ? "1 loss each" : "unexpected loss pattern", "1 loss each");

        const SymmetricXorCoeffs c = symmetric_coeffs(g);
        const QuantumReport uq =
            quantum_symmetric_fixed(c, aggregate_symmetric(g, uniform_distribution(g)));
        add_close("chsh", "uniform quantum value", uq.upper, kInvSqrt2, 1e-6);

        const QuantumReport wq = quantum_symmetric_worst(c);
        add_close("chsh", "worst-case quantum value", wq.upper, kInvSqrt2, 1e-5);
        add_close("chsh", "worst quantum distribution p1", wq.worst_p->p[1], 0.5, 1e-2);

        const QuantumReport ascent = quantum_2xor_fixed(g, uniform_distribution(g), opt_.seed);
        add("chsh", "vector ascent reaches the uniform quantum value",
            ascent.lower >= kInvSqrt2 - 1e-4, fmt(ascent.lower), ">= " + fmt(kInvSqrt2 - 1e-4));

        add("chsh", "no-shared-randomness dichotomy", !xor_dichotomy(g).perfect,
            "no perfect strategy", "no perfect strategy");

        triples_.push_back({"chsh uniform", 2, 0.5, uq.upper, 1e-8});
    }

    void ma_checks() {
        for (int n = 2; n <= 5; ++n) {
            const Game g = build_ma(n);
            const ClassicalReport worst = classical_worst(g, eopt_);
            const ClosedFormClassical cf = closed_form_classical("ma", n);
            if (n % 2 == 0) {
                add_exact("ma", "worst-case classical value, n=" + std::to_string(n),
                          worst.value, *cf.exact);
            } else {
                const bool inside = to_double(worst.value) >= cf.lo - 1e-12 &&
                                    worst.value <= *cf.exact_hi;
                add("ma",
                    "worst-case classical value inside the known interval, n=" +
                        std::to_string(n) + " (computed, not a closed form)",
                    inside, fmt(worst.value),
                    "[" + fmt(cf.lo) + ", " + fmt(*cf.exact_hi) + "]");
            }

            const SymmetricXorCoeffs c = symmetric_coeffs(g);
            const QuantumReport uq =
                quantum_symmetric_fixed(c, uniform_symmetric_distribution(n));
            add_close("ma", "uniform quantum value, n=" + std::to_string(n), uq.upper,
                      kInvSqrt2, 1e-6);
            const QuantumReport wq = quantum_symmetric_worst(c);
            add_close("ma", "worst-case quantum value, n=" + std::to_string(n), wq.upper,
                      kInvSqrt2, 1e-5);

            const Rat uni_cls = classical_fixed(g, uniform_distribution(g), eopt_).value;
            add_exact("ma", "uniform classical value, n=" + std::to_string(n), uni_cls,
                      pow2_rat(-(n / 2)));
            triples_.push_back({"ma" + std::to_string(n) + " uniform", n, to_double(uni_cls),
                                uq.upper, 1e-8});
        }
    }

    void ee_checks() {
        for (int m = 3; m <= 8; ++m) {
            const std::string tag = ", m=" + std::to_string(m);
            const Game g = build_ee(m);
            const Rat cf = *closed_form_classical("ee", m).exact;

            add_exact("ee", "worst-case classical value" + tag,
                      classical_worst(g, eopt_).value, cf);
            add_mix_check("ee", "strategy mix achieves the value on every input" + tag,
                          g, ee_mix(m), cf);
            add_cap_check("ee", "worst distribution caps every strategy" + tag, g,
                          ee_worst_dist(m), cf);

            const QuantumReport qb = ee_quantum_bounds(m);
            if (m % 2 == 0)
                add_exact("ee", "quantum worst-case equals classical" + tag, *qb.exact_upper,
                          cf);
            else
                add("ee", "quantum worst-case bracket" + tag,
                    *qb.exact_lower == cf && *qb.exact_lower <= *qb.exact_upper,
                    "[" + rat_to_string(*qb.exact_lower) + ", " +
                        rat_to_string(*qb.exact_upper) + "]",
                    "lower = classical value");
        }

        for (int m = 4; m <= 6; ++m) {
            const std::string tag = ", m=" + std::to_string(m);
            const Game g = build_ee(m);
            const Rat uni = classical_fixed(g, uniform_distribution(g), eopt_).value;
            add_exact("ee", "uniform classical value" + tag, uni, rat(m - 2, m));

            const QuantumReport uq =
                quantum_2xor_fixed(g, uniform_distribution(g), opt_.seed);
            add("ee", "uniform quantum bracket contains (m-2)/m" + tag,
                uq.lower >= to_double(uni) - 1e-3 && uq.upper <= to_double(uni) + 1e-9,
                "[" + fmt(uq.lower) + ", " + fmt(uq.upper) + "]", fmt(uni) + " +- 1e-3");
            triples_.push_back({"ee" + std::to_string(m) + " uniform", 2, to_double(uni),
                                uq.upper, 1e-8});
        }

        // alpha/beta family: both regimes, cross-checked against enumeration.
        for (int m = 4; m <= 6; ++m) {
            const std::string tag = ", m=" + std::to_string(m);
            const Game g = build_ee(m);
            const Rat top = rat(1, static_cast<long>(m) * (m - 1));
            const Rat threshold = rat(2, static_cast<long>(m) * (3 * m - 4));

            const Rat beta_hi = (threshold + top) / 2;
            const QuantumReport hi = ee_alphabeta_value(m, beta_hi);
            add_exact("ee", "alpha/beta value above threshold" + tag, *hi.exact_upper,
                      2 * beta_hi * (m - 1) * m - 1);
            add_exact("ee", "alpha/beta classical cross-check above threshold" + tag,
                      max_deterministic_value(g, alphabeta_dist(m, beta_hi), eopt_),
                      *hi.exact_upper);

            const Rat beta_lo = threshold / 2;
            const QuantumReport lo = ee_alphabeta_value(m, beta_lo);
            if (m % 2 == 0) {
                add_exact("ee", "alpha/beta value below threshold" + tag, *lo.exact_upper,
                          1 - beta_lo * (m - 2) * m);
                add_exact("ee", "alpha/beta classical cross-check below threshold" + tag,
                          max_deterministic_value(g, alphabeta_dist(m, beta_lo), eopt_),
                          *lo.exact_upper);
            } else {
                const Rat cls = max_deterministic_value(g, alphabeta_dist(m, beta_lo), eopt_);
                add("ee", "alpha/beta bracket below threshold (odd m)" + tag,
                    *lo.exact_lower <= cls && cls <= *lo.exact_upper,
                    fmt(cls),
                    "[" + rat_to_string(*lo.exact_lower) + ", " +
                        rat_to_string(*lo.exact_upper) + "]");
            }
        }

        // Directional-norm bound: the quadratic coefficient vanishes for
        // even m and is negative for odd m at the worst-case parameters.
        {
            const auto [a4, b4] = alphabeta_params(4);
            const Rat at0 = ee_tsirelson_bound_sq(4, a4, b4, Rat(0));
            const Rat atm = ee_tsirelson_bound_sq(4, a4, b4, Rat(4));
            add_exact("ee", "norm-bound coefficient vanishes, m=4", atm - at0, Rat(0));

            const auto [a5, b5] = alphabeta_params(5);
            const Rat coeff =
                ee_tsirelson_bound_sq(5, a5, b5, Rat(1)) - ee_tsirelson_bound_sq(5, a5, b5, Rat(0));
            add_exact("ee", "norm-bound coefficient, m=5", coeff,
                      rat(-4, static_cast<long>(4 * 4) * (14 * 14)));

            const Rat beta0 = ee_tsirelson_bound_sq(5, rat(1, 5), Rat(0), Rat(5));
            add_exact("ee", "norm-bound at beta=0 is (m*alpha)^2", beta0, Rat(1));
        }

        add("ee", "dichotomy finds a perfect strategy for m=2",
            xor_dichotomy(build_ee(2)).perfect, "perfect strategy", "perfect strategy");
    }

    static std::pair<Rat, Rat> alphabeta_params(int m) {
        const Rat alpha = m % 2 == 0 ? rat(m - 2, static_cast<long>(m) * (3 * m - 4))
                                     : rat(m - 1, static_cast<long>(m) * (3 * m - 1));
        const Rat beta = m % 2 == 0 ? rat(2, static_cast<long>(m) * (3 * m - 4))
                                    : rat(2, static_cast<long>(m - 1) * (3 * m - 1));
        return {alpha, beta};
    }

    static Distribution alphabeta_dist(int m, const Rat& beta) {
        const Rat alpha = (1 - static_cast<long>(m) * (m - 1) * beta) / m;
        Distribution d;
        d.w.resize(static_cast<std::size_t>(m) * m);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                d.w[static_cast<std::size_t>(x) * m + y] = x == y ? alpha : beta;
        return d;
    }

    void nand_checks() {
        add("nand", "two-party AND coincides with chsh",
            same_table(build_nand(2), build_chsh()), "tables equal", "tables equal");

        for (int n = 2; n <= 6; ++n) {
            const std::string tag = ", n=" + std::to_string(n);
            const Game g = build_nand(n);
            const Rat cf = *closed_form_classical("nand", n).exact;
            add_exact("nand", "worst-case classical value" + tag,
                      classical_worst(g, eopt_).value, cf);
            add_mix_check("nand", "strategy mix achieves the value on every input" + tag, g,
                          nand_mix(n), cf);
            add_cap_check("nand", "worst distribution caps every strategy" + tag, g,
                          nand_worst_dist(n), cf);
        }

        // Limit construction: circle values approach 1/3 from above.
        std::vector<int> ns = {9, 16, 25, 100};
        std::vector<double> v;
        bool sums_ok = true, pn_ok = true;
        for (int n : ns) {
            const SymmetricDistribution p = nand_limit_distribution(n);
            double sum = 0.0;
            for (double x : p.p) sum += x;
            sums_ok &= std::abs(sum - 1.0) <= 1e-12;
            pn_ok &= p.p[n] == 1.0 / 3.0;
            SymmetricXorCoeffs c;
            c.n = n;
            c.c.assign(n + 1, 1);
            c.c[n] = -1;
            v.push_back(quantum_symmetric_fixed(c, p).upper);
        }
        add("nand", "limit distribution normalizes", sums_ok, sums_ok ? "sums to 1" : "sum off",
            "1 within 1e-12");
        add("nand", "limit distribution has p_n = 1/3", pn_ok, pn_ok ? "1/3" : "off", "1/3");
        add("nand", "circle values stay above 1/3",
            *std::min_element(v.begin(), v.end()) >= 1.0 / 3.0 - 1e-9,
            fmt(*std::min_element(v.begin(), v.end())), ">= 1/3 - 1e-9");
        add("nand", "circle values decrease towards 1/3 (n = 9, 25, 100)",
            v[3] < v[2] && v[2] < v[0], fmt(v[0]) + " > " + fmt(v[2]) + " > " + fmt(v[3]),
            "strictly decreasing");

        // Worst-case quantum values sit between the classical value and the
        // uniform quantum value.
        for (int n : {3, 10}) {
            const std::string tag = ", n=" + std::to_string(n);
            SymmetricXorCoeffs c;
            c.n = n;
            c.c.assign(n + 1, 1);
            c.c[n] = -1;
            const QuantumReport wq = quantum_symmetric_worst(c);
            const double cls = to_double(*closed_form_classical("nand", n).exact);
            const QuantumReport uni =
                quantum_symmetric_fixed(c, uniform_symmetric_distribution(n));
            add("nand", "worst-case quantum value within [classical, uniform]" + tag,
                wq.upper >= cls - 1e-6 && wq.lower <= uni.upper + 1e-9,
                "[" + fmt(wq.lower) + ", " + fmt(wq.upper) + "]",
                "[" + fmt(cls) + ", " + fmt(uni.upper) + "]");
        }
    }

    void nmaj_checks() {
        {
            const SymmetricDistribution p1 = nmaj_distribution(1);
            add("nmaj", "k=1 distribution", std::abs(p1.p[0] - 0.5) < 1e-15 &&
                                                std::abs(p1.p[1] - 0.5) < 1e-15,
                fmt(p1.p[0]) + ", " + fmt(p1.p[1]), "1/2, 1/2");
            const SymmetricDistribution p2 = nmaj_distribution(2);
            const double want[4] = {0.125, 0.375, 0.375, 0.125};
            bool ok = true;
            for (int i = 0; i < 4; ++i) ok &= std::abs(p2.p[i] - want[i]) <= 1e-12;
            add("nmaj", "k=2 distribution", ok,
                fmt(p2.p[0]) + ", " + fmt(p2.p[1]) + ", ...", "1/8, 3/8, 3/8, 1/8");
        }

        std::vector<double> gk;
        for (int k : {2, 8, 32}) {
            const int n = 2 * k - 1;
            const SymmetricXorCoeffs c = symmetric_coeffs(build_nmaj(n));
            gk.push_back(quantum_symmetric_fixed(c, nmaj_distribution(k)).upper);
        }
        add("nmaj", "circle value decreases towards 0 (k = 2, 8, 32)",
            gk[0] > gk[1] && gk[1] > gk[2] && gk[2] < gk[0],
            fmt(gk[0]) + " > " + fmt(gk[1]) + " > " + fmt(gk[2]), "strictly decreasing");
    }

    void orand_checks() {
        const Game g = build_or_and();
        add("orand", "losing example: inputs 0,0 with outputs 1,1",
            g.value(0, 0b11) == -1, std::to_string(g.value(0, 0b11)), "-1");

        const ProductWorstResult res = product_worst(g);
        const double target = std::sqrt(5.0) - 2.0;
        const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
        add_close("orand", "no-shared-randomness value", res.value, target, 1e-6);
        add_close("orand", "certificate probability on input 0 (player 1)",
                  res.strategy.q[0][0], golden, 1e-6);
        add_close("orand", "certificate probability on input 0 (player 2)",
                  res.strategy.q[1][0], golden, 1e-6);
        const double p = res.strategy.q[0][0];
        add("orand", "stationarity |1 - p^2 - p|", std::abs(1.0 - p * p - p) <= 1e-9,
            fmt(std::abs(1.0 - p * p - p)), "<= 1e-9");

        add_close("orand", "win probability of the certificate on input 0,0",
                  0.5 + 0.5 * product_value(g, res.strategy, 0), golden, 1e-6);
    }

    void validator_checks() {
        // quantum / classical ratio bound per n-party XOR value pair
        bool all_ww = true;
        std::string worst_label = "none";
        double worst_margin = 1e300;
        for (const ValueTriple& t : triples_) {
            if (t.classical <= 0.0) continue;
            const double margin = werner_wolf_bound(t.players) + 1e-9 + t.tol / t.classical -
                                  t.quantum / t.classical;
            if (margin < 0) all_ww = false;
            if (margin < worst_margin) {
                worst_margin = margin;
                worst_label = t.label;
            }
        }
        add("validators", "quantum/classical ratio bound on all computed pairs", all_ww,
            "tightest at " + worst_label, "ratio <= 2^((n-1)/2) + 1e-9");

        // worst-case <= fixed-distribution, classical <= quantum
        bool order_ok = true;
        std::ostringstream detail;
        {
            const Rat chsh_worst = classical_worst(build_chsh(), eopt_).value;
            const Rat chsh_uni =
                classical_fixed(build_chsh(), uniform_distribution(build_chsh()), eopt_).value;
            order_ok &= chsh_worst <= chsh_uni;
            order_ok &= to_double(chsh_worst) <= kInvSqrt2 + 1e-9;
            for (int m : {3, 4, 5, 6}) {
                const Game g = build_ee(m);
                const Rat worst = classical_worst(g, eopt_).value;
                const Rat uni = classical_fixed(g, uniform_distribution(g), eopt_).value;
                order_ok &= worst <= uni;
                order_ok &= worst <= ee_quantum_bounds(m).exact_upper.value() ||
                            to_double(worst) <= ee_quantum_bounds(m).upper + 1e-9;
            }
            for (int n : {2, 3, 4}) {
                const Game g = build_nand(n);
                const Rat worst = classical_worst(g, eopt_).value;
                const Rat uni = classical_fixed(g, uniform_distribution(g), eopt_).value;
                order_ok &= worst <= uni;
                const QuantumReport wq = quantum_symmetric_worst(symmetric_coeffs(g));
                order_ok &= to_double(worst) <= wq.upper + 1e-9;
            }
        }
        add("validators", "worst <= fixed and classical <= quantum on all computed games",
            order_ok, order_ok ? "all ordered" : "ordering violated", "omega_c <= omega_c^pi, omega_c <= omega_q");

        // no shared randomness <= shared randomness
        const double orand_hat = product_worst(build_or_and()).value;
        const Rat orand_cls = classical_worst(build_or_and(), eopt_).value;
        const bool hat_ok = orand_hat <= to_double(orand_cls) + 1e-9;
        add("validators", "no-shared value <= shared value (orand)", hat_ok,
            fmt(orand_hat) + " <= " + fmt(orand_cls), "omega_hat <= omega_c");

        // limit-distribution triple stays inside the ratio bound
        {
            const int n = 9;
            const Game g = build_nand(n);
            const SymmetricDistribution p = nand_limit_distribution(n);
            const double cls = max_deterministic_value_numeric(g, p);
            const double qv = quantum_symmetric_fixed(symmetric_coeffs(g), p).upper;
            const WWStatus st = werner_wolf_check(n, cls, qv);
            add("validators", "ratio bound under the limit distribution (n=9)",
                st != WWStatus::fail, fmt(qv / cls), "<= " + fmt(werner_wolf_bound(n)));
        }
    }
};

} // namespace

std::vector<CheckResult> run_paper_checks(const VerifyOptions& opt) { return Runner(opt).run(); }

} // namespace nlg
