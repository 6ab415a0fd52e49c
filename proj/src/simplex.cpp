#include "nlg/simplex.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <type_traits>

#include "nlg/errors.hpp"

namespace nlg {

namespace {

using i128 = __int128;

// Solves  min 1'u  s.t.  P'u - s = D*1, u >= 0, s >= 0  where P = N + sigma
// is the positively shifted payoff matrix. The optimum gives the game value
// of N/D as 1/sum(u) - sigma/D, u/sum(u) as the row mix and the constraint
// duals (scaled by D) as the column mix.
//
// The basis inverse is kept fraction-free: W = det(B) * B^{-1} stays integral
// under the pivot update W'_i = (tau_r * W_i - tau_i * W_r) / det(B).
template <typename TEntry>
class GameSimplex {
public:
    GameSimplex(std::size_t rows, std::size_t cols, const TEntry* entries, Int denom)
        : R(rows), C(cols), N(entries), D(std::move(denom)) {
        if (R == 0 || C == 0) throw error("zero-sum payoff matrix must be non-empty");
        if (D <= 0) throw error("denominator must be positive");
        if constexpr (std::is_integral_v<TEntry>) {
            const std::int64_t limit = std::int64_t{1} << 61;
            std::int64_t mx = 0;
            for (std::size_t k = 0; k < R * C; ++k) {
                const std::int64_t e = static_cast<std::int64_t>(N[k]);
                if (e <= -limit || e >= limit) throw error("payoff entries too large");
                mx = std::max(mx, e < 0 ? -e : e);
            }
            sigma64 = mx + 1;
            sigma = Int(static_cast<long>(sigma64));
        } else {
            Int mx(0);
            for (std::size_t k = 0; k < R * C; ++k) {
                Int a = abs(Int(N[k]));
                if (a > mx) mx = a;
            }
            sigma = mx + 1;
            sigma64 = 0;
        }
        n_cols_total = R + 2 * C;
        basis.resize(C);
        in_basis.assign(n_cols_total, false);
        W.assign(C * C, Int(0));
        for (std::size_t r = 0; r < C; ++r) {
            basis[r] = R + C + r; // artificial start basis
            in_basis[R + C + r] = true;
            W[r * C + r] = 1;
        }
        lambda = 1;
        artificial_left.assign(C, false);

        // Large games run with a lazily exposed working set of strategy
        // columns; optimality is still proven by full pricing passes.
        lazy = R > 8 * C && R > 256;
        active.assign(R, !lazy);
        if (lazy) {
            for (std::size_t c = 0; c < C; ++c) {
                std::size_t best = 0;
                for (std::size_t r = 1; r < R; ++r)
                    if (entry_cmp(r, best, c) > 0) best = r;
                active[best] = true;
            }
            // a spread of additional seed rows keeps phase 1 short
            const std::size_t stride = std::max<std::size_t>(1, R / C);
            for (std::size_t k = 0; k < C; ++k) active[(k * stride) % R] = true;
        }
    }

    ZeroSumSolution solve() {
        run_phase(1);
        if (phase_objective(1) != 0) throw error("internal: phase 1 did not reach feasibility");
        expel_artificials();
        run_phase(2);
        return extract();
    }

private:
    std::size_t R, C, n_cols_total;
    const TEntry* N;
    Int D;
    Int sigma;
    std::int64_t sigma64;

    std::vector<std::size_t> basis;
    std::vector<bool> in_basis;
    std::vector<bool> artificial_left; // artificials may never re-enter
    std::vector<Int> W; // C x C, row-major
    Int lambda;
    long pivots = 0;
    bool lazy = false;
    std::vector<bool> active; // structural columns exposed to pricing

    int entry_cmp(std::size_t r1, std::size_t r2, std::size_t c) const {
        if constexpr (std::is_integral_v<TEntry>) {
            return (N[r1 * C + c] > N[r2 * C + c]) - (N[r1 * C + c] < N[r2 * C + c]);
        } else {
            return cmp(N[r1 * C + c], N[r2 * C + c]);
        }
    }

    bool is_structural(std::size_t j) const { return j < R; }
    bool is_surplus(std::size_t j) const { return j >= R && j < R + C; }
    bool is_artificial(std::size_t j) const { return j >= R + C; }

    int column_cost(std::size_t j, int phase) const {
        if (phase == 1) return is_artificial(j) ? 1 : 0;
        return is_structural(j) ? 1 : 0;
    }

    // P entry for structural column j at constraint row c.
    Int p_entry(std::size_t j, std::size_t c) const { return Int(N[j * C + c]) + sigma; }

    // x_B numerators over lambda: Wb_r = D * sum_c W[r][c].
    std::vector<Int> basic_numerators() const {
        std::vector<Int> wb(C, Int(0));
        for (std::size_t r = 0; r < C; ++r) {
            Int s(0);
            for (std::size_t c = 0; c < C; ++c) s += W[r * C + c];
            wb[r] = s * D;
        }
        return wb;
    }

    // ytil = c_B' W, the dual numerators over lambda.
    std::vector<Int> dual_numerators(int phase) const {
        std::vector<Int> y(C, Int(0));
        for (std::size_t r = 0; r < C; ++r) {
            if (column_cost(basis[r], phase) == 0) continue;
            for (std::size_t c = 0; c < C; ++c) y[c] += W[r * C + c];
        }
        return y;
    }

    Rat phase_objective(int phase) const {
        const std::vector<Int> wb = basic_numerators();
        Int num(0);
        for (std::size_t r = 0; r < C; ++r)
            if (column_cost(basis[r], phase) == 1) num += wb[r];
        return rat(num, lambda);
    }

    // Reduced-cost numerator over lam for column j: c_j*lam - ytil'A_j.
    Int reduced_cost_num(std::size_t j, const std::vector<Int>& ytil, const Int& ytil_sum,
                         int phase, const Int& lam) const {
        Int num = Int(column_cost(j, phase)) * lam;
        if (is_structural(j)) {
            Int dot(0);
            if constexpr (std::is_integral_v<TEntry>) {
                for (std::size_t c = 0; c < C; ++c) {
                    const std::int64_t e = static_cast<std::int64_t>(N[j * C + c]);
                    if (e > 0)
                        mpz_addmul_ui(dot.get_mpz_t(), ytil[c].get_mpz_t(),
                                      static_cast<unsigned long>(e));
                    else if (e < 0)
                        mpz_submul_ui(dot.get_mpz_t(), ytil[c].get_mpz_t(),
                                      static_cast<unsigned long>(-e));
                }
                dot += ytil_sum * sigma;
            } else {
                for (std::size_t c = 0; c < C; ++c) dot += ytil[c] * p_entry(j, c);
            }
            num -= dot;
        } else if (is_surplus(j)) {
            num += ytil[j - R];
        } else {
            num -= ytil[j - R - C];
        }
        return num;
    }

    // Entering column, or n_cols_total if the phase is optimal. Uses Dantzig
    // unless bland is set; an int64 fast path covers the common case where
    // the dual numerators are small.
    // The duals in lowest terms are usually tiny even when det(B) is huge;
    // stripping the common content keeps pricing in 64-bit.
    std::pair<std::vector<Int>, Int> reduced_duals(int phase) const {
        std::vector<Int> ytil = dual_numerators(phase);
        Int g = lambda;
        for (const Int& y : ytil) {
            if (g == 1 || g == -1) break;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
        }
        if (g < 0) g = -g;
        Int lambda_red = lambda;
        if (g > 1) {
            for (Int& y : ytil) mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(lambda_red.get_mpz_t(), lambda.get_mpz_t(), g.get_mpz_t());
        }
        return {std::move(ytil), std::move(lambda_red)};
    }

    std::size_t price(int phase, bool bland) {
        const auto [ytil, lambda_red] = reduced_duals(phase);
        Int ytil_sum(0);
        for (const Int& y : ytil) ytil_sum += y;
        const int lam_sign = sgn(lambda);

        if constexpr (std::is_integral_v<TEntry>) {
            std::vector<std::int64_t> y64(C);
            std::int64_t lambda64 = 0;
            bool fast = fits_int64(lambda_red, lambda64);
            std::int64_t max_abs = 0;
            for (std::size_t c = 0; c < C && fast; ++c) {
                fast = fits_int64(ytil[c], y64[c]);
                if (fast) max_abs = std::max<std::int64_t>(max_abs, std::llabs(y64[c]));
            }
            // |dot| <= C * max|y| * (2*sigma). Keep far below 2^126.
            if (fast && max_abs > 0) {
                const long double bound = static_cast<long double>(C) *
                                          static_cast<long double>(max_abs) * 2.0L *
                                          static_cast<long double>(sigma64);
                fast = bound < 1e36L;
            }
            if (fast) {
                std::size_t best = n_cols_total;
                i128 ysum = 0;
                for (std::size_t c = 0; c < C; ++c) ysum += y64[c];
                i128 best_norm = 0;
                for (std::size_t j = 0; j < R + C; ++j) {
                    if (in_basis[j] || (j < R && !active[j])) continue;
                    i128 num;
                    if (j < R) {
                        i128 dot = 0;
                        const TEntry* row = N + j * C;
                        for (std::size_t c = 0; c < C; ++c)
                            dot += static_cast<i128>(y64[c]) * static_cast<std::int64_t>(row[c]);
                        dot += ysum * sigma64;
                        num = static_cast<i128>(column_cost(j, phase)) * lambda64 - dot;
                    } else {
                        num = y64[j - R];
                    }
                    const i128 norm = lam_sign > 0 ? num : -num;
                    if (norm < 0) {
                        if (bland) return j;
                        if (best == n_cols_total || norm < best_norm) {
                            best = j;
                            best_norm = norm;
                        }
                    }
                }
                return best;
            }
        }

        std::size_t best = n_cols_total;
        Int best_norm(0);
        for (std::size_t j = 0; j < R + C; ++j) {
            if (in_basis[j] || (j < R && !active[j])) continue;
            Int num = reduced_cost_num(j, ytil, ytil_sum, phase, lambda_red);
            if (lam_sign < 0) num = -num;
            if (num < 0) {
                if (bland) return j;
                if (best == n_cols_total || num < best_norm) {
                    best = j;
                    best_norm = num;
                }
            }
        }
        return best;
    }

    // Full pricing pass over the hidden structural columns; exposes the most
    // violated ones. Returns how many were activated.
    std::size_t expand(int phase) {
        if (!lazy) return 0;
        const auto [ytil, lambda_red] = reduced_duals(phase);
        Int ytil_sum(0);
        for (const Int& y : ytil) ytil_sum += y;
        const int lam_sign = sgn(lambda);

        std::vector<std::pair<Int, std::size_t>> violated; // (normalized rc, column)
        bool fast = false;
        if constexpr (std::is_integral_v<TEntry>) {
            std::vector<std::int64_t> y64(C);
            std::int64_t lambda64 = 0;
            fast = fits_int64(lambda_red, lambda64);
            std::int64_t max_abs = 0;
            for (std::size_t c = 0; c < C && fast; ++c) {
                fast = fits_int64(ytil[c], y64[c]);
                if (fast) max_abs = std::max<std::int64_t>(max_abs, std::llabs(y64[c]));
            }
            if (fast && max_abs > 0)
                fast = static_cast<long double>(C) * static_cast<long double>(max_abs) * 2.0L *
                           static_cast<long double>(sigma64) <
                       1e36L;
            if (fast) {
                i128 ysum = 0;
                for (std::size_t c = 0; c < C; ++c) ysum += y64[c];
                for (std::size_t j = 0; j < R; ++j) {
                    if (active[j] || in_basis[j]) continue;
                    i128 dot = 0;
                    const TEntry* row = N + j * C;
                    for (std::size_t c = 0; c < C; ++c)
                        dot += static_cast<i128>(y64[c]) * static_cast<std::int64_t>(row[c]);
                    dot += ysum * sigma64;
                    i128 num = static_cast<i128>(column_cost(j, phase)) * lambda64 - dot;
                    if (lam_sign < 0) num = -num;
                    if (num < 0)
                        violated.emplace_back(Int(static_cast<long>(num > -(i128(1) << 62)
                                                                        ? static_cast<std::int64_t>(num)
                                                                        : -(std::int64_t{1} << 62))),
                                              j);
                }
            }
        }
        if (!fast) {
            for (std::size_t j = 0; j < R; ++j) {
                if (active[j] || in_basis[j]) continue;
                Int num = reduced_cost_num(j, ytil, ytil_sum, phase, lambda_red);
                if (lam_sign < 0) num = -num;
                if (num < 0) violated.emplace_back(std::move(num), j);
            }
        }
        const std::size_t take = std::min(violated.size(), std::max<std::size_t>(C / 4, 8));
        if (take > 0 && take < violated.size())
            std::partial_sort(violated.begin(), violated.begin() + take, violated.end());
        for (std::size_t k = 0; k < take; ++k) active[violated[k].second] = true;
        return take;
    }

    // tau-tilde = W * A_j (column of the tableau scaled by lambda).
    std::vector<Int> tableau_column(std::size_t j) const {
        std::vector<Int> tau(C, Int(0));
        if (is_structural(j)) {
            for (std::size_t r = 0; r < C; ++r) {
                Int acc(0);
                const Int* wrow = &W[r * C];
                if constexpr (std::is_integral_v<TEntry>) {
                    Int rowsum(0);
                    for (std::size_t c = 0; c < C; ++c) {
                        const std::int64_t e = static_cast<std::int64_t>(N[j * C + c]);
                        if (e > 0)
                            mpz_addmul_ui(acc.get_mpz_t(), wrow[c].get_mpz_t(),
                                          static_cast<unsigned long>(e));
                        else if (e < 0)
                            mpz_submul_ui(acc.get_mpz_t(), wrow[c].get_mpz_t(),
                                          static_cast<unsigned long>(-e));
                        rowsum += wrow[c];
                    }
                    acc += rowsum * sigma;
                } else {
                    for (std::size_t c = 0; c < C; ++c) acc += wrow[c] * p_entry(j, c);
                }
                tau[r] = acc;
            }
        } else if (is_surplus(j)) {
            const std::size_t c = j - R;
            for (std::size_t r = 0; r < C; ++r) tau[r] = -W[r * C + c];
        } else {
            const std::size_t c = j - R - C;
            for (std::size_t r = 0; r < C; ++r) tau[r] = W[r * C + c];
        }
        return tau;
    }

    // Leaving row by lexicographic minimum ratio: the primary key is
    // x_r / tau_r, ties fall through to the rows of B^{-1} scaled the same
    // way. Rules out cycling for any entering rule and cuts degenerate
    // stalling drastically. Returns C when the direction is unbounded.
    std::size_t ratio_test(const std::vector<Int>& tau, const std::vector<Int>& wb) {
        const int lam_sign = sgn(lambda);
        std::size_t best = C;
        for (std::size_t r = 0; r < C; ++r) {
            if (sgn(tau[r]) != lam_sign) continue; // needs tau_r / lambda > 0
            if (best == C) {
                best = r;
                continue;
            }
            // compare wb_r / tau_r against wb_best / tau_best; tau_r * tau_best > 0
            int cmp_rs = cmp_frac(wb[r], tau[r], wb[best], tau[best]);
            for (std::size_t k = 0; k < C && cmp_rs == 0; ++k)
                cmp_rs = cmp_frac(W[r * C + k], tau[r], W[best * C + k], tau[best]);
            if (cmp_rs < 0) best = r;
        }
        return best;
    }

    void exact_div(Int& out, const Int& num) {
#ifndef NDEBUG
        mpz_tdiv_qr(out.get_mpz_t(), scratch2_.get_mpz_t(), num.get_mpz_t(),
                    lambda.get_mpz_t());
        if (mpz_sgn(scratch2_.get_mpz_t()) != 0)
            throw error("internal: fraction-free update lost integrality");
#else
        mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), lambda.get_mpz_t());
#endif
    }

    void pivot(std::size_t r, std::size_t j, const std::vector<Int>& tau) {
        const Int pivot_val = tau[r];
        // W'_i = (tau_r W_i - tau_i W_r) / lambda, all exact; one scratch
        // integer avoids an allocation per entry
        for (std::size_t i = 0; i < C; ++i) {
            if (i == r) continue;
            Int* wi = &W[i * C];
            const Int* wr = &W[r * C];
            if (sgn(tau[i]) == 0) {
                for (std::size_t c = 0; c < C; ++c) {
                    mpz_mul(scratch_.get_mpz_t(), pivot_val.get_mpz_t(), wi[c].get_mpz_t());
                    exact_div(wi[c], scratch_);
                }
                continue;
            }
            for (std::size_t c = 0; c < C; ++c) {
                mpz_mul(scratch_.get_mpz_t(), pivot_val.get_mpz_t(), wi[c].get_mpz_t());
                mpz_submul(scratch_.get_mpz_t(), tau[i].get_mpz_t(), wr[c].get_mpz_t());
                exact_div(wi[c], scratch_);
            }
        }
        lambda = pivot_val;
        const std::size_t leaving = basis[r];
        in_basis[leaving] = false;
        if (is_artificial(leaving)) artificial_left[leaving - R - C] = true;
        basis[r] = j;
        in_basis[j] = true;
        ++pivots;
    }

    void run_phase(int phase) {
        bool bland = false;
        long stall = 0;
        const long stall_limit = static_cast<long>(2 * C + 8);
        Rat last_obj = phase_objective(phase);
        for (;;) {
            const std::size_t j = price(phase, bland);
            if (j == n_cols_total) {
                if (expand(phase) > 0) continue;
                return; // optimal over every column
            }
            const std::vector<Int> tau = tableau_column(j);
            const std::vector<Int> wb = basic_numerators();
            const std::size_t r = ratio_test(tau, wb);
            if (r == C) throw error("internal: unbounded phase " + std::to_string(phase));
            pivot(r, j, tau);
            const Rat obj = phase_objective(phase);
            if (obj < last_obj) {
                bland = false;
                stall = 0;
                last_obj = obj;
            } else if (++stall > stall_limit) {
                bland = true; // anti-cycling
            }
        }
    }

    // Swap any zero-level artificial still in the basis for a real column.
    // Surplus columns alone always suffice (their tableau entries are the
    // columns of W, and W is invertible).
    void expel_artificials() {
        for (std::size_t r = 0; r < C; ++r) {
            if (!is_artificial(basis[r])) continue;
            bool done = false;
            for (std::size_t j = R; j < R + C && !done; ++j) {
                if (in_basis[j]) continue;
                const std::vector<Int> tau = tableau_column(j);
                if (tau[r] != 0) {
                    pivot(r, j, tau);
                    done = true;
                }
            }
            for (std::size_t j = 0; j < R && !done; ++j) {
                if (in_basis[j] || !active[j]) continue;
                const std::vector<Int> tau = tableau_column(j);
                if (tau[r] != 0) {
                    pivot(r, j, tau);
                    done = true;
                }
            }
            if (!done) throw error("internal: stuck artificial basis column");
        }
    }

    Rat original_entry(std::size_t i, std::size_t c) const { return rat(Int(N[i * C + c]), D); }

    ZeroSumSolution extract() const {
        const std::vector<Int> wb = basic_numerators();
        std::vector<Rat> u(R, Rat(0));
        Rat total(0);
        for (std::size_t r = 0; r < C; ++r) {
            if (!is_structural(basis[r])) continue;
            Rat x = rat(wb[r], lambda);
            u[basis[r]] = x;
            total += x;
        }
        if (total <= 0) throw error("internal: degenerate optimum");

        const std::vector<Int> ytil = dual_numerators(2);
        std::vector<Rat> w(C);
        Rat wsum(0);
        for (std::size_t c = 0; c < C; ++c) {
            w[c] = rat(ytil[c], lambda) * Rat(D);
            wsum += w[c];
        }
        if (wsum != total) throw error("internal: duality gap");

        ZeroSumSolution sol;
        sol.value = Rat(1) / total - rat(sigma, D);
        sol.pivots = pivots;
        sol.row_mix.resize(R);
        for (std::size_t i = 0; i < R; ++i) sol.row_mix[i] = u[i] / total;
        sol.col_mix.resize(C);
        for (std::size_t c = 0; c < C; ++c) sol.col_mix[c] = w[c] / wsum;
        verify(sol);
        return sol;
    }

    // Exact certificate check; also proves optimality via weak duality.
    void verify(const ZeroSumSolution& sol) const {
        Rat rsum(0), csum(0);
        for (const Rat& x : sol.row_mix) {
            if (x < 0) throw error("internal: negative row mix");
            rsum += x;
        }
        for (const Rat& x : sol.col_mix) {
            if (x < 0) throw error("internal: negative column mix");
            csum += x;
        }
        if (rsum != 1 || csum != 1) throw error("internal: mixes not normalized");

        // min over columns of the row mix's payoff must equal the value
        bool col_tight = false;
        for (std::size_t c = 0; c < C; ++c) {
            Rat p(0);
            for (std::size_t i = 0; i < R; ++i)
                if (sol.row_mix[i] != 0) p += sol.row_mix[i] * original_entry(i, c);
            if (p < sol.value) throw error("internal: row certificate violated");
            if (p == sol.value) col_tight = true;
        }
        // max over rows of the column mix's payoff must equal the value
        Int cden(1);
        for (const Rat& x : sol.col_mix) {
            Int l;
            mpz_lcm(l.get_mpz_t(), cden.get_mpz_t(), denominator(x).get_mpz_t());
            cden = l;
        }
        std::vector<Int> cnum(C);
        for (std::size_t c = 0; c < C; ++c)
            cnum[c] = numerator(sol.col_mix[c]) * (cden / denominator(sol.col_mix[c]));
        const Int vn = numerator(sol.value), vd = denominator(sol.value);
        const Int rhs = vn * cden * D; // compare dot * vd <= vn * cden * D
        bool row_tight = false;
        for (std::size_t i = 0; i < R; ++i) {
            Int dot(0);
            if constexpr (std::is_integral_v<TEntry>) {
                for (std::size_t c = 0; c < C; ++c) {
                    const std::int64_t e = static_cast<std::int64_t>(N[i * C + c]);
                    if (e > 0)
                        mpz_addmul_ui(dot.get_mpz_t(), cnum[c].get_mpz_t(),
                                      static_cast<unsigned long>(e));
                    else if (e < 0)
                        mpz_submul_ui(dot.get_mpz_t(), cnum[c].get_mpz_t(),
                                      static_cast<unsigned long>(-e));
                }
            } else {
                for (std::size_t c = 0; c < C; ++c) dot += cnum[c] * Int(N[i * C + c]);
            }
            dot *= vd;
            if (dot > rhs) throw error("internal: column certificate violated");
            if (dot == rhs) row_tight = true;
        }
        if (!col_tight || !row_tight) throw error("internal: certificate not tight");
    }

    static int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

    static bool fits_int64(const Int& v, std::int64_t& out) {
        if (!v.fits_slong_p()) return false;
        out = static_cast<std::int64_t>(v.get_si());
        return std::llabs(out) < (std::int64_t{1} << 62);
    }

    // Compares a/b vs c/d with b*d > 0.
    int cmp_frac(const Int& a, const Int& b, const Int& c, const Int& d) {
        mpz_mul(scratch_.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        mpz_mul(scratch2_.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
        return mpz_cmp(scratch_.get_mpz_t(), scratch2_.get_mpz_t());
    }

    Int scratch_, scratch2_;
};

} // namespace

ZeroSumSolution solve_zero_sum(const std::vector<std::vector<Rat>>& payoff) {
    const std::size_t rows = payoff.size();
    if (rows == 0) throw error("zero-sum payoff matrix must be non-empty");
    const std::size_t cols = payoff[0].size();
    for (const auto& row : payoff)
        if (row.size() != cols || cols == 0)
            throw error("zero-sum payoff matrix must be rectangular and non-empty");

    Int den(1);
    for (const auto& row : payoff)
        for (const Rat& q : row) {
            Int l;
            mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), denominator(q).get_mpz_t());
            den = l;
        }
    std::vector<Int> scaled(rows * cols);
    bool fits = true;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) {
            scaled[i * cols + c] = numerator(payoff[i][c]) * (den / denominator(payoff[i][c]));
            fits = fits && scaled[i * cols + c].fits_slong_p() &&
                   std::llabs(scaled[i * cols + c].get_si()) < (std::int64_t{1} << 61);
        }
    if (fits) {
        std::vector<std::int64_t> n64(rows * cols);
        for (std::size_t k = 0; k < scaled.size(); ++k)
            n64[k] = static_cast<std::int64_t>(scaled[k].get_si());
        return GameSimplex<std::int64_t>(rows, cols, n64.data(), den).solve();
    }
    return GameSimplex<Int>(rows, cols, scaled.data(), den).solve();
}

ZeroSumSolution solve_zero_sum_scaled(std::size_t rows, std::size_t cols, const std::int8_t* ints,
                                      const Int& denom) {
    return GameSimplex<std::int8_t>(rows, cols, ints, denom).solve();
}

ZeroSumSolution solve_zero_sum_scaled(std::size_t rows, std::size_t cols, const std::int64_t* ints,
                                      const Int& denom) {
    return GameSimplex<std::int64_t>(rows, cols, ints, denom).solve();
}

} // namespace nlg
