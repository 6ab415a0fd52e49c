#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace nlg {

// Exact arithmetic used throughout the classical pipeline.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class constructors do not canonicalize; every construction from a
// numerator/denominator pair must go through these helpers.
inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long n, long d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& n, const Int& d) {
    Rat q(n);
    q /= Rat(d);
    return q;
}

inline Int numerator(const Rat& q) { return q.get_num(); }
inline Int denominator(const Rat& q) { return q.get_den(); }

inline double to_double(const Rat& q) { return q.get_d(); }

// 2^k as an exact rational, k may be negative.
Rat pow2_rat(long k);

// Lowest-terms textual form: "p/q", or "p" when q == 1.
std::string rat_to_string(const Rat& q);

// Accepts "p" or "p/q" with optional leading '-'. Decimal notation is
// deliberately rejected so that exact inputs cannot silently degrade.
std::optional<Rat> parse_rational(const std::string& text);

} // namespace nlg
