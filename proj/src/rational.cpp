#include "nlg/rational.hpp"

#include <cctype>

namespace nlg {

Rat pow2_rat(long k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rat(p) : rat(Int(1), p);
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i == text.size()) return std::nullopt;
    bool seen_slash = false;
    std::size_t digits_before = 0, digits_after = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (seen_slash) return std::nullopt;
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digits_after : digits_before)++;
        } else {
            return std::nullopt; // rejects '.', exponents, whitespace
        }
    }
    if (digits_before == 0 || (seen_slash && digits_after == 0)) return std::nullopt;
    Rat q;
    const char* start = text.c_str();
    if (*start == '+') ++start; // mpq_set_str rejects an explicit plus
    if (mpq_set_str(q.get_mpq_t(), start, 10) != 0) return std::nullopt;
    if (denominator(q) == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

} // namespace nlg
