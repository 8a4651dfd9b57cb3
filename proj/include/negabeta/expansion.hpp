#ifndef NEGABETA_EXPANSION_HPP
#define NEGABETA_EXPANSION_HPP

#include <string>

#include "negabeta/transform.hpp"

namespace negabeta {

// Canonical negative-base representation x = sum d_i (-beta)^i.  The digit
// stream comes from the orbit of x*(-beta)^-j for the least j >= 0 that lands
// in the open interval (l, r); the first j digits form the integer part, the
// rest the fractional tail.  The least such j never produces a leading zero.
struct Expansion {
    DigitWord integer_part;   // canonical; zero word when x in (l, r)
    PeriodicWord fractional;  // canonical
    OrbitStatus status = OrbitStatus::Finite;

    /// Fractional digits up to the last nonzero one.  Finite expansions only.
    long frac_len() const;

    /// Finite expansions only: the same value as a single finite word.
    DigitWord to_digit_word() const;

    /// "1,2.1" | "0.2,(1,0)^w" | "5." | "0."; Truncated appends "...".
    std::string to_string() const;

    bool operator==(const Expansion& o) const = default;
};

Expansion expand(const QuadElem& x, long max_iter = 10000);

/// Expansion of the value of an arbitrary finite word (digits need not be
/// admissible; negative digits are fine).
Expansion canonicalize_word(const DigitWord& w, const Base& base, long max_iter = 10000);

/// Closed value bracket for expansions whose leading nonzero digit sits at
/// exponent k-1: odd k gives [beta^(k-1)/(beta+1), beta^(k+1)/(beta+1)], even
/// k the negated mirror [-beta^(k+1)/(beta+1), -beta^(k-1)/(beta+1)].  Both
/// endpoints are attained (left by the d_lb tail, right by the endpoint
/// preimage), so the interval is closed.
struct RangeBracket {
    QuadElem low, high;
};
RangeBracket range_bracket(const Base& base, long k);

}  // namespace negabeta

#endif
