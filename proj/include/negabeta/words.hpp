#ifndef NEGABETA_WORDS_HPP
#define NEGABETA_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "negabeta/quad_elem.hpp"

namespace negabeta {

using digit_t = long long;

// Finite digit string sum_i digits[i] * (-beta)^(lead_exp - i).  digits.front()
// sits at exponent lead_exp; positions outside the stored range are zero.
// Digits may be negative in intermediate arithmetic; canonical representations
// keep them in [0, digit_max].
//
// Canonical shape: no leading zero (except the zero word {0} at exponent 0),
// no trailing zeros at exponents < 0, and storage always reaches down to
// exponent 0 (so an integer word ends exactly at the radix point).
struct DigitWord {
    std::vector<digit_t> digits{0};
    long lead_exp = 0;

    static DigitWord zero() { return DigitWord{}; }

    long last_exp() const { return lead_exp - static_cast<long>(digits.size()) + 1; }
    digit_t at_exp(long e) const;

    DigitWord canonicalized() const;
    bool is_canonical() const { return *this == canonicalized(); }

    /// Number of digits strictly right of the radix point (trailing zeros ignored).
    long frac_len() const;

    bool operator==(const DigitWord& o) const = default;
};

/// "1,2.1" = digits 1,2 before the point and 1 after; "7." is integer; "0." is
/// zero; "0.0,3" has its leading fractional zero explicit.  Parsing preserves
/// the literal (no canonicalization); a missing '.' means an integer word.
DigitWord parse_digit_word(const std::string& text);
std::string to_string(const DigitWord& w);

// Right-infinite digit sequence pre[0] pre[1] ... (per[0] per[1] ...)^w.
// Empty per means the finite word pre 0^w.  Canonical shape: primitive period,
// minimal preperiod, all-zero period replaced by a finite word, finite words
// free of trailing zeros.
struct PeriodicWord {
    std::vector<digit_t> pre, per;

    static PeriodicWord finite(std::vector<digit_t> d) { return PeriodicWord{std::move(d), {}}; }

    bool is_finite() const { return per.empty(); }
    digit_t at(std::size_t i) const;

    PeriodicWord canonicalized() const;
    /// Equality as infinite sequences.
    bool same_word(const PeriodicWord& o) const;

    bool operator==(const PeriodicWord& o) const = default;
};

/// "2,(1)^w" | "(3,1)^w" | "1,3" | "0" (canonical form of the empty finite word).
PeriodicWord parse_periodic_word(const std::string& text);
std::string to_string(const PeriodicWord& w);

/// Exact value sum_i digits[i] * (-beta)^(lead_exp - i).
QuadElem eval_word(const DigitWord& w, const Base& base);

}  // namespace negabeta

#endif
