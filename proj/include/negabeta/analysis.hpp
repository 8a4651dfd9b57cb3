#ifndef NEGABETA_ANALYSIS_HPP
#define NEGABETA_ANALYSIS_HPP

#include <functional>
#include <vector>

#include "negabeta/expansion.hpp"

namespace negabeta {

/// True iff the only value with a finite expansion is zero, which happens
/// exactly when beta is below the golden ratio (the golden ratio itself is on
/// the nontrivial side).  Exact for every supported base kind.
bool fin_trivial(const Base& base);

enum class ConjugateSign { Positive, Negative, None };

struct Classification {
    BaseKind kind = BaseKind::Integer;
    bool pisot = false;
    ConjugateSign conjugate_sign = ConjugateSign::None;
    // Pisot with no negative conjugate: the finite expansions can close under
    // addition and multiplication.  z_ring marks the integer bases, where the
    // zero-fraction values form exactly the rational integers.
    bool ring_candidate = false;
    bool z_ring = false;
};

Classification classify(const Base& base);

/// Streams every admissible purely-integer word (radix point at the end) with
/// at most max_digits digits, canonical and duplicate-free: the zero word
/// first, then lengths ascending, lexicographic within a length.  Throws
/// NotQuadratic for generic bases, ConstraintViolation for max_digits < 0.
void enumerate_z(const Base& base, long max_digits,
                 const std::function<void(const DigitWord&)>& yield);
std::vector<DigitWord> enumerate_z(const Base& base, long max_digits);

enum class ScanOp { Add, Sub, Mul };

struct ScanWitness {
    DigitWord lhs, rhs;
    Expansion result;
};

// Exhaustive fractional-length scan over pairs from enumerate_z.  observed_L
// is a certified lower bound for the true carry length (the definitions
// quantify over infinitely many values); results that leave the finite set
// are tallied in infinite_count and excluded from the maximum.
struct ScanReport {
    ScanOp op = ScanOp::Add;
    long max_digits = 0;
    long observed_L = 0;
    ScanWitness witness;
    long infinite_count = 0;
    long pairs_tested = 0;
};

/// Pairs are unordered for Add/Mul and ordered for Sub; the witness is the
/// first pair attaining the maximum in enumeration order.  Each expansion
/// runs under a digit budget of max_frac + 2*max_digits + 8; a truncation
/// raises BudgetExceeded rather than silently dropping the pair.
ScanReport scan_L(const Base& base, ScanOp op, long max_digits, long max_frac = 64);

// Conjugate-modulus bounds controlling how long addition and multiplication
// carries can get.  H bounds |z'| from above over the integer-expansion
// values z, K from below over those ending in a nonzero digit; the carry
// bounds are the largest l with beta^l < 2H/K (addition) respectively
// beta^l < H^2/K (multiplication).
struct HKBounds {
    QuadElem H, K;
    // Closed forms hold for the n = 1 bases (including the golden ratio);
    // otherwise H and K are running extrema over enumerate_z words, an
    // under-approximation of H and an over-approximation of K.
    bool exact = false;
    long bound_add = 0;
    long bound_mul = 0;
};

HKBounds hk_bounds(const Base& base, long empirical_digits = 12);

}  // namespace negabeta

#endif
