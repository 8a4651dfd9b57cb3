#ifndef NEGABETA_ADMISSIBILITY_HPP
#define NEGABETA_ADMISSIBILITY_HPP

#include "negabeta/transform.hpp"

namespace negabeta {

// Alternate order on right-infinite digit sequences: at the first differing
// index j (1-based), the sequence with the bigger digit comes first when j is
// odd and the one with the smaller digit comes first when j is even.
struct AltOrdering {
    enum class Outcome { Less, Equal, Greater };
    Outcome outcome = Outcome::Equal;
    long decided_at = 0;  // 1-based index of the deciding digit; 0 when Equal

    bool less() const { return outcome == Outcome::Less; }
    bool equal() const { return outcome == Outcome::Equal; }
    bool greater() const { return outcome == Outcome::Greater; }
};

/// Decides within preperiods + lcm of periods; Equal iff the infinite
/// sequences coincide.  Finite words count as padded with 0^w.
AltOrdering alt_compare(const PeriodicWord& u, const PeriodicWord& v);

/// Upper reference string for admissibility: 0 prepended to the left endpoint
/// digits, except that a purely periodic word with odd primitive period q
/// folds the zero into the period and lowers the final digit:
/// (0 d1 ... d_{q-1} (d_q - 1))^w.  GenericReal bases propagate
/// NotEventuallyPeriodicWithinBudget from the endpoint orbit.
PeriodicWord d_star_r(const Base& base, long max_iter = 10000);

// Caches both reference strings so bulk scans pay the endpoint work once.
// A digit string (read most significant first, radix position irrelevant) is
// admissible iff every suffix u of the zero-prefixed string satisfies
// lower <=_alt u <_alt upper.
class AdmissibilityContext {
  public:
    explicit AdmissibilityContext(const Base& base, long max_iter = 10000);

    const Base& base() const { return base_; }
    const PeriodicWord& lower() const { return lower_; }
    const PeriodicWord& upper() const { return upper_; }

    /// Digits outside {0,...,digit_max} make a word inadmissible outright.
    bool admissible(const DigitWord& w) const;
    bool admissible(const PeriodicWord& w) const;

  private:
    bool suffix_ok(const PeriodicWord& u) const;

    Base base_;
    PeriodicWord lower_, upper_;
    long dmax_ = 0;
};

bool is_admissible(const DigitWord& w, const Base& base, long max_iter = 10000);
bool is_admissible(const PeriodicWord& w, const Base& base, long max_iter = 10000);

/// Independent linear-scan recognizer for the quadratic classes; must agree
/// with is_admissible on every finite word.  Throws NotQuadratic for Integer
/// and GenericReal bases.
///
/// quad-: a digit m-1 must never be followed by a digit below n (the position
/// after the last stored digit counts as 0).
/// quad+: after each digit m, look at the run of r digits equal to m-n and
/// the digit c after it (0 when the run reaches the end): forbidden when
/// r is even and c < m-n, or r is odd and c > m-n.  When n = m the run digit
/// is 0 and a run reaching the end is forbidden exactly if the digit m sits
/// at the start of the word or follows a 0.
bool forbidden_factor_check(const DigitWord& w, const Base& base);

}  // namespace negabeta

#endif
