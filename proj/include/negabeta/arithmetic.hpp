#ifndef NEGABETA_ARITHMETIC_HPP
#define NEGABETA_ARITHMETIC_HPP

#include "negabeta/expansion.hpp"

namespace negabeta {

// Signed digit words evaluating to exactly zero over a quad- base.  Adding one
// of these digitwise to a representation changes nothing of its value, which
// is what the add-one rewriting below exploits.  With X = m-n-1:
//   Short        1 m n
//   LongPlus(k)  1 (m-1) [(-X) X]^k (-(m-n)) (-n)
//   LongMinus(k) 1 (m-1) (-X) [X (-X)]^k (m-n) n
// all read with the radix point at the end.
enum class ZeroVariant { Short, LongPlus, LongMinus };

struct ZeroIdentity {
    DigitWord word;  // signed digits; never serialized to users
    ZeroVariant variant = ZeroVariant::Short;
    long k = 0;
};

/// Throws NotClassA unless the base is quad-; k must be >= 0 (ignored for
/// Short).  Evaluation to zero is asserted on construction.
ZeroIdentity zero_word(ZeroVariant variant, long k, const Base& base);

/// expand(eval(w1) + eval(w2)); the status faithfully reports whether the sum
/// has a finite or infinite periodic expansion.
Expansion add(const DigitWord& w1, const DigitWord& w2, const Base& base, long max_iter = 10000);
Expansion sub(const DigitWord& w1, const DigitWord& w2, const Base& base, long max_iter = 10000);
Expansion mul(const DigitWord& w1, const DigitWord& w2, const Base& base, long max_iter = 10000);

/// Adds one to an admissible finite word over a quad- base purely by digit
/// rewriting: increment the digit at exponent 0 and, when that leaves the
/// admissible alphabet or breaks the factor rule, add the zero identity that
/// repairs the affected block.  The result is validated (alphabet, factor
/// rule, exact value) and equals expand(eval_word(w) + 1) digit for digit;
/// any gap in the case analysis surfaces as PatternNotMatched rather than
/// falling back to value-level arithmetic.
DigitWord add_one_rewrite(const DigitWord& w, const Base& base);

}  // namespace negabeta

#endif
