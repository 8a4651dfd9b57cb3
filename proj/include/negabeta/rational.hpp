#ifndef NEGABETA_RATIONAL_HPP
#define NEGABETA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "negabeta/errors.hpp"

namespace negabeta {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize on its own; route all
// fraction construction through here so values are always in lowest terms.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error(Errc::MalformedSpec, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Parses "p", "p/q" or a decimal literal like "-1.61" into an exact rational.
Rat parse_rat(const std::string& text);

/// Lowest-terms text: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

}  // namespace negabeta

#endif
