#ifndef NEGABETA_QUAD_ELEM_HPP
#define NEGABETA_QUAD_ELEM_HPP

#include <string>

#include "negabeta/base.hpp"
#include "negabeta/rational.hpp"

namespace negabeta {

// Exact element a + b*beta of Q(beta).  For Integer and GenericReal bases beta
// itself is rational, so b is folded into a on construction and stays 0; every
// arithmetic and comparison operation below is exact for all base kinds.
class QuadElem {
  public:
    QuadElem(const Base& base, Rat a, Rat b);

    static QuadElem rational(const Base& base, Rat a) { return QuadElem(base, std::move(a), 0); }
    static QuadElem zero(const Base& base) { return rational(base, Rat(0)); }
    static QuadElem one(const Base& base) { return rational(base, Rat(1)); }
    static QuadElem beta(const Base& base) { return QuadElem(base, Rat(0), Rat(1)); }

    const Base& base() const { return base_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElem operator-() const;
    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator/(const QuadElem& o) const;
    QuadElem inverse() const;

    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }

    /// Exact sign: -1, 0, +1.
    int sign() const;

    /// Exact floor.
    Int floor() const;

    /// Field conjugate a + b*beta'.  Throws NotQuadratic for Integer and
    /// GenericReal bases.
    QuadElem conjugate() const;

    bool operator==(const QuadElem& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }
    bool operator<(const QuadElem& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadElem& o) const { return o < *this; }
    bool operator<=(const QuadElem& o) const { return !(o < *this); }
    bool operator>=(const QuadElem& o) const { return !(*this < o); }

    /// "p/q", "p/q+r/s*beta", "p/q-r/s*beta" (integer parts printed without /q).
    std::string to_string() const;

  private:
    Base base_;
    Rat a_, b_;
};

/// (-beta)^k for any integer k (negative k uses the exact inverse).
QuadElem pow_neg_beta(const Base& base, long k);

/// Value grammar: "<rat>" | "<rat>*beta" | "<rat>+<rat>*beta" | "<rat>-<rat>*beta"
/// where <rat> is "p", "p/q" or a decimal.  beta terms are accepted for every
/// base kind (folded to a rational when beta is rational).
QuadElem parse_value(const std::string& text, const Base& base);

inline Int qfloor(const QuadElem& x) { return x.floor(); }

}  // namespace negabeta

#endif
