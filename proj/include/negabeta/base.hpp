#ifndef NEGABETA_BASE_HPP
#define NEGABETA_BASE_HPP

#include <memory>
#include <string>

#include "negabeta/rational.hpp"

namespace negabeta {

// Numeration base beta > 1 for the negative-base system (digits of x in powers
// of -beta).  Four kinds:
//   Integer     beta = b,                      b >= 2
//   QuadA       beta^2 = m*beta - n,           m - 2 >= n >= 1   (conjugate in (0,1))
//   QuadB       beta^2 = m*beta + n,           m >= n >= 1       (conjugate in (-1,0))
//   GenericReal beta given as an exact decimal > 1; no periodicity claims are
//               ever made for this kind.
enum class BaseKind { Integer, QuadA, QuadB, GenericReal };

class Base {
  public:
    static Base integer(long b);
    static Base quad_a(long m, long n);
    static Base quad_b(long m, long n);
    static Base generic(const Rat& value, int precision_bits, const std::string& text = "");

    BaseKind kind() const { return kind_; }
    bool quadratic() const { return kind_ == BaseKind::QuadA || kind_ == BaseKind::QuadB; }

    long m() const;            // quadratic only
    long n() const;            // quadratic only
    long int_value() const;    // Integer only
    const Rat& generic_value() const;  // GenericReal only
    int precision_bits() const { return bits_; }

    // beta + beta' = m, beta * beta' = conj_norm(), beta = (m + sqrt(disc()))/2.
    // disc() is never a perfect square for a valid quadratic base.
    long trace() const;
    long conj_norm() const;    // +n for QuadA, -n for QuadB
    long disc() const;

    /// floor(beta), computed exactly.  This is the largest digit.
    long digit_max() const;

    /// Round-trips through parse_base.
    std::string spec_string() const;

    bool operator==(const Base& o) const;
    bool operator!=(const Base& o) const { return !(*this == o); }

  private:
    Base() = default;

    BaseKind kind_ = BaseKind::Integer;
    long m_ = 0, n_ = 0;                   // quadratic coefficients, or b in m_
    std::shared_ptr<const Rat> generic_;   // GenericReal only
    int bits_ = 0;
    std::string text_;                     // original value text for GenericReal
};

/// Grammar: "int:<b>" | "quad-:<m>,<n>" | "quad+:<m>,<n>" | "real:<decimal>[@<bits>]".
/// Throws MalformedSpec on syntax errors, ConstraintViolation on out-of-class
/// parameters (e.g. quad-:3,2, int:1, real:0.9).
Base parse_base(const std::string& spec);

}  // namespace negabeta

#endif
