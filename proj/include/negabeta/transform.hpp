#ifndef NEGABETA_TRANSFORM_HPP
#define NEGABETA_TRANSFORM_HPP

#include "negabeta/quad_elem.hpp"
#include "negabeta/words.hpp"

namespace negabeta {

// Digits of x are produced by iterating x -> -beta*x - d on the fundamental
// interval [l, r) = [-beta/(beta+1), 1/(beta+1)), where d = floor(-beta*x + beta/(beta+1)).

QuadElem left_endpoint(const Base& base);    // -beta/(beta+1)
QuadElem right_endpoint(const Base& base);   // 1/(beta+1)

struct TransformStep {
    digit_t digit = 0;
    QuadElem next;
};

/// One digit step.  Throws OutOfDomain unless l <= x < r.
TransformStep transform_step(const QuadElem& x);

enum class OrbitStatus { Finite, Periodic, Truncated };

struct OrbitDigits {
    PeriodicWord word;  // canonical digit sequence d1 d2 d3 ...
    OrbitStatus status = OrbitStatus::Finite;
    long steps = 0;     // digits actually produced before stopping
};

/// Full digit sequence of the orbit of x (x must lie in [l, r); OutOfDomain
/// otherwise).  Integer and quadratic bases detect cycles exactly and report
/// Periodic; GenericReal never claims a cycle and reports Truncated once
/// max_iter digits have been produced without reaching zero.
OrbitDigits orbit_digits(const QuadElem& x, long max_iter);

/// Digit sequence of the left endpoint, the reference word for admissibility.
/// Quadratic bases have closed forms: quad- gives ((m-1),n)^w, quad+ gives
/// m,(m-n)^w; an integer base gives (b)^w.  GenericReal runs the orbit and
/// throws NotEventuallyPeriodicWithinBudget if it neither terminates nor is
/// resolvable within max_iter digits.
PeriodicWord left_endpoint_digits(const Base& base, long max_iter = 10000);

}  // namespace negabeta

#endif
