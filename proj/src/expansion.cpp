#include "negabeta/expansion.hpp"

#include <cassert>
#include <stdexcept>

#include "negabeta/errors.hpp"
#include "orbit_engine.hpp"

namespace negabeta {

long Expansion::frac_len() const {
    if (status != OrbitStatus::Finite) throw std::logic_error("frac_len needs a finite expansion");
    return static_cast<long>(fractional.pre.size());
}

DigitWord Expansion::to_digit_word() const {
    if (status != OrbitStatus::Finite)
        throw std::logic_error("to_digit_word needs a finite expansion");
    std::vector<digit_t> d = integer_part.digits;
    d.insert(d.end(), fractional.pre.begin(), fractional.pre.end());
    return DigitWord{std::move(d), integer_part.lead_exp}.canonicalized();
}

std::string Expansion::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < integer_part.digits.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(integer_part.digits[i]);
    }
    out += '.';
    if (!(fractional.pre.empty() && fractional.per.empty())) out += negabeta::to_string(fractional);
    if (status == OrbitStatus::Truncated) out += "...";
    return out;
}

Expansion expand(const QuadElem& x, long max_iter) {
    const Base& base = x.base();
    if (x.is_zero()) return Expansion{DigitWord::zero(), PeriodicWord::finite({}), OrbitStatus::Finite};

    detail::DriveResult res = base.quadratic() ? detail::drive_quad(x, max_iter, true, true)
                                               : detail::drive_rational(x, max_iter, true);

    long j = res.j;
    auto have = static_cast<long>(res.digits.size());
    if (res.status == 2 && have < j)
        throw Error(Errc::BudgetExceeded, "iteration budget ran out inside the integer part");

    // digit production stops at termination or on the first cycle revisit, so
    // positions past `have` inside the integer part are either genuine zeros
    // (finite orbit) or reads into the cycle
    auto digit_at = [&](long i) -> digit_t {
        if (i < have) return res.digits[i];
        if (res.status == 1) {
            long p = have - res.cycle_at;
            return res.digits[res.cycle_at + (i - res.cycle_at) % p];
        }
        return 0;
    };

    Expansion out;
    if (j == 0) {
        out.integer_part = DigitWord::zero();
    } else {
        std::vector<digit_t> d;
        d.reserve(j);
        for (long i = 0; i < j; ++i) d.push_back(digit_at(i));
        out.integer_part = DigitWord{std::move(d), j - 1};
        assert(out.integer_part.digits.front() != 0);
    }

    if (res.status == 1 && res.cycle_at < j) {
        // the cycle begins inside the integer part; the tail is purely
        // periodic with the cycle rotated to start at position j
        long p = have - res.cycle_at;
        std::vector<digit_t> per;
        per.reserve(p);
        for (long i = 0; i < p; ++i)
            per.push_back(res.digits[res.cycle_at + (j - res.cycle_at + i) % p]);
        out.fractional = PeriodicWord{{}, std::move(per)}.canonicalized();
        out.status = OrbitStatus::Periodic;
        return out;
    }

    // a finite orbit may die inside the integer part (have < j): empty tail
    std::vector<digit_t> tail(res.digits.begin() + std::min(j, have), res.digits.end());
    switch (res.status) {
        case 0:
            out.fractional = PeriodicWord::finite(std::move(tail)).canonicalized();
            out.status = OrbitStatus::Finite;
            break;
        case 1: {
            std::vector<digit_t> pre(tail.begin(), tail.begin() + (res.cycle_at - j));
            std::vector<digit_t> per(tail.begin() + (res.cycle_at - j), tail.end());
            out.fractional = PeriodicWord{std::move(pre), std::move(per)}.canonicalized();
            out.status = OrbitStatus::Periodic;
            break;
        }
        default:
            out.fractional = PeriodicWord::finite(std::move(tail));
            out.status = OrbitStatus::Truncated;
            break;
    }
    return out;
}

Expansion canonicalize_word(const DigitWord& w, const Base& base, long max_iter) {
    return expand(eval_word(w, base), max_iter);
}

RangeBracket range_bracket(const Base& base, long k) {
    // (-beta)^(k-1)/(beta+1) and (-beta)^(k+1)/(beta+1) are the two endpoints:
    // for odd k both exponents are even and the values positive ascending, for
    // even k both are odd and the values negative with the order flipped.
    QuadElem r = right_endpoint(base);
    QuadElem a = pow_neg_beta(base, k - 1) * r;
    QuadElem b = pow_neg_beta(base, k + 1) * r;
    bool odd = ((k % 2) + 2) % 2 == 1;
    return odd ? RangeBracket{a, b} : RangeBracket{b, a};
}

}  // namespace negabeta
