#include "negabeta/transform.hpp"

#include "negabeta/errors.hpp"
#include "orbit_engine.hpp"

namespace negabeta {

QuadElem right_endpoint(const Base& base) {
    if (base.quadratic()) {
        // 1/(beta+1) = (beta'+1)/Nc with Nc = (beta+1)(beta'+1) = 1 + m + conj_norm
        long Nc = 1 + base.trace() + base.conj_norm();
        return QuadElem(base, make_rat(base.trace() + 1, Nc), make_rat(-1, Nc));
    }
    return QuadElem::one(base) / (QuadElem::beta(base) + QuadElem::one(base));
}

QuadElem left_endpoint(const Base& base) {
    return -QuadElem::beta(base) * right_endpoint(base);
}

TransformStep transform_step(const QuadElem& x) {
    const Base& base = x.base();
    QuadElem l = left_endpoint(base), r = right_endpoint(base);
    if (x < l || x >= r)
        throw Error(Errc::OutOfDomain, "point outside [-beta/(beta+1), 1/(beta+1))");
    QuadElem t = -QuadElem::beta(base) * x;
    Int d = (t - l).floor();  // -l = beta/(beta+1)
    return TransformStep{d.get_si(), t - QuadElem::rational(base, Rat(d))};
}

namespace {

PeriodicWord package_word(const detail::DriveResult& res) {
    if (res.status == 1) {
        std::vector<digit_t> pre(res.digits.begin(), res.digits.begin() + res.cycle_at);
        std::vector<digit_t> per(res.digits.begin() + res.cycle_at, res.digits.end());
        return PeriodicWord{std::move(pre), std::move(per)}.canonicalized();
    }
    std::vector<digit_t> d(res.digits.begin(), res.digits.end());
    if (res.status == 0) return PeriodicWord::finite(std::move(d)).canonicalized();
    return PeriodicWord::finite(std::move(d));  // truncated: keep the prefix verbatim
}

}  // namespace

OrbitDigits orbit_digits(const QuadElem& x, long max_iter) {
    const Base& base = x.base();
    if (x < left_endpoint(base) || x >= right_endpoint(base))
        throw Error(Errc::OutOfDomain, "point outside [-beta/(beta+1), 1/(beta+1))");
    detail::DriveResult res = base.quadratic() ? detail::drive_quad(x, max_iter, false, true)
                                               : detail::drive_rational(x, max_iter, false);
    OrbitDigits out;
    out.word = package_word(res);
    out.status = res.status == 0   ? OrbitStatus::Finite
                 : res.status == 1 ? OrbitStatus::Periodic
                                   : OrbitStatus::Truncated;
    out.steps = static_cast<long>(res.digits.size());
    return out;
}

namespace {

// The closed forms below are cheap to re-derive from the orbit itself (the
// endpoint cycle closes within a handful of steps), so every call cross-checks
// them instead of trusting the formula.
PeriodicWord checked_closed_form(const Base& base, PeriodicWord closed) {
    OrbitDigits orb = orbit_digits(left_endpoint(base), 64);
    if (orb.status == OrbitStatus::Truncated || !closed.same_word(orb.word))
        throw std::logic_error("left endpoint closed form disagrees with the orbit");
    return closed;
}

}  // namespace

PeriodicWord left_endpoint_digits(const Base& base, long max_iter) {
    switch (base.kind()) {
        case BaseKind::Integer:
            return checked_closed_form(base, PeriodicWord{{}, {base.int_value()}});
        case BaseKind::QuadA:
            return checked_closed_form(base, PeriodicWord{{}, {base.m() - 1, base.n()}});
        case BaseKind::QuadB:
            return checked_closed_form(
                base, PeriodicWord{{base.m()}, {base.m() - base.n()}}.canonicalized());
        case BaseKind::GenericReal: {
            OrbitDigits orb = orbit_digits(left_endpoint(base), max_iter);
            if (orb.status == OrbitStatus::Truncated)
                throw Error(Errc::NotEventuallyPeriodicWithinBudget,
                            "left endpoint digits unresolved after " + std::to_string(max_iter) +
                                " steps");
            return orb.word;
        }
    }
    return {};
}

}  // namespace negabeta
