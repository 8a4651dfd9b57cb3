#include "negabeta/analysis.hpp"

#include <optional>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

// One step of the admissible-integer-word automaton, shared by all base
// kinds.  The states track exactly what the forbidden-factor rules need:
// whether the previous digit was the largest one (quad-), and the parity of
// the run of repair digits after a top digit (quad+).
struct DfsState {
    bool qa_prev_top = false;
    bool qb_pending = false;
    bool qb_parity_odd = false;
    bool qb_zero_led = false;  // the pending top digit began the word or followed a 0
    bool prev_zero = false;
    bool at_start = true;
};

std::optional<DfsState> dfs_step(const Base& base, const DfsState& s, digit_t d) {
    DfsState t = s;
    t.at_start = false;
    t.prev_zero = (d == 0);
    switch (base.kind()) {
        case BaseKind::Integer:
            break;
        case BaseKind::QuadA:
            if (s.qa_prev_top && d < base.n()) return std::nullopt;
            t.qa_prev_top = (d == base.m() - 1);
            break;
        case BaseKind::QuadB: {
            const digit_t m = base.m(), n = base.n(), run = m - n;
            if (n < m) {
                if (s.qb_pending && d == run) {
                    t.qb_parity_odd = !s.qb_parity_odd;
                    break;
                }
                if (s.qb_pending) {
                    if (s.qb_parity_odd ? d > run : d < run) return std::nullopt;
                    t.qb_pending = false;
                    t.qb_parity_odd = false;
                }
                if (d == m) t.qb_pending = true;
                break;
            }
            // n == m: the repair digit is 0 and the boundary case at the end
            // of the word depends on what preceded the top digit.
            if (s.qb_pending && d == 0) {
                t.qb_parity_odd = !s.qb_parity_odd;
                break;
            }
            if (s.qb_pending) {
                if (s.qb_parity_odd) return std::nullopt;
                t.qb_pending = false;
                t.qb_parity_odd = false;
                t.qb_zero_led = false;
            }
            if (d == m) {
                t.qb_pending = true;
                t.qb_zero_led = s.at_start || s.prev_zero;
            }
            break;
        }
        case BaseKind::GenericReal:
            return std::nullopt;
    }
    return t;
}

bool dfs_can_end(const Base& base, const DfsState& s) {
    switch (base.kind()) {
        case BaseKind::Integer:
            return true;
        case BaseKind::QuadA:
            return !s.qa_prev_top;
        case BaseKind::QuadB:
            if (base.n() < base.m()) return !(s.qb_pending && !s.qb_parity_odd);
            return !(s.qb_pending && s.qb_zero_led);
        case BaseKind::GenericReal:
            return false;
    }
    return false;
}

QuadElem conj_abs(const QuadElem& z) {
    QuadElem c = z.conjugate();
    return c.sign() < 0 ? -c : c;
}

/// Largest l >= 0 with beta^l strictly below the threshold.
long bound_below(const Base& base, const QuadElem& threshold) {
    const QuadElem beta = QuadElem::beta(base);
    QuadElem p = QuadElem::one(base);
    if (!(p < threshold)) return 0;
    long l = 0;
    while (true) {
        QuadElem q = p * beta;
        if (!(q < threshold)) break;
        p = q;
        ++l;
    }
    return l;
}

}  // namespace

bool fin_trivial(const Base& base) {
    switch (base.kind()) {
        case BaseKind::Integer:
            return false;
        case BaseKind::QuadA:
        case BaseKind::QuadB: {
            // beta^2 - beta - 1 = (m-1) beta - conj_norm - 1; negative sign
            // means beta lies below the golden ratio.
            QuadElem g(base, Rat(-base.conj_norm() - 1), Rat(base.m() - 1));
            return g.sign() < 0;
        }
        case BaseKind::GenericReal: {
            Rat v = base.generic_value();
            Rat t = 2 * v - 1;
            return t * t < 5;
        }
    }
    return false;
}

Classification classify(const Base& base) {
    Classification c;
    c.kind = base.kind();
    c.pisot = base.kind() != BaseKind::GenericReal;
    c.conjugate_sign = base.kind() == BaseKind::QuadA   ? ConjugateSign::Positive
                       : base.kind() == BaseKind::QuadB ? ConjugateSign::Negative
                                                        : ConjugateSign::None;
    c.ring_candidate = base.kind() == BaseKind::Integer || base.kind() == BaseKind::QuadA;
    c.z_ring = base.kind() == BaseKind::Integer;
    return c;
}

void enumerate_z(const Base& base, long max_digits,
                 const std::function<void(const DigitWord&)>& yield) {
    if (base.kind() == BaseKind::GenericReal)
        throw Error(Errc::NotQuadratic,
                    "enumerate_z needs eventually periodic endpoint digits, got " +
                        base.spec_string());
    if (max_digits < 0)
        throw Error(Errc::ConstraintViolation, "enumerate_z: max_digits must be >= 0");

    yield(DigitWord::zero());
    // Digit m = floor(beta) never survives in a finite integer word over an
    // integer base: it forces an infinite all-m tail.
    const digit_t top =
        base.kind() == BaseKind::Integer ? base.int_value() - 1 : base.digit_max();

    std::vector<digit_t> buf;
    std::function<void(const DfsState&, long)> rec = [&](const DfsState& s, long want) {
        if (static_cast<long>(buf.size()) == want) {
            if (dfs_can_end(base, s))
                yield(DigitWord{buf, static_cast<long>(buf.size()) - 1});
            return;
        }
        for (digit_t d = buf.empty() ? 1 : 0; d <= top; ++d) {
            std::optional<DfsState> t = dfs_step(base, s, d);
            if (!t) continue;
            buf.push_back(d);
            rec(*t, want);
            buf.pop_back();
        }
    };
    for (long len = 1; len <= max_digits; ++len) rec(DfsState{}, len);
}

std::vector<DigitWord> enumerate_z(const Base& base, long max_digits) {
    std::vector<DigitWord> out;
    enumerate_z(base, max_digits, [&](const DigitWord& w) { out.push_back(w); });
    return out;
}

ScanReport scan_L(const Base& base, ScanOp op, long max_digits, long max_frac) {
    if (max_frac < 0)
        throw Error(Errc::ConstraintViolation, "scan_L: max_frac must be >= 0");
    const std::vector<DigitWord> words = enumerate_z(base, max_digits);
    const long budget = max_frac + 2 * max_digits + 8;

    std::vector<QuadElem> vals;
    vals.reserve(words.size());
    for (const DigitWord& w : words) vals.push_back(eval_word(w, base));

    ScanReport rep;
    rep.op = op;
    rep.max_digits = max_digits;
    rep.observed_L = -1;
    rep.witness = ScanWitness{DigitWord::zero(), DigitWord::zero(),
                              expand(QuadElem::zero(base), budget)};
    const char* glyph = op == ScanOp::Add ? " + " : op == ScanOp::Sub ? " - " : " * ";
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = op == ScanOp::Sub ? 0 : i; j < words.size(); ++j) {
            QuadElem v = op == ScanOp::Add   ? vals[i] + vals[j]
                         : op == ScanOp::Sub ? vals[i] - vals[j]
                                             : vals[i] * vals[j];
            Expansion e = expand(v, budget);
            ++rep.pairs_tested;
            if (e.status == OrbitStatus::Truncated)
                throw Error(Errc::BudgetExceeded,
                            "scan_L: " + to_string(words[i]) + glyph + to_string(words[j]) +
                                " did not resolve within " + std::to_string(budget) + " digits");
            if (e.status == OrbitStatus::Periodic) {
                ++rep.infinite_count;
                continue;
            }
            long f = e.frac_len();
            if (f > rep.observed_L) {
                rep.observed_L = f;
                rep.witness = ScanWitness{words[i], words[j], e};
            }
        }
    }
    if (rep.observed_L < 0) rep.observed_L = 0;
    return rep;
}

HKBounds hk_bounds(const Base& base, long empirical_digits) {
    if (!base.quadratic())
        throw Error(Errc::NotQuadratic,
                    "hk_bounds needs a quadratic base, got " + base.spec_string());
    const QuadElem one = QuadElem::one(base);
    const QuadElem beta = QuadElem::beta(base);

    QuadElem H = one, K = one;
    bool exact = false;
    if (base.kind() == BaseKind::QuadB && base.m() == 1) {
        // Golden ratio: the safe closed-form estimate, not the sharp value.
        H = beta * beta;
        exact = true;
    } else if (base.n() == 1) {
        if (base.kind() == BaseKind::QuadA) {
            QuadElem bc = beta.conjugate();
            H = (one - bc) / (bc * (one + bc));
            K = bc * (one - bc) / (one + bc);
        } else {
            H = beta;
        }
        exact = true;
    } else {
        if (empirical_digits < 1)
            throw Error(Errc::ConstraintViolation, "hk_bounds: empirical_digits must be >= 1");
        bool have_k = false;
        QuadElem hmax = QuadElem::zero(base), kmin = QuadElem::zero(base);
        enumerate_z(base, empirical_digits, [&](const DigitWord& w) {
            QuadElem az = conj_abs(eval_word(w, base));
            if (az > hmax) hmax = az;
            if (w.at_exp(0) != 0 && (!have_k || az < kmin)) {
                kmin = az;
                have_k = true;
            }
        });
        if (!have_k || kmin.sign() == 0)
            throw Error(Errc::KZero, "hk_bounds: no positive conjugate-modulus floor at " +
                                         std::to_string(empirical_digits) + " digits");
        H = hmax;
        K = kmin;
    }

    HKBounds out{H, K, exact, 0, 0};
    out.bound_add = bound_below(base, (H + H) / K);
    out.bound_mul = bound_below(base, H * H / K);
    return out;
}

}  // namespace negabeta
