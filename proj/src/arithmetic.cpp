#include "negabeta/arithmetic.hpp"

#include <map>
#include <utility>

#include "negabeta/admissibility.hpp"
#include "negabeta/errors.hpp"
#include "negabeta/quad_elem.hpp"

namespace negabeta {

namespace {

void require_class_a(const Base& base, const char* what) {
    if (base.kind() != BaseKind::QuadA)
        throw Error(Errc::NotClassA,
                    std::string(what) + " requires a quad- base, got " + base.spec_string());
}

}  // namespace

ZeroIdentity zero_word(ZeroVariant variant, long k, const Base& base) {
    require_class_a(base, "zero_word");
    if (k < 0) throw Error(Errc::ConstraintViolation, "zero_word: k must be >= 0");
    const digit_t m = base.m(), n = base.n();
    const digit_t X = m - n - 1;

    std::vector<digit_t> d;
    switch (variant) {
        case ZeroVariant::Short:
            d = {1, m, n};
            break;
        case ZeroVariant::LongPlus:
            d = {1, m - 1};
            for (long i = 0; i < k; ++i) { d.push_back(-X); d.push_back(X); }
            d.push_back(-(m - n));
            d.push_back(-n);
            break;
        case ZeroVariant::LongMinus:
            d = {1, m - 1, -X};
            for (long i = 0; i < k; ++i) { d.push_back(X); d.push_back(-X); }
            d.push_back(m - n);
            d.push_back(n);
            break;
    }

    ZeroIdentity id;
    const long lead = static_cast<long>(d.size()) - 1;
    id.word = DigitWord{std::move(d), lead};
    id.variant = variant;
    id.k = variant == ZeroVariant::Short ? 0 : k;
    if (eval_word(id.word, base).sign() != 0)
        throw std::logic_error("zero_word: constructed word does not evaluate to zero");
    return id;
}

Expansion add(const DigitWord& w1, const DigitWord& w2, const Base& base, long max_iter) {
    return expand(eval_word(w1, base) + eval_word(w2, base), max_iter);
}

Expansion sub(const DigitWord& w1, const DigitWord& w2, const Base& base, long max_iter) {
    return expand(eval_word(w1, base) - eval_word(w2, base), max_iter);
}

Expansion mul(const DigitWord& w1, const DigitWord& w2, const Base& base, long max_iter) {
    return expand(eval_word(w1, base) * eval_word(w2, base), max_iter);
}

DigitWord add_one_rewrite(const DigitWord& w, const Base& base) {
    require_class_a(base, "add_one_rewrite");
    const digit_t m = base.m(), n = base.n();
    const digit_t X = m - n - 1;

    // Signed working copy, indexed by exponent.  Positions outside the word
    // read as zero, matching the implicit zero padding of finite words.
    std::map<long, digit_t> acc;
    for (std::size_t i = 0; i < w.digits.size(); ++i) {
        long e = w.lead_exp - static_cast<long>(i);
        if (w.digits[i] != 0) acc[e] = w.digits[i];
    }
    auto get = [&](long e) -> digit_t {
        auto it = acc.find(e);
        return it == acc.end() ? 0 : it->second;
    };
    auto put = [&](long e, digit_t delta) { acc[e] += delta; };

    auto build = [&]() {
        long hi = 0, lo = 0;
        for (const auto& [e, v] : acc) {
            if (v == 0) continue;
            hi = std::max(hi, e);
            lo = std::min(lo, e);
        }
        std::vector<digit_t> d;
        d.reserve(static_cast<std::size_t>(hi - std::min(lo, 0L)) + 1);
        for (long e = hi; e >= std::min(lo, 0L); --e) d.push_back(get(e));
        return DigitWord{std::move(d), hi}.canonicalized();
    };
    auto admissible_digits = [&](const DigitWord& c) {
        for (digit_t x : c.digits)
            if (x < 0 || x > m - 1) return false;
        return forbidden_factor_check(c, base);
    };

    // The original digit at exponent 0 before the increment; scans above the
    // radix point read the untouched higher digits.
    put(0, 1);
    DigitWord direct = build();
    if (!admissible_digits(direct)) {
        const digit_t c0 = get(0);
        // How far the alternating (n, m-1) block extends upward from
        // exponent 1; the first pair breaking the pattern is (B, A).
        long k = 0;
        while (get(2 * k + 1) == n && get(2 * k + 2) == m - 1) ++k;
        const digit_t B = get(2 * k + 1);

        if (c0 == m) {
            // The increment overflowed the alphabet.  Repair with the zero
            // identity whose head lands on the first non-pattern pair.
            if (B == 0) {
                put(2 * k + 2, 1);
                put(2 * k + 1, m - 1);
                for (long i = 1; i <= k; ++i) { put(2 * i, -X); put(2 * i - 1, X); }
                put(0, -(m - n));
                put(-1, -n);
            } else if (k == 0) {
                put(1, -1);
                put(0, -m);
                put(-1, -n);
            } else {
                put(2 * k + 1, -1);
                put(2 * k, -(m - 1));
                put(2 * k - 1, X);
                for (long i = 1; i <= k - 1; ++i) { put(2 * i, -X); put(2 * i - 1, X); }
                put(0, -(m - n));
                put(-1, -n);
            }
        } else if (c0 == m - 1 && get(-1) <= n - 1) {
            // The increment created a largest digit whose fractional
            // neighbour is too small.  Both sides of the radix point get a
            // half of a zero identity: a head aligned as in the overflow
            // case, and a tail pushed past the maximal fractional run of
            // pairs from [m-n-1 .. m-1] x [0 .. n-1].
            if (B == 0) {
                put(2 * k + 2, 1);
                put(2 * k + 1, m - 1);
                for (long e = 2 * k; e >= 0; --e) put(e, (2 * k - e) % 2 == 0 ? -X : X);
            } else {
                put(2 * k + 1, -1);
                put(2 * k, -(m - 1));
                for (long e = 2 * k - 1; e >= 0; --e) put(e, (2 * k - 1 - e) % 2 == 0 ? X : -X);
            }

            long l = 0;
            while (get(-2 * l - 2) >= m - n - 1 && get(-2 * l - 2) <= m - 1 &&
                   get(-2 * l - 3) >= 0 && get(-2 * l - 3) <= n - 1)
                ++l;
            const digit_t D = get(-2 * l - 2);
            for (long i = 1; i <= l; ++i) { put(-2 * i + 1, X); put(-2 * i, -X); }
            if (D <= m - n - 1) {
                put(-2 * l - 1, m - n);
                put(-2 * l - 2, n);
            } else {
                put(-2 * l - 1, X);
                put(-2 * l - 2, -(m - n));
                put(-2 * l - 3, -n);
            }
        } else {
            throw Error(Errc::PatternNotMatched,
                        "add_one_rewrite: increment left " + to_string(direct) +
                            " with no matching repair case over " + base.spec_string());
        }

        direct = build();
        if (!admissible_digits(direct))
            throw Error(Errc::PatternNotMatched,
                        "add_one_rewrite: repaired word " + to_string(direct) +
                            " is not admissible over " + base.spec_string());
    }

    if (eval_word(direct, base) != eval_word(w, base) + QuadElem::one(base))
        throw Error(Errc::PatternNotMatched,
                    "add_one_rewrite: rewritten word does not evaluate to the successor");
    return direct;
}

}  // namespace negabeta
