#include "negabeta/admissibility.hpp"

#include <algorithm>
#include <numeric>

#include "negabeta/errors.hpp"

namespace negabeta {

AltOrdering alt_compare(const PeriodicWord& u, const PeriodicWord& v) {
    std::size_t pu = std::max<std::size_t>(u.per.size(), 1);
    std::size_t pv = std::max<std::size_t>(v.per.size(), 1);
    // two sequences agreeing past both preperiods for lcm positions agree forever
    std::size_t bound = std::max(u.pre.size(), v.pre.size()) + std::lcm(pu, pv);
    for (std::size_t i = 0; i < bound; ++i) {
        digit_t a = u.at(i), b = v.at(i);
        if (a == b) continue;
        long j = static_cast<long>(i) + 1;
        bool u_first = (j % 2 == 1) ? a > b : a < b;
        return AltOrdering{u_first ? AltOrdering::Outcome::Less : AltOrdering::Outcome::Greater,
                           j};
    }
    return AltOrdering{AltOrdering::Outcome::Equal, 0};
}

PeriodicWord d_star_r(const Base& base, long max_iter) {
    PeriodicWord dl = left_endpoint_digits(base, max_iter).canonicalized();
    if (dl.pre.empty() && !dl.per.empty() && dl.per.size() % 2 == 1) {
        std::vector<digit_t> per;
        per.reserve(dl.per.size() + 1);
        per.push_back(0);
        per.insert(per.end(), dl.per.begin(), dl.per.end());
        per.back() -= 1;
        return PeriodicWord{{}, std::move(per)}.canonicalized();
    }
    std::vector<digit_t> pre;
    pre.reserve(dl.pre.size() + 1);
    pre.push_back(0);
    pre.insert(pre.end(), dl.pre.begin(), dl.pre.end());
    return PeriodicWord{std::move(pre), dl.per}.canonicalized();
}

AdmissibilityContext::AdmissibilityContext(const Base& base, long max_iter)
    : base_(base),
      lower_(left_endpoint_digits(base, max_iter).canonicalized()),
      upper_(d_star_r(base, max_iter)),
      dmax_(base.digit_max()) {}

bool AdmissibilityContext::suffix_ok(const PeriodicWord& u) const {
    if (alt_compare(lower_, u).greater()) return false;
    return alt_compare(u, upper_).less();
}

bool AdmissibilityContext::admissible(const DigitWord& w) const {
    for (digit_t d : w.digits)
        if (d < 0 || d > dmax_) return false;
    std::vector<digit_t> seq;
    seq.reserve(w.digits.size() + 1);
    seq.push_back(0);
    seq.insert(seq.end(), w.digits.begin(), w.digits.end());
    for (std::size_t o = 0; o < seq.size(); ++o)
        if (!suffix_ok(PeriodicWord::finite({seq.begin() + static_cast<long>(o), seq.end()})))
            return false;
    return true;
}

bool AdmissibilityContext::admissible(const PeriodicWord& w) const {
    for (digit_t d : w.pre)
        if (d < 0 || d > dmax_) return false;
    for (digit_t d : w.per)
        if (d < 0 || d > dmax_) return false;
    std::vector<digit_t> head;
    head.reserve(w.pre.size() + 1);
    head.push_back(0);
    head.insert(head.end(), w.pre.begin(), w.pre.end());
    for (std::size_t o = 0; o < head.size(); ++o)
        if (!suffix_ok(PeriodicWord{{head.begin() + static_cast<long>(o), head.end()}, w.per}))
            return false;
    // suffixes inside the period are its rotations
    for (std::size_t s = 0; s < w.per.size(); ++s) {
        std::vector<digit_t> rot(w.per.begin() + static_cast<long>(s), w.per.end());
        rot.insert(rot.end(), w.per.begin(), w.per.begin() + static_cast<long>(s));
        if (!suffix_ok(PeriodicWord{{}, std::move(rot)})) return false;
    }
    return true;
}

bool is_admissible(const DigitWord& w, const Base& base, long max_iter) {
    return AdmissibilityContext(base, max_iter).admissible(w);
}

bool is_admissible(const PeriodicWord& w, const Base& base, long max_iter) {
    return AdmissibilityContext(base, max_iter).admissible(w);
}

bool forbidden_factor_check(const DigitWord& w, const Base& base) {
    if (!base.quadratic())
        throw Error(Errc::NotQuadratic, "factor patterns exist only for the quadratic classes");
    long m = base.m(), n = base.n(), dmax = base.digit_max();
    const auto& d = w.digits;
    for (digit_t x : d)
        if (x < 0 || x > dmax) return false;

    if (base.kind() == BaseKind::QuadA) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            digit_t next = i + 1 < d.size() ? d[i + 1] : 0;
            if (d[i] == m - 1 && next < n) return false;
        }
        return true;
    }

    digit_t run_digit = m - n;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != m) continue;
        std::size_t j = i + 1;
        while (j < d.size() && d[j] == run_digit) ++j;
        long r = static_cast<long>(j - i - 1);
        if (n == m && j == d.size()) {
            // only zeros remain: forbidden exactly when the whole tail from
            // the preceding position reads 0 m 0^w
            if (i == 0 || d[i - 1] == 0) return false;
            continue;
        }
        digit_t c = j < d.size() ? d[j] : 0;
        if (r % 2 == 0 ? c < run_digit : c > run_digit) return false;
    }
    return true;
}

}  // namespace negabeta
