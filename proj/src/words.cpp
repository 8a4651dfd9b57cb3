#include "negabeta/words.hpp"

#include <algorithm>
#include <cstdlib>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

digit_t parse_digit(const std::string& tok) {
    if (tok.empty()) throw Error(Errc::MalformedSpec, "empty digit");
    for (char c : tok)
        if (c < '0' || c > '9') throw Error(Errc::MalformedSpec, "bad digit '" + tok + "'");
    if (tok.size() > 15) throw Error(Errc::MalformedSpec, "digit too large '" + tok + "'");
    return std::atoll(tok.c_str());
}

std::vector<digit_t> parse_digit_list(const std::string& s) {
    std::vector<digit_t> out;
    if (s.empty()) return out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_digit(tok));
    return out;
}

std::string join_digits(const std::vector<digit_t>& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out;
}

}  // namespace

digit_t DigitWord::at_exp(long e) const {
    if (e > lead_exp || e < last_exp()) return 0;
    return digits[static_cast<std::size_t>(lead_exp - e)];
}

DigitWord DigitWord::canonicalized() const {
    std::vector<digit_t> d = digits;
    long le = lead_exp;
    std::size_t first = 0;
    while (first < d.size() && d[first] == 0) ++first;
    if (first == d.size()) return zero();
    le -= static_cast<long>(first);
    d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(first));
    while (!d.empty() && d.back() == 0 && le - static_cast<long>(d.size()) + 1 < 0) d.pop_back();
    long last = le - static_cast<long>(d.size()) + 1;
    if (last > 0) d.insert(d.end(), static_cast<std::size_t>(last), 0);
    return DigitWord{std::move(d), le};
}

long DigitWord::frac_len() const {
    DigitWord c = canonicalized();
    return std::max(0L, -c.last_exp());
}

DigitWord parse_digit_word(const std::string& text) {
    if (text.empty()) throw Error(Errc::MalformedSpec, "empty word");
    auto dot = text.find('.');
    if (dot != std::string::npos && text.find('.', dot + 1) != std::string::npos)
        throw Error(Errc::MalformedSpec, "multiple radix points in '" + text + "'");
    std::string ipart = dot == std::string::npos ? text : text.substr(0, dot);
    std::string fpart = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (ipart.empty()) throw Error(Errc::MalformedSpec, "missing integer part in '" + text + "'");
    std::vector<digit_t> d = parse_digit_list(ipart);
    long le = static_cast<long>(d.size()) - 1;
    for (digit_t f : parse_digit_list(fpart)) d.push_back(f);
    return DigitWord{std::move(d), le};
}

std::string to_string(const DigitWord& w) {
    std::string out;
    for (long e = std::max(w.lead_exp, 0L); e >= 0; --e) {
        if (!out.empty()) out += ',';
        out += std::to_string(w.at_exp(e));
    }
    out += '.';
    for (long e = -1; e >= w.last_exp(); --e) {
        if (out.back() != '.') out += ',';
        out += std::to_string(w.at_exp(e));
    }
    return out;
}

digit_t PeriodicWord::at(std::size_t i) const {
    if (i < pre.size()) return pre[i];
    if (per.empty()) return 0;
    return per[(i - pre.size()) % per.size()];
}

PeriodicWord PeriodicWord::canonicalized() const {
    std::vector<digit_t> p = pre, q = per;
    if (!q.empty()) {
        for (std::size_t d = 1; d <= q.size(); ++d) {
            if (q.size() % d) continue;
            bool repeats = true;
            for (std::size_t i = d; i < q.size() && repeats; ++i) repeats = q[i] == q[i - d];
            if (repeats) {
                q.resize(d);
                break;
            }
        }
        if (std::all_of(q.begin(), q.end(), [](digit_t x) { return x == 0; })) q.clear();
    }
    if (!q.empty()) {
        while (!p.empty() && p.back() == q.back()) {
            p.pop_back();
            std::rotate(q.rbegin(), q.rbegin() + 1, q.rend());
        }
    } else {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    return PeriodicWord{std::move(p), std::move(q)};
}

bool PeriodicWord::same_word(const PeriodicWord& o) const {
    return canonicalized() == o.canonicalized();
}

PeriodicWord parse_periodic_word(const std::string& text) {
    if (text.empty()) throw Error(Errc::MalformedSpec, "empty word");
    auto open = text.find('(');
    if (open == std::string::npos) return PeriodicWord{parse_digit_list(text), {}};
    const std::string tail = ")^w";
    if (text.size() < tail.size() ||
        text.compare(text.size() - tail.size(), tail.size(), tail) != 0)
        throw Error(Errc::MalformedSpec, "periodic word must end in ')^w': '" + text + "'");
    std::string prepart = text.substr(0, open);
    if (!prepart.empty()) {
        if (prepart.back() != ',')
            throw Error(Errc::MalformedSpec, "expected ',' before '(' in '" + text + "'");
        prepart.pop_back();
    }
    std::string perpart = text.substr(open + 1, text.size() - tail.size() - open - 1);
    PeriodicWord w{parse_digit_list(prepart), parse_digit_list(perpart)};
    if (w.per.empty()) throw Error(Errc::MalformedSpec, "empty period in '" + text + "'");
    return w;
}

std::string to_string(const PeriodicWord& w) {
    if (w.is_finite()) return w.pre.empty() ? "0" : join_digits(w.pre);
    std::string out = w.pre.empty() ? "" : join_digits(w.pre) + ",";
    return out + "(" + join_digits(w.per) + ")^w";
}

QuadElem eval_word(const DigitWord& w, const Base& base) {
    if (base.quadratic()) {
        // integer Horner on the coefficient pair: acc*(-beta) + d sends
        // (A, B) to (nn*B + d, -(A + m*B))
        long m = base.m(), nn = base.conj_norm();
        Int A = 0, B = 0, t;
        for (digit_t d : w.digits) {
            t = nn * B + static_cast<long>(d);
            B = -(A + m * B);
            A = std::move(t);
        }
        QuadElem v(base, Rat(A), Rat(B));
        return w.last_exp() == 0 ? v : v * pow_neg_beta(base, w.last_exp());
    }
    QuadElem neg_beta = -QuadElem::beta(base);
    QuadElem acc = QuadElem::zero(base);
    for (digit_t d : w.digits) acc = acc * neg_beta + QuadElem::rational(base, Rat(static_cast<long>(d)));
    return w.last_exp() == 0 ? acc : acc * pow_neg_beta(base, w.last_exp());
}

}  // namespace negabeta
