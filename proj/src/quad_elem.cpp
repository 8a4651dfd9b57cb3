#include "negabeta/quad_elem.hpp"

#include <cassert>
#include <stdexcept>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

Rat rational_beta(const Base& base) {
    return base.kind() == BaseKind::Integer ? Rat(base.int_value()) : base.generic_value();
}

}  // namespace

QuadElem::QuadElem(const Base& base, Rat a, Rat b)
    : base_(base), a_(std::move(a)), b_(std::move(b)) {
    if (b_ != 0 && !base_.quadratic()) {
        a_ += b_ * rational_beta(base_);
        b_ = 0;
    }
}

static void require_same_base(const QuadElem& x, const QuadElem& y) {
    if (x.base() != y.base()) throw std::logic_error("mixed bases in field arithmetic");
}

QuadElem QuadElem::operator-() const { return QuadElem(base_, Rat(-a_), Rat(-b_)); }

QuadElem QuadElem::operator+(const QuadElem& o) const {
    require_same_base(*this, o);
    return QuadElem(base_, a_ + o.a_, b_ + o.b_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    require_same_base(*this, o);
    return QuadElem(base_, a_ - o.a_, b_ - o.b_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    require_same_base(*this, o);
    if (b_ == 0 && o.b_ == 0) return rational(base_, a_ * o.a_);
    // beta^2 = m*beta - conj_norm
    Rat cross = b_ * o.b_;
    Rat a = a_ * o.a_ - Rat(base_.conj_norm()) * cross;
    Rat b = a_ * o.b_ + o.a_ * b_ + Rat(base_.trace()) * cross;
    return QuadElem(base_, std::move(a), std::move(b));
}

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw Error(Errc::OutOfDomain, "division by zero in Q(beta)");
    if (b_ == 0) return rational(base_, 1 / a_);
    // 1/v = conj(v) / (v * conj(v)); the norm is rational and nonzero
    Rat norm = a_ * a_ + a_ * b_ * base_.trace() + b_ * b_ * base_.conj_norm();
    assert(norm != 0);
    return QuadElem(base_, (a_ + b_ * base_.trace()) / norm, -b_ / norm);
}

QuadElem QuadElem::operator/(const QuadElem& o) const { return *this * o.inverse(); }

int QuadElem::sign() const {
    if (b_ == 0) return sgn(a_);
    // v = (P + Q*sqrt(D))/2 with P = 2a + b*m, Q = b, D = disc (not a square)
    Rat P = 2 * a_ + b_ * base_.trace();
    const Rat& Q = b_;
    int sp = sgn(P), sq = sgn(Q);
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    Rat lhs = P * P, rhs = Q * Q * Rat(base_.disc());
    int c = cmp(lhs, rhs);
    assert(c != 0);
    return sp > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

Int QuadElem::floor() const {
    if (b_ == 0) return rat_floor(a_);
    // Approximate sqrt(D) to within 2^-k where 2^k bounds |numerator(b)|, so
    // the rational candidate is within 1/2 of the true value; then correct by
    // exact sign tests (at most one step each way).
    Int bn = b_.get_num();
    std::size_t k = mpz_sizeinbase(bn.get_mpz_t(), 2);
    Int scale = Int(1) << k;
    Int ds = Int(base_.disc()) * scale * scale;
    Int s;
    mpz_sqrt(s.get_mpz_t(), ds.get_mpz_t());
    Rat approx = a_ + b_ * make_rat(base_.trace() * scale + s, 2 * scale);
    Int c = rat_floor(approx);
    while ((*this - rational(base_, Rat(c))).sign() < 0) c -= 1;
    while ((*this - rational(base_, Rat(Int(c + 1)))).sign() >= 0) c += 1;
    return c;
}

QuadElem QuadElem::conjugate() const {
    if (!base_.quadratic())
        throw Error(Errc::NotQuadratic, "conjugate requires a quadratic base");
    return QuadElem(base_, a_ + b_ * base_.trace(), -b_);
}

std::string QuadElem::to_string() const {
    if (b_ == 0) return rat_to_string(a_);
    Rat babs = abs(b_);
    std::string bs = rat_to_string(babs) + "*beta";
    if (a_ == 0) return (sgn(b_) < 0 ? "-" : "") + bs;
    return rat_to_string(a_) + (sgn(b_) < 0 ? "-" : "+") + bs;
}

QuadElem pow_neg_beta(const Base& base, long k) {
    QuadElem factor = -QuadElem::beta(base);
    if (k < 0) {
        factor = factor.inverse();
        k = -k;
    }
    QuadElem acc = QuadElem::one(base);
    while (k > 0) {
        if (k & 1) acc *= factor;
        factor *= factor;
        k >>= 1;
    }
    return acc;
}

QuadElem parse_value(const std::string& text, const Base& base) {
    if (text.empty()) throw Error(Errc::MalformedSpec, "empty value");
    // Rationals contain only digits, '/', '.', and a leading sign, so any
    // '+'/'-' past position 0 separates the beta term.
    std::size_t sep = std::string::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] == '+' || text[i] == '-') {
            sep = i;
            break;
        }
    }
    auto strip_beta = [](std::string term) {
        const std::string suffix = "*beta";
        if (term.size() < suffix.size() ||
            term.compare(term.size() - suffix.size(), suffix.size(), suffix) != 0)
            throw Error(Errc::MalformedSpec, "expected '<rat>*beta' in '" + term + "'");
        return term.substr(0, term.size() - suffix.size());
    };
    if (sep == std::string::npos) {
        if (text.find("*beta") != std::string::npos)
            return QuadElem(base, Rat(0), parse_rat(strip_beta(text)));
        return QuadElem::rational(base, parse_rat(text));
    }
    Rat a = parse_rat(text.substr(0, sep));
    Rat b = parse_rat(strip_beta(text.substr(sep + 1)));
    if (text[sep] == '-') b = -b;
    return QuadElem(base, std::move(a), std::move(b));
}

}  // namespace negabeta
