#include "negabeta/base.hpp"

#include <cassert>
#include <charconv>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

constexpr long kMaxCoeff = 1000000;  // keeps disc() and digit arithmetic in long range

long parse_long(const std::string& s, const std::string& ctx) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error(Errc::MalformedSpec, "bad integer '" + s + "' in " + ctx);
    return v;
}

long isqrt_long(long x) {
    assert(x >= 0);
    Int r;
    Int v(x);
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r.get_si();
}

bool is_square(long x) {
    long s = isqrt_long(x);
    return s * s == x;
}

}  // namespace

Base Base::integer(long b) {
    if (b < 2) throw Error(Errc::ConstraintViolation, "integer base needs b >= 2");
    if (b > kMaxCoeff) throw Error(Errc::ConstraintViolation, "integer base too large");
    Base r;
    r.kind_ = BaseKind::Integer;
    r.m_ = b;
    return r;
}

Base Base::quad_a(long m, long n) {
    if (!(m - 2 >= n && n >= 1))
        throw Error(Errc::ConstraintViolation, "quad- base needs m-2 >= n >= 1");
    if (m > kMaxCoeff) throw Error(Errc::ConstraintViolation, "quad- coefficients too large");
    Base r;
    r.kind_ = BaseKind::QuadA;
    r.m_ = m;
    r.n_ = n;
    assert(!is_square(r.disc()));
    return r;
}

Base Base::quad_b(long m, long n) {
    if (!(m >= n && n >= 1))
        throw Error(Errc::ConstraintViolation, "quad+ base needs m >= n >= 1");
    if (m > kMaxCoeff) throw Error(Errc::ConstraintViolation, "quad+ coefficients too large");
    Base r;
    r.kind_ = BaseKind::QuadB;
    r.m_ = m;
    r.n_ = n;
    assert(!is_square(r.disc()));
    return r;
}

Base Base::generic(const Rat& value, int precision_bits, const std::string& text) {
    if (value <= 1) throw Error(Errc::ConstraintViolation, "real base needs value > 1");
    if (precision_bits < 1) throw Error(Errc::ConstraintViolation, "precision must be positive");
    Base r;
    r.kind_ = BaseKind::GenericReal;
    r.generic_ = std::make_shared<const Rat>(value);
    r.bits_ = precision_bits;
    r.text_ = text.empty() ? rat_to_string(value) : text;
    return r;
}

long Base::m() const {
    if (!quadratic()) throw Error(Errc::NotQuadratic, "m is defined for quadratic bases only");
    return m_;
}

long Base::n() const {
    if (!quadratic()) throw Error(Errc::NotQuadratic, "n is defined for quadratic bases only");
    return n_;
}

long Base::int_value() const {
    assert(kind_ == BaseKind::Integer);
    return m_;
}

const Rat& Base::generic_value() const {
    assert(kind_ == BaseKind::GenericReal && generic_);
    return *generic_;
}

long Base::trace() const { return m(); }

long Base::conj_norm() const { return kind_ == BaseKind::QuadA ? n() : -n(); }

long Base::disc() const {
    long t = m();  // throws for non-quadratic kinds
    return t * t - 4 * conj_norm();
}

long Base::digit_max() const {
    switch (kind_) {
        case BaseKind::Integer:
            return m_;
        case BaseKind::QuadA:
        case BaseKind::QuadB:
            // beta = (m + sqrt(disc))/2 and disc is not a square, so the
            // integer-sqrt truncation never lands on beta itself.
            return (m_ + isqrt_long(disc())) / 2;
        case BaseKind::GenericReal: {
            Int f = rat_floor(*generic_);
            return f.get_si();
        }
    }
    return 0;
}

std::string Base::spec_string() const {
    switch (kind_) {
        case BaseKind::Integer:
            return "int:" + std::to_string(m_);
        case BaseKind::QuadA:
            return "quad-:" + std::to_string(m_) + "," + std::to_string(n_);
        case BaseKind::QuadB:
            return "quad+:" + std::to_string(m_) + "," + std::to_string(n_);
        case BaseKind::GenericReal:
            return "real:" + text_ + "@" + std::to_string(bits_);
    }
    return "";
}

bool Base::operator==(const Base& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == BaseKind::GenericReal) return *generic_ == *o.generic_ && bits_ == o.bits_;
    return m_ == o.m_ && n_ == o.n_;
}

Base parse_base(const std::string& spec) {
    auto pair_args = [&](const std::string& body, const std::string& ctx) {
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw Error(Errc::MalformedSpec, "expected '<m>,<n>' in " + ctx);
        return std::pair<long, long>{parse_long(body.substr(0, comma), ctx),
                                     parse_long(body.substr(comma + 1), ctx)};
    };

    if (spec.rfind("int:", 0) == 0) {
        return Base::integer(parse_long(spec.substr(4), spec));
    }
    if (spec.rfind("quad-:", 0) == 0) {
        auto [m, n] = pair_args(spec.substr(6), spec);
        return Base::quad_a(m, n);
    }
    if (spec.rfind("quad+:", 0) == 0) {
        auto [m, n] = pair_args(spec.substr(6), spec);
        return Base::quad_b(m, n);
    }
    if (spec.rfind("real:", 0) == 0) {
        std::string body = spec.substr(5);
        int bits = 256;
        auto at = body.find('@');
        if (at != std::string::npos) {
            long b = parse_long(body.substr(at + 1), spec);
            if (b < 1 || b > 1 << 20) throw Error(Errc::MalformedSpec, "bad precision in " + spec);
            bits = static_cast<int>(b);
            body = body.substr(0, at);
        }
        return Base::generic(parse_rat(body), bits, body);
    }
    throw Error(Errc::MalformedSpec,
                "base must be int:<b> | quad-:<m>,<n> | quad+:<m>,<n> | real:<v>[@<bits>]");
}

}  // namespace negabeta
