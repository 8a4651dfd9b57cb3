#ifndef NEGABETA_ORBIT_ENGINE_HPP
#define NEGABETA_ORBIT_ENGINE_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include "negabeta/base.hpp"
#include "negabeta/quad_elem.hpp"

// Exact orbit arithmetic for quadratic bases.  A point is (A + B*beta)/S with
// integer A, B and S > 0; one transform step x -> -beta*x - d keeps S fixed,
// dividing by -beta multiplies S by n.  The fast tier runs on int64 state with
// __int128 intermediates and reports failure instead of overflowing, at which
// point the caller escalates to the big-integer tier (same formulas on mpz).
namespace negabeta::detail {

using i128 = __int128;
using u128 = unsigned __int128;

struct QuadConsts {
    long m, n, nn, Nc, D;  // nn = conj_norm, Nc = 1 + m + nn, D = m*m - 4*nn
    long digit_max;

    explicit QuadConsts(const Base& base)
        : m(base.m()),
          n(base.n()),
          nn(base.conj_norm()),
          Nc(1 + base.m() + base.conj_norm()),
          D(base.disc()),
          digit_max(base.digit_max()) {}
};

inline u128 u128_abs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

inline u128 isqrt_u128(u128 v) {
    if (v == 0) return 0;
    auto x = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
    while (x > 0 && x * x > v) --x;
    while ((x + 1) * (x + 1) <= v) ++x;
    return x;
}

// Squaring guards: with |Q| < 2^52 and D < 2^22, Q^2 D < 2^126; |U| < 2^62
// keeps U^2 < 2^124.  Both fit u128.
constexpr u128 kQGuard = static_cast<u128>(1) << 52;
constexpr i128 kUGuard = static_cast<i128>(1) << 62;
constexpr long kDGuard = 1L << 22;

// sign of U + Q*sqrt(D); nullopt when the squaring guards would be violated
inline std::optional<int> sign_u_q(i128 U, i128 Q, long D) {
    if (Q == 0) return U > 0 ? 1 : U < 0 ? -1 : 0;
    if (U == 0) return Q > 0 ? 1 : -1;
    if ((U > 0) == (Q > 0)) return U > 0 ? 1 : -1;
    u128 au = u128_abs(U), aq = u128_abs(Q);
    if (au >= static_cast<u128>(kUGuard) || aq >= kQGuard || D >= kDGuard) return std::nullopt;
    u128 l = au * au, r = aq * aq * static_cast<u128>(D);
    assert(l != r);  // D is not a perfect square
    return (l > r) == (U > 0) ? 1 : -1;
}

// floor((U + Q*sqrt(D)) / (2R)) with R > 0; exact because sqrt(D) is
// irrational whenever Q != 0
inline std::optional<i128> floor_u_q_d(i128 U, i128 Q, long D, i128 R) {
    i128 t;
    if (Q == 0) {
        t = 0;
    } else {
        u128 aq = u128_abs(Q);
        if (aq >= kQGuard || D >= kDGuard) return std::nullopt;
        auto s = static_cast<i128>(isqrt_u128(aq * aq * static_cast<u128>(D)));
        t = Q > 0 ? s : -s - 1;
    }
    if (U >= kUGuard || -U >= kUGuard) return std::nullopt;
    i128 num = U + t, den = 2 * R;
    i128 q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --q;
    return q;
}

struct FastState {
    long long A = 0, B = 0, S = 1;

    bool is_zero() const { return A == 0 && B == 0; }
    bool operator==(const FastState& o) const = default;
};

// scaled coordinates of x - l and r - x (both over the positive denominator
// S*Nc), as sign of (2P + Q*m) + Q*sqrt(D)
inline std::optional<int> fast_cmp_left(const QuadConsts& C, const FastState& st) {
    i128 P = static_cast<i128>(st.A) * C.Nc + static_cast<i128>(C.nn) * st.S;
    i128 Q = static_cast<i128>(st.B) * C.Nc + st.S;
    return sign_u_q(2 * P + Q * C.m, Q, C.D);
}

inline std::optional<int> fast_cmp_right(const QuadConsts& C, const FastState& st) {
    i128 P = static_cast<i128>(C.Nc - C.nn) * st.S - static_cast<i128>(st.A) * C.Nc;
    i128 Q = -(static_cast<i128>(st.B) * C.Nc + st.S);
    return sign_u_q(2 * P + Q * C.m, Q, C.D);
}

// one transform step; false = escalate to the big tier
inline bool fast_step(const QuadConsts& C, FastState& st, long long& digit_out) {
    long long A1, mB, ApmB;
    if (__builtin_mul_overflow(C.nn, st.B, &A1)) return false;
    if (__builtin_mul_overflow(C.m, st.B, &mB)) return false;
    if (__builtin_add_overflow(st.A, mB, &ApmB)) return false;
    if (ApmB == std::numeric_limits<long long>::min()) return false;
    long long B1 = -ApmB;

    i128 P = static_cast<i128>(A1) * C.Nc + static_cast<i128>(C.nn) * st.S;
    i128 Q = static_cast<i128>(B1) * C.Nc + st.S;
    auto d = floor_u_q_d(2 * P + Q * C.m, Q, C.D, static_cast<i128>(st.S) * C.Nc);
    if (!d) return false;
    assert(*d >= 0 && *d <= C.digit_max);
    auto digit = static_cast<long long>(*d);

    long long dS, newA;
    if (__builtin_mul_overflow(digit, st.S, &dS)) return false;
    if (__builtin_sub_overflow(A1, dS, &newA)) return false;
    st.A = newA;
    st.B = B1;
    digit_out = digit;
    return true;
}

// x -> x / (-beta); false = escalate
inline bool fast_div_neg_beta(const QuadConsts& C, FastState& st) {
    // quad-: (A,B,S) -> (-(A*m + B*n), A, n*S); quad+: (A*m - B*n, -A, n*S)
    long long Am, Bn, S2;
    if (__builtin_mul_overflow(st.A, C.m, &Am)) return false;
    if (__builtin_mul_overflow(st.B, C.n, &Bn)) return false;
    if (__builtin_mul_overflow(st.S, C.n, &S2)) return false;
    long long A2, B2;
    if (C.nn > 0) {  // quad-
        if (__builtin_add_overflow(Am, Bn, &A2)) return false;
        if (A2 == std::numeric_limits<long long>::min()) return false;
        A2 = -A2;
        B2 = st.A;
    } else {  // quad+
        if (__builtin_sub_overflow(Am, Bn, &A2)) return false;
        if (st.A == std::numeric_limits<long long>::min()) return false;
        B2 = -st.A;
    }
    st = FastState{A2, B2, S2};
    return true;
}

struct BigState {
    Int A, B, S;

    bool is_zero() const { return A == 0 && B == 0; }
    bool operator==(const BigState& o) const { return A == o.A && B == o.B && S == o.S; }
};

inline int big_sign_u_q(const Int& U, const Int& Q, long D) {
    int su = sgn(U), sq = sgn(Q);
    if (sq == 0) return su;
    if (su == 0) return sq;
    if (su == sq) return su;
    Int l = U * U, r = Q * Q * D;
    assert(l != r);
    return (l > r) == (su > 0) ? 1 : -1;
}

inline Int big_floor_u_q(const Int& U, const Int& Q, const Int& R, long D) {
    Int t;
    if (Q == 0) {
        t = 0;
    } else {
        Int qq = Q * Q * D;
        mpz_sqrt(t.get_mpz_t(), qq.get_mpz_t());
        if (Q < 0) t = -t - 1;
    }
    Int num = U + t, den = 2 * R, q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline int big_cmp_left(const QuadConsts& C, const BigState& st) {
    Int P = st.A * C.Nc + C.nn * st.S;
    Int Q = st.B * C.Nc + st.S;
    return big_sign_u_q(2 * P + Q * C.m, Q, C.D);
}

inline int big_cmp_right(const QuadConsts& C, const BigState& st) {
    Int P = (C.Nc - C.nn) * st.S - st.A * C.Nc;
    Int Q = -(st.B * C.Nc + st.S);
    return big_sign_u_q(2 * P + Q * C.m, Q, C.D);
}

inline long long big_step(const QuadConsts& C, BigState& st) {
    Int A1 = C.nn * st.B;
    Int B1 = -(st.A + C.m * st.B);
    Int P = A1 * C.Nc + C.nn * st.S;
    Int Q = B1 * C.Nc + st.S;
    Int d = big_floor_u_q(2 * P + Q * C.m, Q, st.S * C.Nc, C.D);
    assert(d >= 0 && d <= C.digit_max);
    st.A = A1 - d * st.S;
    st.B = std::move(B1);
    return d.get_si();
}

inline void big_div_neg_beta(const QuadConsts& C, BigState& st) {
    Int A2, B2;
    if (C.nn > 0) {
        A2 = -(st.A * C.m + st.B * C.n);
        B2 = st.A;
    } else {
        A2 = st.A * C.m - st.B * C.n;
        B2 = -st.A;
    }
    st = BigState{std::move(A2), std::move(B2), st.S * C.n};
}

inline BigState big_state_from(const QuadElem& x) {
    Int an = x.a().get_num(), ad = x.a().get_den();
    Int bn = x.b().get_num(), bd = x.b().get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), bd.get_mpz_t());
    Int S = ad / g * bd;
    BigState st{an * (S / ad), bn * (S / bd), S};
    // strip common content so the fast tier gets a chance
    mpz_gcd(g.get_mpz_t(), st.A.get_mpz_t(), st.B.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), st.S.get_mpz_t());
    if (g > 1) {
        st.A /= g;
        st.B /= g;
        st.S /= g;
    }
    return st;
}

inline QuadElem big_state_value(const Base& base, const BigState& st) {
    return QuadElem(base, make_rat(st.A, st.S), make_rat(st.B, st.S));
}

inline std::optional<FastState> to_fast(const BigState& st) {
    if (!st.A.fits_slong_p() || !st.B.fits_slong_p() || !st.S.fits_slong_p()) return std::nullopt;
    constexpr long long lim = 1LL << 52;
    long long A = st.A.get_si(), B = st.B.get_si(), S = st.S.get_si();
    if (A >= lim || A <= -lim || B >= lim || B <= -lim || S >= lim) return std::nullopt;
    return FastState{A, B, S};
}

inline BigState to_big(const FastState& st) {
    BigState b;
    b.A = static_cast<long>(st.A);
    b.B = static_cast<long>(st.B);
    b.S = static_cast<long>(st.S);
    return b;
}

// Full orbit driver.  With do_j_search, first divides by -beta until the point
// lies in the open interval (l, r) and reports the count as j; then produces
// digits until zero, an exact cycle, or max_iter digits.
struct DriveResult {
    std::vector<long long> digits;
    int status = 0;     // 0 finite, 1 periodic, 2 truncated
    long cycle_at = -1; // periodic only: index where the cycle starts
    long j = 0;
};

DriveResult drive_quad(const QuadElem& x, long max_iter, bool do_j_search, bool detect_cycles);
// entry for scaled-integer points a + b*beta (S = 1), bypassing rational setup
DriveResult drive_quad_ll(const Base& base, long long a, long long b, long max_iter,
                          bool do_j_search, bool detect_cycles);
DriveResult drive_rational(const QuadElem& x, long max_iter, bool do_j_search);

}  // namespace negabeta::detail

#endif
