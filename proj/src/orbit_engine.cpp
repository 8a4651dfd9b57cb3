#include "orbit_engine.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "negabeta/errors.hpp"

namespace negabeta::detail {

namespace {

// generous cap on the leading-exponent search; |x| <= 2^(bits) * (beta+1)
// forces the search to settle long before this
long j_guard(const QuadElem& x) {
    auto bits = [](const Rat& r) {
        return static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
                                 mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
    };
    return 8 * (bits(x.a()) + bits(x.b())) + 64;
}

constexpr long kLinearScan = 32;

}  // namespace

namespace {

DriveResult run_drive(const QuadConsts& C, std::optional<FastState> fast, BigState big,
                      long max_iter, bool do_j_search, bool detect_cycles, long guard) {
    DriveResult res;

    if (do_j_search) {
        while (true) {
            bool inside;
            if (fast) {
                auto cl = fast_cmp_left(C, *fast);
                auto cr = fast_cmp_right(C, *fast);
                if (!cl || !cr) {
                    big = to_big(*fast);
                    fast.reset();
                    continue;
                }
                inside = *cl > 0 && *cr > 0;
            } else {
                inside = big_cmp_left(C, big) > 0 && big_cmp_right(C, big) > 0;
            }
            if (inside) break;
            if (fast) {
                FastState next = *fast;
                if (fast_div_neg_beta(C, next)) {
                    fast = next;
                } else {
                    big = to_big(*fast);
                    fast.reset();
                    big_div_neg_beta(C, big);
                }
            } else {
                big_div_neg_beta(C, big);
            }
            if (++res.j > guard) throw std::logic_error("leading-exponent search did not settle");
        }
    }

    // histories indexed by digit count, for exact cycle detection
    std::vector<FastState> fhist;
    std::vector<BigState> bhist;
    std::map<std::pair<long long, long long>, long> fseen;
    std::map<std::pair<Int, Int>, long> bseen;
    bool mapped = false;

    auto escalate = [&]() {
        big = to_big(*fast);
        fast.reset();
        for (const FastState& s : fhist) bhist.push_back(to_big(s));
        fhist.clear();
        if (mapped) {
            for (long i = 0; i < static_cast<long>(bhist.size()); ++i)
                bseen.emplace(std::pair<Int, Int>{bhist[i].A, bhist[i].B}, i);
            fseen.clear();
        }
    };

    for (long k = 0; k < max_iter; ++k) {
        if (fast ? fast->is_zero() : big.is_zero()) {
            res.status = 0;
            return res;
        }

        if (detect_cycles) {
            long hit = -1;
            if (!mapped && k > kLinearScan) {
                mapped = true;
                if (fast)
                    for (long i = 0; i < static_cast<long>(fhist.size()); ++i)
                        fseen.emplace(std::pair<long long, long long>{fhist[i].A, fhist[i].B}, i);
                else
                    for (long i = 0; i < static_cast<long>(bhist.size()); ++i)
                        bseen.emplace(std::pair<Int, Int>{bhist[i].A, bhist[i].B}, i);
            }
            if (fast) {
                if (mapped) {
                    auto it = fseen.find({fast->A, fast->B});
                    if (it != fseen.end()) hit = it->second;
                } else {
                    for (long i = 0; i < static_cast<long>(fhist.size()); ++i)
                        if (fhist[i] == *fast) {
                            hit = i;
                            break;
                        }
                }
            } else {
                std::pair<Int, Int> key{big.A, big.B};
                if (mapped) {
                    auto it = bseen.find(key);
                    if (it != bseen.end()) hit = it->second;
                } else {
                    for (long i = 0; i < static_cast<long>(bhist.size()); ++i)
                        if (bhist[i].A == key.first && bhist[i].B == key.second) {
                            hit = i;
                            break;
                        }
                }
            }
            if (hit >= 0) {
                res.status = 1;
                res.cycle_at = hit;
                return res;
            }
            if (fast) {
                fhist.push_back(*fast);
                if (mapped) fseen.emplace(std::pair<long long, long long>{fast->A, fast->B}, k);
            } else {
                bhist.push_back(big);
                if (mapped) bseen.emplace(std::pair<Int, Int>{big.A, big.B}, k);
            }
        }

        long long digit;
        if (fast) {
            FastState next = *fast;
            if (fast_step(C, next, digit)) {
                fast = next;
            } else {
                escalate();
                digit = big_step(C, big);
            }
        } else {
            digit = big_step(C, big);
        }
        res.digits.push_back(digit);
    }

    res.status = 2;
    return res;
}

}  // namespace

DriveResult drive_quad(const QuadElem& x, long max_iter, bool do_j_search, bool detect_cycles) {
    QuadConsts C(x.base());
    BigState big = big_state_from(x);
    std::optional<FastState> fast = to_fast(big);
    return run_drive(C, fast, std::move(big), max_iter, do_j_search, detect_cycles, j_guard(x));
}

DriveResult drive_quad_ll(const Base& base, long long a, long long b, long max_iter,
                          bool do_j_search, bool detect_cycles) {
    QuadConsts C(base);
    FastState fast{a, b, 1};
    return run_drive(C, fast, BigState{}, max_iter, do_j_search, detect_cycles, 1088);
}

DriveResult drive_rational(const QuadElem& x, long max_iter, bool do_j_search) {
    const Base& base = x.base();
    assert(!base.quadratic() && x.b() == 0);
    Rat beta = base.kind() == BaseKind::Integer ? Rat(base.int_value()) : base.generic_value();
    Rat r = 1 / (beta + 1);
    Rat l = -beta * r;
    Rat shift = -l;
    bool detect_cycles = base.kind() == BaseKind::Integer;

    Rat y = x.a();
    DriveResult res;

    if (do_j_search) {
        long guard = j_guard(x);
        while (!(l < y && y < r)) {
            y /= -beta;
            if (++res.j > guard) throw std::logic_error("leading-exponent search did not settle");
        }
    }

    std::vector<Rat> hist;
    std::map<Rat, long> seen;
    bool mapped = false;

    for (long k = 0; k < max_iter; ++k) {
        if (y == 0) {
            res.status = 0;
            return res;
        }
        if (detect_cycles) {
            long hit = -1;
            if (!mapped && k > kLinearScan) {
                mapped = true;
                for (long i = 0; i < static_cast<long>(hist.size()); ++i) seen.emplace(hist[i], i);
            }
            if (mapped) {
                auto it = seen.find(y);
                if (it != seen.end()) hit = it->second;
            } else {
                for (long i = 0; i < static_cast<long>(hist.size()); ++i)
                    if (hist[i] == y) {
                        hit = i;
                        break;
                    }
            }
            if (hit >= 0) {
                res.status = 1;
                res.cycle_at = hit;
                return res;
            }
            hist.push_back(y);
            if (mapped) seen.emplace(y, k);
        }
        Rat t = -beta * y;
        Int d = rat_floor(t + shift);
        res.digits.push_back(d.get_si());
        y = t - Rat(d);
    }

    res.status = 2;
    return res;
}

}  // namespace negabeta::detail
