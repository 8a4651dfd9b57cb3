#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "negabeta/admissibility.hpp"
#include "negabeta/arithmetic.hpp"
#include "negabeta/errors.hpp"
#include "test_support.hpp"

using namespace negabeta;
using negabeta_test::eval_expansion;

namespace {

template <class F>
void for_all_words(long alphabet_max, int len, long lead_exp, F&& f) {
    std::vector<digit_t> d(static_cast<std::size_t>(len), 0);
    while (true) {
        f(DigitWord{d, lead_exp});
        int i = len - 1;
        while (i >= 0 && d[static_cast<std::size_t>(i)] == alphabet_max) {
            d[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++d[static_cast<std::size_t>(i)];
    }
}

DigitWord negated(const DigitWord& w) {
    DigitWord out = w;
    for (auto& d : out.digits) d = -d;
    return out;
}

}  // namespace

TEST_CASE("zero identity words evaluate to zero") {
    CHECK(to_string(zero_word(ZeroVariant::Short, 0, parse_base("quad-:3,1")).word) == "1,3,1.");
    CHECK(to_string(zero_word(ZeroVariant::LongPlus, 1, parse_base("quad-:4,1")).word) ==
          "1,3,-2,2,-3,-1.");
    CHECK(to_string(zero_word(ZeroVariant::LongMinus, 0, parse_base("quad-:4,1")).word) ==
          "1,3,-2,3,1.");

    for (long m = 3; m <= 8; ++m) {
        for (long n = 1; n <= m - 2; ++n) {
            Base base = Base::quad_a(m, n);
            for (ZeroVariant v :
                 {ZeroVariant::Short, ZeroVariant::LongPlus, ZeroVariant::LongMinus}) {
                for (long k = 0; k <= 4; ++k) {
                    ZeroIdentity id = zero_word(v, k, base);
                    CHECK(eval_word(id.word, base).sign() == 0);
                    CHECK(eval_word(negated(id.word), base).sign() == 0);
                    CHECK(id.variant == v);
                    if (v == ZeroVariant::Short) break;
                }
            }
        }
    }

    CHECK_THROWS_AS(zero_word(ZeroVariant::Short, 0, parse_base("quad+:2,1")), Error);
    CHECK_THROWS_AS(zero_word(ZeroVariant::LongPlus, 2, parse_base("int:3")), Error);
    try {
        zero_word(ZeroVariant::Short, 0, parse_base("real:1.5@64"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotClassA);
    }
    CHECK_THROWS_AS(zero_word(ZeroVariant::LongPlus, -1, parse_base("quad-:3,1")), Error);
}

TEST_CASE("value level operations reproduce pinned results") {
    struct Row {
        const char* base;
        char op;
        const char* lhs;
        const char* rhs;
        const char* expected;
        OrbitStatus status;
    };
    const Row rows[] = {
        {"quad-:3,1", '+', "1.", "1.", "1,2,1.2,1", OrbitStatus::Finite},
        {"quad+:2,1", '+', "2,1.", "2,1.", "1,1,0,1.1", OrbitStatus::Finite},
        {"quad-:3,1", '-', "0.", "1.", "1,2.1", OrbitStatus::Finite},
        {"quad+:2,1", '-', "0.", "1.", "1,2.(2)^w", OrbitStatus::Periodic},
        {"quad-:3,1", '*', "1,0,1.", "1,0,1.", "2,2,1,1,0.2,1", OrbitStatus::Finite},
        {"quad+:2,1", '*', "2,1.", "1,2,1.", "1,1,0,1.1", OrbitStatus::Finite},
    };
    for (const Row& row : rows) {
        CAPTURE(row.base);
        CAPTURE(row.lhs);
        CAPTURE(row.rhs);
        Base base = parse_base(row.base);
        DigitWord a = parse_digit_word(row.lhs), b = parse_digit_word(row.rhs);
        Expansion got = row.op == '+'   ? add(a, b, base)
                        : row.op == '-' ? sub(a, b, base)
                                        : mul(a, b, base);
        CHECK(got.to_string() == row.expected);
        CHECK(got.status == row.status);
        QuadElem va = eval_word(a, base), vb = eval_word(b, base);
        QuadElem expect = row.op == '+' ? va + vb : row.op == '-' ? va - vb : va * vb;
        CHECK(eval_expansion(got, base) == expect);
    }

    Base q31 = parse_base("quad-:3,1");
    CHECK(add(parse_digit_word("1."), parse_digit_word("1."), q31).frac_len() == 2);
    CHECK(mul(parse_digit_word("1,0,1."), parse_digit_word("1,0,1."), q31).frac_len() == 2);
    CHECK(add(parse_digit_word("2,1."), parse_digit_word("2,1."), parse_base("quad+:2,1"))
              .frac_len() == 1);
}

TEST_CASE("neutral operands leave expansions unchanged") {
    std::mt19937_64 rng(0x5eedu);
    for (const char* spec : {"quad-:3,1", "quad-:4,2", "quad+:2,1", "quad+:3,2", "quad+:1,1",
                             "int:2", "int:10"}) {
        Base base = parse_base(spec);
        for (int t = 0; t < 25; ++t) {
            QuadElem x(base, negabeta_test::random_rat(rng, 30, 6),
                       base.quadratic() ? negabeta_test::random_rat(rng, 30, 6) : Rat(0));
            Expansion ex = expand(x);
            if (ex.status != OrbitStatus::Finite) continue;
            DigitWord w = ex.to_digit_word();
            CHECK(add(w, DigitWord::zero(), base) == ex);
            CHECK(sub(w, w, base).to_string() == "0.");
            CHECK(mul(w, parse_digit_word("1."), base) == ex);
        }
    }
}

TEST_CASE("sums and products of small integers over quad- bases") {
    for (long m = 3; m <= 8; ++m) {
        CAPTURE(m);
        Base base = Base::quad_a(m, 1);
        DigitWord one = expand(QuadElem::one(base)).to_digit_word();
        DigitWord small = expand(QuadElem::rational(base, Rat(m - 2))).to_digit_word();
        CHECK(to_string(one) == "1.");
        CHECK(to_string(small) == std::to_string(m - 2) + ".");

        Expansion s = add(small, one, base);
        Expansion s_want{DigitWord{{1, m - 1, 1}, 2}, PeriodicWord::finite({m - 1, 1}),
                         OrbitStatus::Finite};
        CHECK(s == s_want);
        CHECK(s.to_string() == "1," + std::to_string(m - 1) + ",1." + std::to_string(m - 1) + ",1");

        QuadElem b2 = QuadElem::beta(base) * QuadElem::beta(base);
        DigitWord lhs =
            expand((QuadElem::one(base) + b2) * QuadElem::rational(base, Rat(m - 2)))
                .to_digit_word();
        DigitWord rhs = expand(QuadElem::one(base) + b2).to_digit_word();
        CHECK(to_string(lhs) ==
              std::to_string(m - 2) + ",0," + std::to_string(m - 2) + ".");
        CHECK(to_string(rhs) == "1,0,1.");
        Expansion p = mul(lhs, rhs, base);
        Expansion p_want{DigitWord{{m - 1, m - 1, m - 2, m - 2, 0}, 4},
                         PeriodicWord::finite({m - 1, 1}), OrbitStatus::Finite};
        CHECK(p == p_want);
    }
}

TEST_CASE("class A operations keep expansions finite") {
    std::mt19937_64 rng(0xab1eu);
    for (long m = 3; m <= 6; ++m) {
        for (long n = 1; n <= m - 2; ++n) {
            Base base = Base::quad_a(m, n);
            AdmissibilityContext ctx(base);
            std::uniform_int_distribution<long> digit(0, m - 1), len(1, 6), lead(-2, 3);

            std::vector<DigitWord> pool;
            while (pool.size() < 12) {
                std::vector<digit_t> d(static_cast<std::size_t>(len(rng)));
                for (auto& x : d) x = digit(rng);
                Expansion e = expand(eval_word(DigitWord{d, lead(rng)}, base));
                REQUIRE(e.status == OrbitStatus::Finite);
                pool.push_back(e.to_digit_word());
            }
            for (std::size_t i = 0; i < pool.size(); ++i) {
                for (std::size_t j = i; j < pool.size(); ++j) {
                    QuadElem vi = eval_word(pool[i], base), vj = eval_word(pool[j], base);
                    Expansion s = add(pool[i], pool[j], base);
                    Expansion d = sub(pool[i], pool[j], base);
                    Expansion p = mul(pool[i], pool[j], base);
                    for (const Expansion* e : {&s, &d, &p}) {
                        REQUIRE(e->status == OrbitStatus::Finite);
                        CHECK(ctx.admissible(e->to_digit_word()));
                    }
                    CHECK(eval_expansion(s, base) == vi + vj);
                    CHECK(eval_expansion(d, base) == vi - vj);
                    CHECK(eval_expansion(p, base) == vi * vj);
                }
            }
        }
    }
}

TEST_CASE("quad+ bases leak into infinite expansions under subtraction") {
    for (long m = 1; m <= 6; ++m) {
        for (long n = 1; n <= m; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            Base base = Base::quad_b(m, n);
            Expansion d = sub(DigitWord::zero(), parse_digit_word("1."), base);
            CHECK(d.status == OrbitStatus::Periodic);
            CHECK(d.fractional.pre.empty());
            REQUIRE(d.fractional.per.size() == 1);
            CHECK(d.fractional.per[0] == m - n + 1);
            CHECK(d.to_string() ==
                  "1," + std::to_string(m) + ".(" + std::to_string(m - n + 1) + ")^w");
            CHECK(eval_expansion(d, base) == -QuadElem::one(base));
        }
    }
}

TEST_CASE("add one rewriting agrees with value level addition") {
    struct Row {
        const char* base;
        const char* word;
        const char* expected;
    };
    // The crafted rows hit every repair branch: overflow with an absorbed
    // block and empty continuation, overflow next to a lone pair, overflow
    // behind a longer carry chain, and the fractional repairs on both sides
    // of the pattern table.
    const Row rows[] = {
        {"quad-:3,1", "1.", "1,2,1.2,1"},
        {"quad-:4,1", "0.", "1."},
        {"quad-:4,1", "3,1,3.1", "1,3,1,3,1."},
        {"quad-:4,1", "1,3.1", "0."},
        {"quad-:4,1", "1,3,1,3.1", "3,1."},
        {"quad-:3,1", "2,1.", "1,0.2,1"},
        {"quad-:4,2", "2.1,3", "1,3,2.2,2,2,2"},
    };
    for (const Row& row : rows) {
        CAPTURE(row.base);
        CAPTURE(row.word);
        Base base = parse_base(row.base);
        DigitWord got = add_one_rewrite(parse_digit_word(row.word), base);
        CHECK(to_string(got) == row.expected);
    }

    long rewrites = 0;
    for (const char* spec : {"quad-:3,1", "quad-:4,1", "quad-:4,2", "quad-:5,2"}) {
        Base base = parse_base(spec);
        AdmissibilityContext ctx(base);
        DigitWord one = parse_digit_word("1.");
        auto probe = [&](const DigitWord& w) {
            if (!ctx.admissible(w)) return;
            DigitWord direct = add_one_rewrite(w, base);
            Expansion via_value = add(w, one, base);
            REQUIRE(via_value.status == OrbitStatus::Finite);
            DigitWord want = via_value.to_digit_word();
            CHECK_MESSAGE(direct == want, to_string(w), " over ", spec, ": rewrite gave ",
                          to_string(direct), " but value addition gave ", to_string(want));
            CHECK(ctx.admissible(direct));
            ++rewrites;
        };
        for (int len = 1; len <= 5; ++len) {
            for_all_words(base.m() - 1, len, len - 1, probe);
            if (len >= 3) {
                for_all_words(base.m() - 1, len, 0, probe);
                for_all_words(base.m() - 1, len, 1, probe);
            }
        }
    }
    CHECK(rewrites > 4000);

    CHECK_THROWS_AS(add_one_rewrite(parse_digit_word("1."), parse_base("quad+:2,1")), Error);
    CHECK_THROWS_AS(add_one_rewrite(parse_digit_word("1."), parse_base("int:2")), Error);
    try {
        add_one_rewrite(parse_digit_word("1."), parse_base("real:1.5@64"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotClassA);
    }
}
