#include <doctest.h>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "negabeta/errors.hpp"
#include "negabeta/expansion.hpp"
#include "test_support.hpp"

using namespace negabeta;
using negabeta_test::eval_expansion;

namespace {

// Exponent of the leading nonzero digit, or nullopt for zero.
std::optional<long> lead_exponent(const Expansion& e) {
    if (!(e.integer_part == DigitWord::zero())) return e.integer_part.lead_exp;
    std::size_t span = e.fractional.pre.size() + e.fractional.per.size();
    for (std::size_t i = 0; i < span; ++i)
        if (e.fractional.at(i) != 0) return -static_cast<long>(i) - 1;
    return std::nullopt;
}

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

}  // namespace

TEST_CASE("frozen expansions") {
    struct Row {
        const char* base;
        const char* value;
        const char* expected;
    };
    const Row rows[] = {
        {"quad-:3,1", "-1", "1,2.1"},
        {"quad-:3,1", "1", "1."},
        {"quad-:3,1", "2", "1,2,1.2,1"},
        {"quad-:3,1", "0", "0."},
        {"quad-:3,1", "1/2", "1.(2,2,1)^w"},
        {"quad-:3,1", "-1/5-1/5*beta", "1,2.(1,2)^w"},
        {"quad-:4,1", "-1", "1,3.1"},
        {"quad-:4,1", "-1/6-1/6*beta", "1,3.(1,3)^w"},
        {"quad-:5,2", "-1", "1,4.2"},
        {"quad+:2,1", "-1", "1,2.(2)^w"},
        {"quad+:2,1", "2", "1,2,1."},
        {"quad+:2,1", "1", "1."},
        {"quad+:2,1", "1/2-1/2*beta", "1,2.(1)^w"},
        {"quad+:2,2", "2", "1,2,0."},
        {"quad+:2,2", "-1", "1,2.(1)^w"},
        {"quad+:1,1", "1", "1,1,0."},
        {"quad+:1,1", "2", "1,1,1."},
        {"quad+:1,1", "-1", "1,1.(1)^w"},
        {"quad+:1,1", "1-1*beta", "1,1."},
        {"quad+:3,1", "2", "2."},
        {"quad+:3,3", "2", "2."},
        {"int:2", "2", "1,1,0."},
        {"int:2", "-3", "1,1,0,1."},
        {"int:2", "1/3", "1.(2)^w"},
        {"int:2", "1/4", "0.0,1"},
        {"int:10", "-7", "1,3."},
        {"int:10", "-3/2", "1,9.5"},
        {"real:1.5", "0", "0."},
    };
    for (const Row& row : rows) {
        CAPTURE(row.base);
        CAPTURE(row.value);
        Base base = parse_base(row.base);
        Expansion e = expand(parse_value(row.value, base));
        CHECK(e.to_string() == row.expected);
        CHECK(eval_expansion(e, base) == parse_value(row.value, base));
    }
}

TEST_CASE("expansion round trips exactly for every word value") {
    for (const char* spec :
         {"quad-:3,1", "quad-:4,2", "quad+:2,1", "quad+:3,3", "quad+:1,1", "int:2", "int:3"}) {
        Base base = parse_base(spec);
        CAPTURE(spec);
        long dmax = base.digit_max();
        for (int len = 1; len <= 4; ++len) {
            for (long lead : {-2L, 0L, 3L}) {
                for_all_words(dmax, len, lead, [&](const DigitWord& w) {
                    QuadElem x = eval_word(w, base);
                    Expansion e = expand(x);
                    CHECK(e.status != OrbitStatus::Truncated);
                    CHECK(eval_expansion(e, base) == x);
                    if (e.status == OrbitStatus::Finite) {
                        DigitWord c = e.to_digit_word();
                        CHECK(c.is_canonical());
                        CHECK(eval_word(c, base) == x);
                        CHECK(expand(eval_word(c, base)) == e);
                    }
                });
            }
        }
    }
}

TEST_CASE("digit strings shift with multiplication by powers of the base") {
    std::mt19937_64 rng(413);
    for (const char* spec : {"quad-:3,1", "quad-:4,2", "quad+:2,1", "int:2"}) {
        Base base = parse_base(spec);
        CAPTURE(spec);
        long dmax = base.digit_max();
        std::uniform_int_distribution<long> dd(0, dmax), ld(-2, 3);
        std::uniform_int_distribution<int> len(1, 5);
        for (int trial = 0; trial < 120; ++trial) {
            std::vector<digit_t> digits(static_cast<std::size_t>(len(rng)));
            for (auto& d : digits) d = dd(rng);
            QuadElem x = eval_word(DigitWord{digits, ld(rng)}, base);
            Expansion e = expand(x);
            if (e.status != OrbitStatus::Finite) continue;
            DigitWord w = e.to_digit_word();
            for (long j = -3; j <= 3; ++j) {
                Expansion shifted = expand(x * pow_neg_beta(base, j));
                REQUIRE(shifted.status == OrbitStatus::Finite);
                CHECK(shifted.to_digit_word() == DigitWord{w.digits, w.lead_exp + j}.canonicalized());
            }
        }
    }
}

TEST_CASE("values lie in the closed bracket fixed by their leading exponent") {
    for (const char* spec : {"quad-:3,1", "quad-:5,2", "quad+:2,1", "quad+:1,1", "int:2"}) {
        Base base = parse_base(spec);
        CAPTURE(spec);
        long dmax = base.digit_max();
        std::vector<QuadElem> values;
        for (int len = 1; len <= 3; ++len)
            for (long lead : {-2L, 2L})
                for_all_words(dmax, len, lead,
                              [&](const DigitWord& w) { values.push_back(eval_word(w, base)); });
        values.push_back(left_endpoint(base));
        values.push_back(right_endpoint(base));
        for (long j = -3; j <= 3; ++j)
            values.push_back(left_endpoint(base) * pow_neg_beta(base, j));
        for (const QuadElem& x : values) {
            Expansion e = expand(x);
            auto le = lead_exponent(e);
            if (!le) continue;
            RangeBracket rb = range_bracket(base, *le + 1);
            CHECK(rb.low < rb.high);
            CHECK(rb.low <= x);
            CHECK(x <= rb.high);
        }
    }

    // closedness is sharp: these values sit exactly on a bracket endpoint
    Base qa = parse_base("quad-:3,1");
    CHECK(expand(right_endpoint(qa)).integer_part.lead_exp == 0);
    CHECK(range_bracket(qa, 1).low == right_endpoint(qa));
    CHECK(expand(left_endpoint(qa)).integer_part.lead_exp == 1);
    CHECK(range_bracket(qa, 2).high == left_endpoint(qa));

    Base golden = parse_base("quad+:1,1");
    CHECK(expand(QuadElem::one(golden)).integer_part.lead_exp == 2);
    CHECK(range_bracket(golden, 3).low == QuadElem::one(golden));

    // sign pattern: odd brackets positive, even brackets negative
    for (long k = 1; k <= 6; ++k) {
        RangeBracket rb = range_bracket(qa, k);
        CHECK(rb.low.sign() == (k % 2 ? 1 : -1));
        CHECK(rb.high.sign() == (k % 2 ? 1 : -1));
    }
}

TEST_CASE("expansion order matches digit order with alternating signs") {
    for (const char* spec : {"quad-:3,1", "quad+:1,1"}) {
        Base base = parse_base(spec);
        CAPTURE(spec);
        struct Entry {
            QuadElem x;
            DigitWord w;
        };
        std::vector<Entry> entries;
        for (int len = 1; len <= 3; ++len)
            for_all_words(base.digit_max(), len, 0, [&](const DigitWord& w) {
                QuadElem x = eval_word(w, base);
                Expansion e = expand(x);
                if (e.status == OrbitStatus::Finite) entries.push_back({x, e.to_digit_word()});
            });
        for (std::size_t i = 0; i < entries.size(); ++i) {
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                const Entry &p = entries[i], &q = entries[j];
                long hi = std::max(p.w.lead_exp, q.w.lead_exp);
                long lo = std::min(p.w.last_exp(), q.w.last_exp());
                long diff_exp = lo - 1;
                for (long e = hi; e >= lo; --e) {
                    if (p.w.at_exp(e) != q.w.at_exp(e)) {
                        diff_exp = e;
                        break;
                    }
                }
                if (diff_exp < lo) {
                    CHECK(p.x == q.x);
                    continue;
                }
                int digit_sign = p.w.at_exp(diff_exp) > q.w.at_exp(diff_exp) ? 1 : -1;
                int expected = diff_exp % 2 == 0 ? digit_sign : -digit_sign;
                CHECK((p.x - q.x).sign() == expected);
            }
        }
    }
}

TEST_CASE("word canonicalization reduces out-of-range digit strings") {
    Base qa31 = parse_base("quad-:3,1");
    CHECK(canonicalize_word(parse_digit_word("0,1,2.1,0"), qa31).to_string() == "1,2.1");
    CHECK(canonicalize_word(parse_digit_word("0."), qa31).to_string() == "0.");

    CHECK(canonicalize_word(parse_digit_word("2."), parse_base("int:2")).to_string() == "1,1,0.");
    CHECK(canonicalize_word(parse_digit_word("2."), parse_base("quad+:1,1")).to_string() ==
          "1,1,1.");

    // digit strings that cancel to zero, including a shifted copy
    Base qa41 = parse_base("quad-:4,1");
    CHECK(canonicalize_word(DigitWord{{1, 4, 1}, 2}, qa41).to_string() == "0.");
    CHECK(canonicalize_word(DigitWord{{1, 4, 1}, 7}, qa41).to_string() == "0.");
    CHECK(canonicalize_word(DigitWord{{1, 3, -2, 2, -3, -1}, 5}, qa41).to_string() == "0.");
}

TEST_CASE("huge values expand through the escalating integer tier") {
    Base base = parse_base("quad-:4,2");
    Int big = 1;
    for (int i = 0; i < 30; ++i) big *= 10;
    QuadElem x = QuadElem::rational(base, Rat(big));
    Expansion e = expand(x);
    REQUIRE(e.status == OrbitStatus::Finite);
    CHECK(e.integer_part.lead_exp > 40);
    CHECK(eval_word(e.to_digit_word(), base) == x);

    Expansion neg = expand(-x);
    REQUIRE(neg.status == OrbitStatus::Finite);
    CHECK(eval_word(neg.to_digit_word(), base) == -x);

    CHECK_THROWS_AS(expand(x, 4), Error);
    try {
        expand(x, 4);
    } catch (const Error& err) {
        CHECK(err.code() == Errc::BudgetExceeded);
    }
}

TEST_CASE("truncated expansions render a visible ellipsis") {
    Base real = parse_base("real:1.5");
    Expansion e = expand(parse_value("1", real), 8);
    CHECK(e.status == OrbitStatus::Truncated);
    CHECK(e.to_string() == "1,1,0.0,1,1,1,1...");
    CHECK_THROWS_AS(e.frac_len(), std::logic_error);
    CHECK_THROWS_AS(e.to_digit_word(), std::logic_error);
}
