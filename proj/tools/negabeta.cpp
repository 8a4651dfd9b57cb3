#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "negabeta/admissibility.hpp"
#include "negabeta/analysis.hpp"
#include "negabeta/arithmetic.hpp"
#include "negabeta/errors.hpp"
#include "negabeta/expansion.hpp"
#include "negabeta/transform.hpp"

using namespace negabeta;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage =
    "usage: negabeta <command> --base <spec> [options]\n"
    "\n"
    "base specs: int:<b>   quad-:<m>,<n>   quad+:<m>,<n>   real:<decimal>[@<bits>]\n"
    "values:     exact rationals or beta expressions, e.g. -1/1 or 1/2-1/2*beta\n"
    "words:      comma digits with a radix dot, e.g. 1,2.1 (periodic: 2,(1)^w)\n"
    "\n"
    "commands\n"
    "  expand --value <v>                 canonical expansion, status tagged\n"
    "  dlb                                digit stream of the left endpoint\n"
    "  dstar                              excluded stream of the right endpoint\n"
    "  admissible --word <w>              true/false under the ordering test\n"
    "  add|sub|mul --lhs <w> --rhs <w>    exact arithmetic, re-expanded\n"
    "  add-one --word <w>                 successor by digit rewriting\n"
    "  enumerate [--max-digits <N>]       admissible integer words, canonical order\n"
    "  scan-L --op add|sub|mul [--max-digits <N>] [--max-frac <N>]\n"
    "  classify                           base kind and ring flags\n"
    "  hk [--empirical-digits <N>]        conjugate modulus bounds\n"
    "  fin-trivial                        whether only zero expands finitely\n"
    "\n"
    "global flags: --base <spec> (required)  --max-iter <N>  --machine\n";

struct Args {
    std::string command;
    std::map<std::string, std::string> values;
    bool machine = false;
};

Args parse_args(int argc, char** argv) {
    Args a;
    for (int i = 1; i < argc; ++i) {
        std::string t = argv[i];
        if (t == "--machine") {
            a.machine = true;
        } else if (t.rfind("--", 0) == 0) {
            static const char* known[] = {"--base",       "--max-iter",  "--value",
                                          "--word",       "--lhs",       "--rhs",
                                          "--op",         "--max-digits", "--max-frac",
                                          "--empirical-digits"};
            bool ok = false;
            for (const char* k : known) ok = ok || t == k;
            if (!ok) throw UsageError("unknown flag " + t);
            if (i + 1 >= argc) throw UsageError("flag " + t + " needs a value");
            a.values[t] = argv[++i];
        } else if (a.command.empty()) {
            a.command = t;
        } else {
            throw UsageError("unexpected argument " + t);
        }
    }
    if (a.command.empty()) throw UsageError("no command given");
    return a;
}

std::string need(const Args& a, const std::string& flag) {
    auto it = a.values.find(flag);
    if (it == a.values.end()) throw UsageError(a.command + " needs " + flag);
    return it->second;
}

long get_long(const Args& a, const std::string& flag, long fallback) {
    auto it = a.values.find(flag);
    if (it == a.values.end()) return fallback;
    try {
        std::size_t used = 0;
        long v = std::stol(it->second, &used);
        if (used != it->second.size()) throw UsageError("");
        return v;
    } catch (const UsageError&) {
        throw UsageError(flag + " expects an integer, got " + it->second);
    } catch (const std::exception&) {
        throw UsageError(flag + " expects an integer, got " + it->second);
    }
}

using Record = std::vector<std::pair<std::string, std::string>>;

void emit(const Args& a, const std::string& human, const Record& record) {
    if (!a.machine) {
        std::cout << human << "\n";
        return;
    }
    bool first = true;
    for (const auto& [k, v] : record) {
        std::cout << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    std::cout << "\n";
}

const char* status_name(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::Finite: return "finite";
        case OrbitStatus::Periodic: return "periodic";
        case OrbitStatus::Truncated: return "truncated";
    }
    return "truncated";
}

const char* kind_name(BaseKind k) {
    switch (k) {
        case BaseKind::Integer: return "int";
        case BaseKind::QuadA: return "quad-";
        case BaseKind::QuadB: return "quad+";
        case BaseKind::GenericReal: return "real";
    }
    return "real";
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

int run(const Args& args) {
    const Base base = parse_base(need(args, "--base"));
    const long max_iter = get_long(args, "--max-iter", 10000);
    const std::string spec = base.spec_string();

    if (args.command == "expand") {
        QuadElem v = parse_value(need(args, "--value"), base);
        Expansion e = expand(v, max_iter);
        emit(args, e.to_string() + " [" + status_name(e.status) + "]",
             {{"base", spec},
              {"value", v.to_string()},
              {"expansion", e.to_string()},
              {"status", status_name(e.status)}});
        return 0;
    }
    if (args.command == "dlb") {
        PeriodicWord d = left_endpoint_digits(base, max_iter);
        emit(args, to_string(d), {{"base", spec}, {"dlb", to_string(d)}});
        return 0;
    }
    if (args.command == "dstar") {
        PeriodicWord d = d_star_r(base, max_iter);
        emit(args, to_string(d), {{"base", spec}, {"dstar", to_string(d)}});
        return 0;
    }
    if (args.command == "admissible") {
        std::string text = need(args, "--word");
        bool ok;
        if (text.find('(') != std::string::npos) {
            ok = is_admissible(parse_periodic_word(text), base, max_iter);
        } else {
            ok = is_admissible(parse_digit_word(text), base, max_iter);
        }
        emit(args, bool_name(ok),
             {{"base", spec}, {"word", text}, {"admissible", bool_name(ok)}});
        return 0;
    }
    if (args.command == "add" || args.command == "sub" || args.command == "mul") {
        DigitWord lhs = parse_digit_word(need(args, "--lhs"));
        DigitWord rhs = parse_digit_word(need(args, "--rhs"));
        Expansion e = args.command == "add"   ? add(lhs, rhs, base, max_iter)
                      : args.command == "sub" ? sub(lhs, rhs, base, max_iter)
                                              : mul(lhs, rhs, base, max_iter);
        emit(args, e.to_string() + " [" + status_name(e.status) + "]",
             {{"base", spec},
              {"op", args.command},
              {"lhs", to_string(lhs)},
              {"rhs", to_string(rhs)},
              {"result", e.to_string()},
              {"status", status_name(e.status)}});
        return 0;
    }
    if (args.command == "add-one") {
        DigitWord w = parse_digit_word(need(args, "--word"));
        DigitWord r = add_one_rewrite(w, base);
        emit(args, to_string(r),
             {{"base", spec}, {"word", to_string(w)}, {"result", to_string(r)}});
        return 0;
    }
    if (args.command == "enumerate") {
        long md = get_long(args, "--max-digits", 5);
        enumerate_z(base, md, [&](const DigitWord& w) {
            emit(args, to_string(w), {{"base", spec}, {"word", to_string(w)}});
        });
        return 0;
    }
    if (args.command == "scan-L") {
        std::string opname = need(args, "--op");
        ScanOp op;
        if (opname == "add") op = ScanOp::Add;
        else if (opname == "sub") op = ScanOp::Sub;
        else if (opname == "mul") op = ScanOp::Mul;
        else throw UsageError("--op expects add, sub or mul, got " + opname);
        long md = get_long(args, "--max-digits", 5);
        long mf = get_long(args, "--max-frac", 64);
        ScanReport r = scan_L(base, op, md, mf);
        emit(args,
             "observed_L=" + std::to_string(r.observed_L) + " witness=" +
                 to_string(r.witness.lhs) + "|" + to_string(r.witness.rhs),
             {{"base", spec},
              {"op", opname},
              {"max_digits", std::to_string(r.max_digits)},
              {"max_frac", std::to_string(mf)},
              {"observed_L", std::to_string(r.observed_L)},
              {"witness_lhs", to_string(r.witness.lhs)},
              {"witness_rhs", to_string(r.witness.rhs)},
              {"witness_result", r.witness.result.to_string()},
              {"infinite_count", std::to_string(r.infinite_count)},
              {"pairs_tested", std::to_string(r.pairs_tested)}});
        return 0;
    }
    if (args.command == "classify") {
        Classification c = classify(base);
        const char* cs = c.conjugate_sign == ConjugateSign::Positive   ? "positive"
                         : c.conjugate_sign == ConjugateSign::Negative ? "negative"
                                                                       : "none";
        Record rec{{"base", spec},
                   {"kind", kind_name(c.kind)},
                   {"pisot", bool_name(c.pisot)},
                   {"conjugate_sign", cs},
                   {"ring_candidate", bool_name(c.ring_candidate)},
                   {"z_ring", bool_name(c.z_ring)}};
        std::string human;
        for (const auto& [k, v] : rec)
            if (k != "base") human += (human.empty() ? "" : " ") + k + "=" + v;
        emit(args, human, rec);
        return 0;
    }
    if (args.command == "hk") {
        long ed = get_long(args, "--empirical-digits", 12);
        HKBounds h = hk_bounds(base, ed);
        Record rec{{"base", spec},
                   {"H", h.H.to_string()},
                   {"K", h.K.to_string()},
                   {"exact", bool_name(h.exact)},
                   {"bound_add", std::to_string(h.bound_add)},
                   {"bound_mul", std::to_string(h.bound_mul)}};
        std::string human;
        for (const auto& [k, v] : rec)
            if (k != "base") human += (human.empty() ? "" : " ") + k + "=" + v;
        emit(args, human, rec);
        return 0;
    }
    if (args.command == "fin-trivial") {
        bool t = fin_trivial(base);
        emit(args, bool_name(t), {{"base", spec}, {"fin_trivial", bool_name(t)}});
        return 0;
    }
    throw UsageError("unknown command " + args.command);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(parse_args(argc, argv));
    } catch (const UsageError& u) {
        std::cerr << "usage error: " << u.what() << "\n\n" << kUsage;
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
