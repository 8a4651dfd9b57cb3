#include "negabeta/rational.hpp"

#include <cctype>

#include "negabeta/errors.hpp"

namespace negabeta {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) throw Error(Errc::MalformedSpec, "empty number in '" + text + "'");

    Rat r;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw Error(Errc::MalformedSpec, "mixed '/' and '.' in '" + text + "'");
    if (slash != std::string::npos) {
        std::string np = s.substr(0, slash), dp = s.substr(slash + 1);
        if (!all_digits(np) || !all_digits(dp))
            throw Error(Errc::MalformedSpec, "bad fraction '" + text + "'");
        if (Int(dp) == 0) throw Error(Errc::MalformedSpec, "zero denominator in '" + text + "'");
        r = make_rat(Int(np), Int(dp));
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp))
            throw Error(Errc::MalformedSpec, "bad decimal '" + text + "'");
        Int scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        r = make_rat(Int(ip) * scale + Int(fp), scale);
    } else {
        if (!all_digits(s)) throw Error(Errc::MalformedSpec, "bad integer '" + text + "'");
        r = Rat(Int(s));
    }
    return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();  // "p" or "p/q", canonical
}

}  // namespace negabeta
