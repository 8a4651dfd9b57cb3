#ifndef NEGABETA_ERRORS_HPP
#define NEGABETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace negabeta {

// Stable error vocabulary.  CLI output prints name() verbatim, so new
// conditions must extend the enum rather than reuse a loosely related code.
enum class Errc {
    MalformedSpec,
    ConstraintViolation,
    NotQuadratic,
    OutOfDomain,
    NotEventuallyPeriodicWithinBudget,
    UndecidableDigit,
    NotClassA,
    PatternNotMatched,
    BudgetExceeded,
    KZero,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MalformedSpec: return "MalformedSpec";
        case Errc::ConstraintViolation: return "ConstraintViolation";
        case Errc::NotQuadratic: return "NotQuadratic";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::NotEventuallyPeriodicWithinBudget: return "NotEventuallyPeriodicWithinBudget";
        case Errc::UndecidableDigit: return "UndecidableDigit";
        case Errc::NotClassA: return "NotClassA";
        case Errc::PatternNotMatched: return "PatternNotMatched";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::KZero: return "KZero";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

  private:
    Errc code_;
};

}  // namespace negabeta

#endif
