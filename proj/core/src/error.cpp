#include "fsc/error.hpp"

#include <sstream>

namespace fsc {

std::string SourceSpan::to_string() const {
    std::ostringstream out;
    out << (file.empty() ? "<input>" : file) << ':' << begin.line << ':' << begin.column;
    return out.str();
}

std::string Diagnostic::to_string() const {
    return span.to_string() + (severity == Severity::Error ? ": error: " : ": warning: ") + message;
}

SourceError::SourceError(SourceSpan span, const std::string& message)
    : Error(span.to_string() + ": " + message), span_(std::move(span)), message_(message) {}

namespace {

std::string with_expected(const std::string& message, const std::vector<std::string>& expected) {
    if (expected.empty()) return message;
    std::string text = message + " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) text += i + 1 == expected.size() ? " or " : ", ";
        text += expected[i];
    }
    return text + ")";
}

}  // namespace

SyntaxError::SyntaxError(SourceSpan span, const std::string& message, std::vector<std::string> expected)
    : SourceError(std::move(span), with_expected(message, expected)), expected_(std::move(expected)) {}

BudgetExceeded::BudgetExceeded(std::size_t budget)
    : Error("state space too large (budget " + std::to_string(budget) +
            " states exceeded), use symbolic engine"),
      budget_(budget) {}

}  // namespace fsc
