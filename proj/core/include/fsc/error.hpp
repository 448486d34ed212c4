#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fsc {

struct SourcePos {
    int line = 0;
    int column = 0;
};

struct SourceSpan {
    std::string file;
    SourcePos begin;
    SourcePos end;

    std::string to_string() const;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    SourceSpan span;
    std::string message;

    std::string to_string() const;
};

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// An error attributable to a location in the input text.
class SourceError : public Error {
public:
    SourceError(SourceSpan span, const std::string& message);

    const SourceSpan& span() const noexcept { return span_; }
    const std::string& message() const noexcept { return message_; }
    Diagnostic diagnostic() const { return {Severity::Error, span_, message_}; }

private:
    SourceSpan span_;
    std::string message_;
};

class LexError : public SourceError {
    using SourceError::SourceError;
};

class SyntaxError : public SourceError {
public:
    SyntaxError(SourceSpan span, const std::string& message, std::vector<std::string> expected);

    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::vector<std::string> expected_;
};

class ResolveError : public SourceError {
    using SourceError::SourceError;
};

/// Raised while evaluating expressions or applying updates on a concrete state.
class EvalError : public Error {
    using Error::Error;
};

/// Explicit state space grew beyond the configured budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t budget);

    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

}  // namespace fsc
