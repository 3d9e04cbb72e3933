#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cbdl {

enum class ParseErrorKind {
    Syntax,
    UnknownRelation,
    ArityMismatch,
    TypeMismatch,
    RangeRestriction,
    DuplicateDecl,
    BadChoiceDomain,
};

const char* to_string(ParseErrorKind kind);

/// Positioned parse/validation error; line and column point at the first
/// offending token (1-based).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, int column, ParseErrorKind kind, const std::string& message);

    const std::string& file() const { return file_; }
    int line() const { return line_; }
    int column() const { return column_; }
    ParseErrorKind kind() const { return kind_; }
    const std::string& message() const { return message_; }

private:
    std::string file_;
    int line_;
    int column_;
    ParseErrorKind kind_;
    std::string message_;
};

enum class TransformErrorKind {
    UnknownRelation,
    UnknownColumn,
    AlreadyChoiceConstrained,
    BoundedDeclExists,
    BadExcludedIndex,
    BadSpec,
};

class TransformError : public std::runtime_error {
public:
    TransformError(TransformErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    TransformErrorKind kind() const { return kind_; }

private:
    TransformErrorKind kind_;
};

/// Raised when the rule set has a cycle through negation; names the
/// relations on one offending cycle.
class StratificationError : public std::runtime_error {
public:
    StratificationError(std::vector<std::string> cycle, const std::string& message)
        : std::runtime_error(message), cycle_(std::move(cycle)) {}

    const std::vector<std::string>& cycle() const { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& message) : std::runtime_error(message) {}
};

/// Bad external fact data (wrong arity, non-numeric text in a number
/// column). Kept separate from EvalError: it is an input problem.
class FactError : public EvalError {
public:
    FactError(std::string source, std::size_t row, const std::string& message);

    const std::string& source() const { return source_; }
    std::size_t row() const { return row_; }

private:
    std::string source_;
    std::size_t row_;
};

class UnknownOrdinalError : public std::out_of_range {
public:
    explicit UnknownOrdinalError(long long ordinal);
};

} // namespace cbdl
