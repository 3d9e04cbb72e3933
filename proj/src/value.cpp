#include "cbdl/value.hpp"

#include <sstream>

namespace cbdl {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::UnknownRelation: return "unknown-relation";
        case ParseErrorKind::ArityMismatch: return "arity-mismatch";
        case ParseErrorKind::TypeMismatch: return "type-mismatch";
        case ParseErrorKind::RangeRestriction: return "range-restriction";
        case ParseErrorKind::DuplicateDecl: return "duplicate-decl";
        case ParseErrorKind::BadChoiceDomain: return "bad-choice-domain";
    }
    return "unknown";
}

namespace {
std::string format_parse_error(const std::string& file, int line, int column, ParseErrorKind kind,
                               const std::string& message) {
    std::ostringstream os;
    os << file << ":" << line << ":" << column << ": " << to_string(kind) << ": " << message;
    return os.str();
}
} // namespace

ParseError::ParseError(std::string file, int line, int column, ParseErrorKind kind, const std::string& message)
    : std::runtime_error(format_parse_error(file, line, column, kind, message)),
      file_(std::move(file)),
      line_(line),
      column_(column),
      kind_(kind),
      message_(message) {}

FactError::FactError(std::string source, std::size_t row, const std::string& message)
    : EvalError(source + ":" + std::to_string(row) + ": " + message), source_(std::move(source)), row_(row) {}

UnknownOrdinalError::UnknownOrdinalError(long long ordinal)
    : std::out_of_range("unknown ordinal " + std::to_string(ordinal)) {}

std::int64_t SymbolTable::intern(std::string_view text) {
    auto it = index_.find(std::string(text));
    if (it != index_.end()) {
        return it->second;
    }
    std::int64_t ordinal = static_cast<std::int64_t>(texts_.size());
    texts_.emplace_back(text);
    index_.emplace(texts_.back(), ordinal);
    return ordinal;
}

std::string_view SymbolTable::resolve(std::int64_t ordinal) const {
    if (ordinal < 0 || static_cast<std::size_t>(ordinal) >= texts_.size()) {
        throw UnknownOrdinalError(ordinal);
    }
    return texts_[static_cast<std::size_t>(ordinal)];
}

std::optional<std::int64_t> SymbolTable::find(std::string_view text) const {
    auto it = index_.find(std::string(text));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

} // namespace cbdl
