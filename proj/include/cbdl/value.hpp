#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cbdl/errors.hpp"

namespace cbdl {

enum class ValueKind : std::uint8_t { Symbol, Number };

/// A runtime value: an interned-symbol handle or a signed 64-bit integer.
/// Symbol equality is ordinal equality; integer arithmetic wraps.
struct Value {
    ValueKind kind = ValueKind::Number;
    std::int64_t raw = 0;

    static Value symbol(std::int64_t ordinal) { return Value{ValueKind::Symbol, ordinal}; }
    static Value number(std::int64_t n) { return Value{ValueKind::Number, n}; }

    bool is_symbol() const { return kind == ValueKind::Symbol; }
    bool is_number() const { return kind == ValueKind::Number; }

    friend bool operator==(const Value&, const Value&) = default;
};

struct ValueHash {
    std::size_t operator()(const Value& v) const {
        std::uint64_t h = static_cast<std::uint64_t>(v.raw) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(v.kind) + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

struct ValueVecHash {
    std::size_t operator()(const std::vector<Value>& vs) const {
        std::uint64_t h = 0x243f6a8885a308d3ULL;
        ValueHash vh;
        for (const Value& v : vs) {
            h = (h ^ vh(v)) * 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Bidirectional text <-> ordinal map. Ordinals are dense, non-negative,
/// and assigned in first-occurrence order, so any run that interns the
/// same texts in the same order gets the same ordinals.
class SymbolTable {
public:
    /// Returns the existing ordinal if text was seen before, else the
    /// next dense ordinal.
    std::int64_t intern(std::string_view text);

    /// Inverse of intern; throws UnknownOrdinalError for ordinals never
    /// handed out.
    std::string_view resolve(std::int64_t ordinal) const;

    std::optional<std::int64_t> find(std::string_view text) const;

    std::size_t size() const { return texts_.size(); }

private:
    std::vector<std::string> texts_;
    std::unordered_map<std::string, std::int64_t> index_;
};

} // namespace cbdl
