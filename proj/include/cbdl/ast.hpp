#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cbdl/value.hpp"

namespace cbdl {

// ---------------------------------------------------------------------------
// Terms

enum class ArithOp {
    Add,
    Sub,
    Mul,
    Mod, // Euclidean: result is always in [0, |rhs|)
    Ord, // symbol -> its ordinal
    Mix, // __mix(seed, t...): 64-bit avalanche chain
    Enum, // __enum(rel, nkey, keys..., counts...): per-key enumeration (test hook)
};

struct Term {
    struct Variable {
        std::string name;
        friend bool operator==(const Variable&, const Variable&) = default;
    };
    struct Constant {
        Value value;
        friend bool operator==(const Constant&, const Constant&) = default;
    };
    struct Arith {
        ArithOp op;
        std::vector<Term> args;
        friend bool operator==(const Arith&, const Arith&) = default;
    };

    std::variant<Variable, Constant, Arith> node;

    static Term var(std::string name) { return Term{Variable{std::move(name)}}; }
    static Term constant(Value v) { return Term{Constant{v}}; }
    static Term arith(ArithOp op, std::vector<Term> args) { return Term{Arith{op, std::move(args)}}; }

    bool is_variable() const { return std::holds_alternative<Variable>(node); }
    bool is_constant() const { return std::holds_alternative<Constant>(node); }
    bool is_arith() const { return std::holds_alternative<Arith>(node); }

    const Variable& as_variable() const { return std::get<Variable>(node); }
    const Constant& as_constant() const { return std::get<Constant>(node); }
    const Arith& as_arith() const { return std::get<Arith>(node); }

    friend bool operator==(const Term&, const Term&) = default;
};

/// Wildcard variables are named "_<n>" with a per-rule counter; the
/// formatter prints them back as plain "_".
bool is_wildcard_name(std::string_view name);

// ---------------------------------------------------------------------------
// Literals and rules

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

const char* to_string(CmpOp op);

struct Atom {
    std::string relation;
    std::vector<Term> args;
    friend bool operator==(const Atom&, const Atom&) = default;
};

struct PositiveLiteral {
    Atom atom;
    friend bool operator==(const PositiveLiteral&, const PositiveLiteral&) = default;
};
struct NegatedLiteral {
    Atom atom;
    friend bool operator==(const NegatedLiteral&, const NegatedLiteral&) = default;
};
struct Comparison {
    CmpOp op;
    Term lhs;
    Term rhs;
    friend bool operator==(const Comparison&, const Comparison&) = default;
};

using Literal = std::variant<PositiveLiteral, NegatedLiteral, Comparison>;

struct Rule {
    Atom head;
    std::vector<Literal> body;
    friend bool operator==(const Rule&, const Rule&) = default;
};

// ---------------------------------------------------------------------------
// Declarations and programs

enum class ColumnType { Symbol, Number };

const char* to_string(ColumnType type);

struct Column {
    std::string name;
    ColumnType type;
    friend bool operator==(const Column&, const Column&) = default;
};

struct RelationDecl {
    std::string name;
    std::vector<Column> columns;
    std::vector<std::string> choice_domain; // empty = unconstrained
    bool is_input = false;
    bool is_output = false;

    std::size_t arity() const { return columns.size(); }
    std::optional<std::size_t> column_index(std::string_view column) const;
    bool has_choice_domain() const { return !choice_domain.empty(); }

    friend bool operator==(const RelationDecl&, const RelationDecl&) = default;
};

struct Fact {
    std::string relation;
    std::vector<Value> values;
    friend bool operator==(const Fact&, const Fact&) = default;
};

struct Program {
    std::vector<RelationDecl> decls;
    std::vector<Rule> rules;
    std::vector<Fact> facts;
    SymbolTable symbols;

    const RelationDecl* find_decl(std::string_view relation) const;
    RelationDecl* find_decl(std::string_view relation);
};

/// Structural program equality. Symbol constants are compared by their
/// text (through each program's own table), so two programs parsed from
/// different item orders still compare equal when they mean the same
/// thing.
bool structurally_equal(const Program& a, const Program& b);

// ---------------------------------------------------------------------------
// Bound specifications

enum class HasherKind {
    OrdProd, // product of ordinals/values mod limit (paper-faithful)
    Mix, // seeded avalanche mix mod limit (default)
    PerfectEnum, // injective-per-key enumeration; test hook, not parseable
};

const char* to_string(HasherKind kind);

struct Hasher {
    HasherKind kind = HasherKind::Mix;
    std::uint64_t seed = 0;
    friend bool operator==(const Hasher&, const Hasher&) = default;
};

enum class BoundSpecFault {
    EmptyBoundVars,
    EmptyCountingVars,
    Overlap,
    LimitTooSmall,
    DuplicateColumn,
};

const char* to_string(BoundSpecFault fault);

/// One <relation | bound vars | limit | counting vars> record: the
/// combinations of bound_vars may occur at most `limit` times, where
/// occurrences are told apart by hashing the counting_vars.
struct BoundSpec {
    std::string relation;
    std::vector<std::string> bound_vars;
    std::int64_t limit = 1;
    std::vector<std::string> counting_vars;
    bool feedback = false;
    Hasher hasher{};
    std::set<std::size_t> excluded_rules; // global 0-based rule indices

    /// Program-independent invariant checks, one fault per violated clause.
    std::vector<BoundSpecFault> faults() const;

    friend bool operator==(const BoundSpec&, const BoundSpec&) = default;
};

} // namespace cbdl
