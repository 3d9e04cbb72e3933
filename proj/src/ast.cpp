#include "cbdl/ast.hpp"

#include <algorithm>
#include <unordered_set>

namespace cbdl {

bool is_wildcard_name(std::string_view name) {
    if (name.size() < 2 || name[0] != '_') {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; });
}

const char* to_string(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

const char* to_string(ColumnType type) {
    return type == ColumnType::Symbol ? "symbol" : "number";
}

const char* to_string(HasherKind kind) {
    switch (kind) {
        case HasherKind::OrdProd: return "ordprod";
        case HasherKind::Mix: return "mix";
        case HasherKind::PerfectEnum: return "perfect";
    }
    return "?";
}

const char* to_string(BoundSpecFault fault) {
    switch (fault) {
        case BoundSpecFault::EmptyBoundVars: return "bound variable list is empty";
        case BoundSpecFault::EmptyCountingVars: return "counting variable list is empty";
        case BoundSpecFault::Overlap: return "bound and counting variables overlap";
        case BoundSpecFault::LimitTooSmall: return "limit must be at least 1";
        case BoundSpecFault::DuplicateColumn: return "duplicate column in variable list";
    }
    return "?";
}

std::optional<std::size_t> RelationDecl::column_index(std::string_view column) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i].name == column) {
            return i;
        }
    }
    return std::nullopt;
}

const RelationDecl* Program::find_decl(std::string_view relation) const {
    for (const RelationDecl& d : decls) {
        if (d.name == relation) {
            return &d;
        }
    }
    return nullptr;
}

RelationDecl* Program::find_decl(std::string_view relation) {
    for (RelationDecl& d : decls) {
        if (d.name == relation) {
            return &d;
        }
    }
    return nullptr;
}

std::vector<BoundSpecFault> BoundSpec::faults() const {
    std::vector<BoundSpecFault> out;
    if (bound_vars.empty()) {
        out.push_back(BoundSpecFault::EmptyBoundVars);
    }
    if (counting_vars.empty()) {
        out.push_back(BoundSpecFault::EmptyCountingVars);
    }
    std::unordered_set<std::string> bound(bound_vars.begin(), bound_vars.end());
    std::unordered_set<std::string> counting(counting_vars.begin(), counting_vars.end());
    if (bound.size() != bound_vars.size() || counting.size() != counting_vars.size()) {
        out.push_back(BoundSpecFault::DuplicateColumn);
    }
    bool overlap = std::any_of(counting_vars.begin(), counting_vars.end(),
                               [&](const std::string& c) { return bound.count(c) != 0; });
    if (overlap) {
        out.push_back(BoundSpecFault::Overlap);
    }
    if (limit < 1) {
        out.push_back(BoundSpecFault::LimitTooSmall);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural equality across symbol tables

namespace {

bool values_equal(const Value& a, const SymbolTable& sa, const Value& b, const SymbolTable& sb) {
    if (a.kind != b.kind) {
        return false;
    }
    if (a.is_number()) {
        return a.raw == b.raw;
    }
    return sa.resolve(a.raw) == sb.resolve(b.raw);
}

bool terms_equal(const Term& a, const SymbolTable& sa, const Term& b, const SymbolTable& sb) {
    if (a.node.index() != b.node.index()) {
        return false;
    }
    if (a.is_variable()) {
        return a.as_variable().name == b.as_variable().name;
    }
    if (a.is_constant()) {
        return values_equal(a.as_constant().value, sa, b.as_constant().value, sb);
    }
    const Term::Arith& aa = a.as_arith();
    const Term::Arith& ba = b.as_arith();
    if (aa.op != ba.op || aa.args.size() != ba.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < aa.args.size(); ++i) {
        if (!terms_equal(aa.args[i], sa, ba.args[i], sb)) {
            return false;
        }
    }
    return true;
}

bool atoms_equal(const Atom& a, const SymbolTable& sa, const Atom& b, const SymbolTable& sb) {
    if (a.relation != b.relation || a.args.size() != b.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!terms_equal(a.args[i], sa, b.args[i], sb)) {
            return false;
        }
    }
    return true;
}

bool literals_equal(const Literal& a, const SymbolTable& sa, const Literal& b, const SymbolTable& sb) {
    if (a.index() != b.index()) {
        return false;
    }
    if (const auto* pa = std::get_if<PositiveLiteral>(&a)) {
        return atoms_equal(pa->atom, sa, std::get<PositiveLiteral>(b).atom, sb);
    }
    if (const auto* na = std::get_if<NegatedLiteral>(&a)) {
        return atoms_equal(na->atom, sa, std::get<NegatedLiteral>(b).atom, sb);
    }
    const Comparison& ca = std::get<Comparison>(a);
    const Comparison& cb = std::get<Comparison>(b);
    return ca.op == cb.op && terms_equal(ca.lhs, sa, cb.lhs, sb) && terms_equal(ca.rhs, sa, cb.rhs, sb);
}

} // namespace

bool structurally_equal(const Program& a, const Program& b) {
    if (a.decls != b.decls) {
        return false;
    }
    if (a.rules.size() != b.rules.size() || a.facts.size() != b.facts.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rules.size(); ++i) {
        const Rule& ra = a.rules[i];
        const Rule& rb = b.rules[i];
        if (!atoms_equal(ra.head, a.symbols, rb.head, b.symbols) || ra.body.size() != rb.body.size()) {
            return false;
        }
        for (std::size_t j = 0; j < ra.body.size(); ++j) {
            if (!literals_equal(ra.body[j], a.symbols, rb.body[j], b.symbols)) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < a.facts.size(); ++i) {
        const Fact& fa = a.facts[i];
        const Fact& fb = b.facts[i];
        if (fa.relation != fb.relation || fa.values.size() != fb.values.size()) {
            return false;
        }
        for (std::size_t j = 0; j < fa.values.size(); ++j) {
            if (!values_equal(fa.values[j], a.symbols, fb.values[j], b.symbols)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace cbdl
