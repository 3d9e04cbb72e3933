#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cbdl/ast.hpp"

namespace cbdl {

/// Parses a program in the engine's dialect:
///   .decl Name(col: type, ...) [choice-domain (cols)]
///   .input Name / .output Name
///   Name(c1, c2).                       inline facts
///   Head :- Lit, ..., Lit.              rules
/// Literals are atoms, !Atom, or comparisons; terms allow ord(v),
/// __mix(...), __enum(...), + - * %, integer and quoted-string constants.
/// Comments run from // to end of line. Throws ParseError on the first
/// problem (validation included: arity, types, range restriction,
/// choice-domain shape).
Program parse_program(std::string_view text, std::string file = "<input>");

/// Parses a bounds file: one spec per non-comment line,
///   Relation bound=(cols) limit=N count=(cols)
///            [feedback=true|false] [hasher=ordprod|mix] [exclude=(i,j)]
/// '#' starts a comment. Relation/column names are validated later
/// against a Program (by the transform).
std::vector<BoundSpec> parse_bounds(std::string_view text, std::string file = "<bounds>");

/// Pretty-prints a program such that parse_program(format_program(p))
/// is structurally equal to p.
std::string format_program(const Program& program);

std::string format_rule(const Rule& rule, const SymbolTable& symbols);

} // namespace cbdl
