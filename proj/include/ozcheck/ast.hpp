#pragma once

// Typed AST of an Object Z specification, lowered from a parse tree of the
// shipped grammar.

#include "ozcheck/grammar.hpp"
#include "ozcheck/location.hpp"
#include "ozcheck/parser.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ozcheck {

/// An identifier occurrence. Positions are not part of identity.
struct Name {
    std::string text;
    SourcePos pos;

    friend bool operator==(const Name& a, const Name& b) { return a.text == b.text; }
};

enum class BuiltinKind { Naturals, Integers, FiniteSets, PowerSet, Sequence };

struct TypeExpr {
    enum class Kind { Builtin, Named, Product };

    Kind kind = Kind::Named;
    BuiltinKind builtin = BuiltinKind::Naturals; // Kind::Builtin
    Name name;                                   // Named: the identifier; Builtin: the command
    std::vector<TypeExpr> args;                  // builtin argument, generic actuals, or product factors

    friend bool operator==(const TypeExpr&, const TypeExpr&) = default;
};

struct Declaration {
    std::vector<Name> names;
    TypeExpr type;

    const SourcePos& position() const { return names.front().pos; }
    friend bool operator==(const Declaration&, const Declaration&) = default;
};

/// A predicate line, kept as its token lexemes.
struct PredicateLine {
    std::vector<std::string> tokens;
    SourcePos pos;

    friend bool operator==(const PredicateLine& a, const PredicateLine& b) { return a.tokens == b.tokens; }
};

enum class SchemaKind { State, Init };

struct SchemaBlock {
    SchemaKind label = SchemaKind::State;
    std::vector<Declaration> declarations;
    std::vector<PredicateLine> predicates;
    friend bool operator==(const SchemaBlock&, const SchemaBlock&) = default;
};

struct OperationSchema {
    Name name;
    std::optional<std::vector<Name>> delta_list;
    std::optional<std::vector<Name>> xi_list;
    std::vector<Declaration> declarations; // includes decorated inputs and outputs
    std::vector<PredicateLine> predicates;
    friend bool operator==(const OperationSchema&, const OperationSchema&) = default;
};

struct ClassRef {
    Name name;
    std::vector<TypeExpr> actuals;
    friend bool operator==(const ClassRef&, const ClassRef&) = default;
};

struct ClassDef {
    Name name;
    std::vector<Name> generic_params;
    std::optional<std::vector<Name>> visibility;
    std::vector<ClassRef> inherits;
    std::vector<Declaration> local_defs;
    std::vector<PredicateLine> local_predicates;
    std::optional<SchemaBlock> state;
    std::optional<SchemaBlock> init;
    std::vector<OperationSchema> operations;
    friend bool operator==(const ClassDef&, const ClassDef&) = default;
};

struct GivenTypeDecl {
    std::vector<Name> names;
    friend bool operator==(const GivenTypeDecl&, const GivenTypeDecl&) = default;
};

using Paragraph = std::variant<GivenTypeDecl, ClassDef>;

struct Specification {
    std::vector<Paragraph> paragraphs;
    friend bool operator==(const Specification&, const Specification&) = default;
};

/// Lowers a tree produced by parsing with object_z_grammar().
Specification build_ast(const ParseTree& tree, const Grammar& g);

/// Space-separated LaTeX that parses back to an equal specification.
std::string render_specification(const Specification& spec);
std::string render_type(const TypeExpr& t);

} // namespace ozcheck
