#pragma once

// Symbol environments, inheritance resolution, and the semantic checks.

#include "ozcheck/ast.hpp"
#include "ozcheck/diagnostics.hpp"

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace ozcheck {

struct TypeEnv {
    std::set<std::string> given_types;
    std::set<std::string> class_names;
    std::map<std::string, std::set<std::string>> generics; // class -> parameters

    /// Display names of the builtin types.
    static const std::set<std::string>& builtins();

    /// Whether `name` denotes a type inside class `owner` (empty: outside any class).
    bool is_type(const std::string& name, const std::string& owner) const;
};

TypeEnv build_type_env(const Specification& spec);

enum class Origin { Local, Inherited };

struct ScopeEntry {
    Name name;
    TypeExpr type;
    Origin origin = Origin::Local;
};

/// Variables of one schema block, in declaration order, duplicates kept.
struct SchemaScope {
    std::string owner_class;
    BlockLabel block;
    std::vector<ScopeEntry> variables;
    std::set<std::string> constants;
};

struct ResolvedClass {
    ClassDef def;
    std::vector<ScopeEntry> constants;
    std::vector<ScopeEntry> state_variables; // inherited first, then local
    std::optional<SchemaBlock> init;
    std::vector<OperationSchema> operations;
    std::optional<std::vector<Name>> visibility; // always the class's own list

    bool is_state_variable(const std::string& name) const;
};

struct InheritanceError {
    enum class Kind { UnknownParent, Cycle };
    Kind kind = Kind::UnknownParent;
    std::string owner; // class whose inherit list holds the faulty reference
    Name ref;          // that reference
    std::vector<Name> chain; // references followed from the resolved class, ending with `ref`
};

using ClassTable = std::map<std::string, const ClassDef*>;
ClassTable class_table(const Specification& spec);

/// Members of ancestors are merged first; a member redefined by the class
/// replaces the inherited one.
std::variant<ResolvedClass, InheritanceError> resolve_inheritance(const ClassDef& c,
                                                                  const ClassTable& env);

/// A class resolved without looking at its inherit list.
ResolvedClass resolve_locally(const ClassDef& c);

/// Local definitions, state, init, and each operation with declarations.
std::vector<SchemaScope> schema_scopes(const ResolvedClass& rc);

std::vector<Diagnostic> check_circular(const SchemaScope& scope);
std::vector<Diagnostic> check_undefined_types(const SchemaScope& scope, const TypeEnv& env);
std::vector<Diagnostic> check_duplicates(const SchemaScope& scope);
std::vector<Diagnostic> check_type_name_clash(const SchemaScope& scope, const TypeEnv& env);
std::vector<Diagnostic> check_delta_list(const OperationSchema& op, const ResolvedClass& rc);

/// All checks over every class, sorted with sort_diagnostics().
std::vector<Diagnostic> analyze(const Specification& spec);

} // namespace ozcheck
