#include "ozcheck/semantics.hpp"

#include <algorithm>

namespace ozcheck {

namespace {

void named_leaves(const TypeExpr& t, std::vector<const Name*>& out)
{
    if (t.kind == TypeExpr::Kind::Named)
        out.push_back(&t.name);
    for (const TypeExpr& a : t.args)
        named_leaves(a, out);
}

void add_declarations(const std::vector<Declaration>& decls, Origin origin,
                      std::vector<ScopeEntry>& out)
{
    for (const Declaration& d : decls)
        for (const Name& n : d.names)
            out.push_back(ScopeEntry{n, d.type, origin});
}

bool has_name(const std::vector<ScopeEntry>& entries, const std::string& name)
{
    return std::any_of(entries.begin(), entries.end(),
                       [&](const ScopeEntry& e) { return e.name.text == name; });
}

// Inherited entries are appended unless the name is already there.
void inherit_entries(const std::vector<ScopeEntry>& from, std::vector<ScopeEntry>& into)
{
    for (ScopeEntry e : from) {
        if (has_name(into, e.name.text))
            continue;
        e.origin = Origin::Inherited;
        into.push_back(std::move(e));
    }
}

// Local declarations replace inherited entries of the same name.
void override_entries(const std::vector<Declaration>& decls, std::vector<ScopeEntry>& into)
{
    std::vector<ScopeEntry> local;
    add_declarations(decls, Origin::Local, local);
    std::erase_if(into, [&](const ScopeEntry& e) {
        return e.origin == Origin::Inherited && has_name(local, e.name.text);
    });
    for (ScopeEntry& e : local)
        into.push_back(std::move(e));
}

void add_operation(const OperationSchema& op, std::vector<OperationSchema>& ops, bool replace)
{
    auto it = std::find_if(ops.begin(), ops.end(),
                           [&](const OperationSchema& o) { return o.name.text == op.name.text; });
    if (it == ops.end())
        ops.push_back(op);
    else if (replace)
        *it = op;
}

void merge_parent(const ResolvedClass& parent, ResolvedClass& into)
{
    inherit_entries(parent.constants, into.constants);
    inherit_entries(parent.state_variables, into.state_variables);
    if (!into.init && parent.init)
        into.init = parent.init;
    for (const OperationSchema& op : parent.operations)
        add_operation(op, into.operations, false);
}

void merge_local(const ClassDef& c, ResolvedClass& into)
{
    override_entries(c.local_defs, into.constants);
    if (c.state)
        override_entries(c.state->declarations, into.state_variables);
    if (c.init)
        into.init = c.init;
    for (const OperationSchema& op : c.operations)
        add_operation(op, into.operations, true);
    into.visibility = c.visibility;
}

class Resolver {
public:
    explicit Resolver(const ClassTable& env) : env_(env) {}

    std::variant<ResolvedClass, InheritanceError> run(const ClassDef& c)
    {
        stack_.push_back(c.name.text);
        ResolvedClass rc;
        rc.def = c;
        for (const ClassRef& ref : c.inherits) {
            chain_.push_back(ref.name);
            auto it = env_.find(ref.name.text);
            if (it == env_.end())
                return InheritanceError{InheritanceError::Kind::UnknownParent, c.name.text, ref.name, chain_};
            if (std::find(stack_.begin(), stack_.end(), ref.name.text) != stack_.end())
                return InheritanceError{InheritanceError::Kind::Cycle, c.name.text, ref.name, chain_};
            auto parent = run(*it->second);
            if (std::holds_alternative<InheritanceError>(parent))
                return parent;
            merge_parent(std::get<ResolvedClass>(parent), rc);
            chain_.pop_back();
        }
        merge_local(c, rc);
        stack_.pop_back();
        return rc;
    }

private:
    const ClassTable& env_;
    std::vector<std::string> stack_;
    std::vector<Name> chain_;
};

Diagnostic make(Code code, const SchemaScope& scope, const Name& at, std::string message)
{
    return Diagnostic{code, scope.owner_class, scope.block, at.text, at.pos, std::move(message)};
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

} // namespace

const std::set<std::string>& TypeEnv::builtins()
{
    static const std::set<std::string> names{"ℕ", "ℤ", "𝔽", "ℙ", "seq"};
    return names;
}

bool TypeEnv::is_type(const std::string& name, const std::string& owner) const
{
    if (given_types.count(name) || class_names.count(name) || builtins().count(name))
        return true;
    auto it = generics.find(owner);
    return it != generics.end() && it->second.count(name);
}

TypeEnv build_type_env(const Specification& spec)
{
    TypeEnv env;
    for (const Paragraph& p : spec.paragraphs) {
        if (const auto* given = std::get_if<GivenTypeDecl>(&p)) {
            for (const Name& n : given->names)
                env.given_types.insert(n.text);
        } else {
            const ClassDef& c = std::get<ClassDef>(p);
            env.class_names.insert(c.name.text);
            auto& params = env.generics[c.name.text];
            for (const Name& n : c.generic_params)
                params.insert(n.text);
        }
    }
    return env;
}

bool ResolvedClass::is_state_variable(const std::string& name) const
{
    return has_name(state_variables, name);
}

ClassTable class_table(const Specification& spec)
{
    ClassTable table;
    for (const Paragraph& p : spec.paragraphs)
        if (const auto* c = std::get_if<ClassDef>(&p))
            table.emplace(c->name.text, c);
    return table;
}

std::variant<ResolvedClass, InheritanceError> resolve_inheritance(const ClassDef& c,
                                                                  const ClassTable& env)
{
    return Resolver(env).run(c);
}

ResolvedClass resolve_locally(const ClassDef& c)
{
    ResolvedClass rc;
    rc.def = c;
    merge_local(c, rc);
    return rc;
}

std::vector<SchemaScope> schema_scopes(const ResolvedClass& rc)
{
    const ClassDef& c = rc.def;
    std::set<std::string> constants;
    for (const ScopeEntry& e : rc.constants)
        constants.insert(e.name.text);

    std::vector<SchemaScope> scopes;
    auto scope = [&](BlockLabel block) {
        return SchemaScope{c.name.text, std::move(block), {}, constants};
    };
    if (!c.local_defs.empty()) {
        SchemaScope s = scope({BlockLabel::Kind::LocalDefinitions, {}});
        add_declarations(c.local_defs, Origin::Local, s.variables);
        scopes.push_back(std::move(s));
    }
    bool inherited_state = std::any_of(rc.state_variables.begin(), rc.state_variables.end(),
                                       [](const ScopeEntry& e) { return e.origin == Origin::Inherited; });
    if (c.state || inherited_state) {
        SchemaScope s = scope({BlockLabel::Kind::State, {}});
        for (const ScopeEntry& e : rc.state_variables)
            if (e.origin == Origin::Inherited)
                s.variables.push_back(e);
        if (c.state)
            add_declarations(c.state->declarations, Origin::Local, s.variables);
        scopes.push_back(std::move(s));
    }
    if (c.init) {
        SchemaScope s = scope({BlockLabel::Kind::Init, {}});
        add_declarations(c.init->declarations, Origin::Local, s.variables);
        scopes.push_back(std::move(s));
    }
    for (const OperationSchema& op : c.operations) {
        SchemaScope s = scope(BlockLabel::op(op.name.text));
        add_declarations(op.declarations, Origin::Local, s.variables);
        scopes.push_back(std::move(s));
    }
    return scopes;
}

std::vector<Diagnostic> check_circular(const SchemaScope& scope)
{
    std::set<std::string> declared;
    for (const ScopeEntry& e : scope.variables)
        if (e.origin == Origin::Local)
            declared.insert(e.name.text);

    std::vector<Diagnostic> out;
    for (const ScopeEntry& e : scope.variables) {
        if (e.origin != Origin::Local)
            continue;
        std::vector<const Name*> leaves;
        named_leaves(e.type, leaves);
        for (const Name* leaf : leaves)
            if (declared.count(leaf->text))
                out.push_back(make(Code::Sem101, scope, *leaf,
                                   "circular declaration: variable " + quoted(e.name.text) +
                                       " is declared from variable " + quoted(leaf->text) +
                                       " of the same schema"));
    }
    return out;
}

std::vector<Diagnostic> check_undefined_types(const SchemaScope& scope, const TypeEnv& env)
{
    std::vector<Diagnostic> out;
    std::set<std::pair<int, int>> seen; // names of one declaration share a type
    for (const ScopeEntry& e : scope.variables) {
        if (e.origin != Origin::Local)
            continue;
        std::vector<const Name*> leaves;
        named_leaves(e.type, leaves);
        for (const Name* leaf : leaves) {
            if (env.is_type(leaf->text, scope.owner_class))
                continue;
            if (!seen.insert({leaf->pos.line, leaf->pos.column}).second)
                continue;
            out.push_back(make(Code::Sem102, scope, *leaf,
                               "type " + quoted(leaf->text) + " is not defined"));
        }
    }
    return out;
}

std::vector<Diagnostic> check_duplicates(const SchemaScope& scope)
{
    std::vector<Diagnostic> out;
    std::set<std::string> seen;
    for (const ScopeEntry& e : scope.variables) {
        if (e.origin != Origin::Local)
            continue;
        if (!seen.insert(e.name.text).second)
            out.push_back(make(Code::Sem103, scope, e.name,
                               "variable " + quoted(e.name.text) + " is declared more than once in this schema"));
    }
    return out;
}

std::vector<Diagnostic> check_type_name_clash(const SchemaScope& scope, const TypeEnv& env)
{
    std::vector<Diagnostic> out;
    for (const ScopeEntry& e : scope.variables)
        if (e.origin == Origin::Local && env.is_type(e.name.text, scope.owner_class))
            out.push_back(make(Code::Sem104, scope, e.name,
                               "variable " + quoted(e.name.text) + " has the name of a type"));
    return out;
}

std::vector<Diagnostic> check_delta_list(const OperationSchema& op, const ResolvedClass& rc)
{
    SchemaScope scope{rc.def.name.text, BlockLabel::op(op.name.text), {}, {}};
    std::vector<Diagnostic> out;
    auto check = [&](const std::optional<std::vector<Name>>& list, const char* kind) {
        if (!list)
            return;
        for (const Name& n : *list) {
            if (rc.is_state_variable(n.text))
                continue;
            bool constant = has_name(rc.constants, n.text);
            out.push_back(make(Code::Sem105, scope, n,
                               quoted(n.text) + " in the " + kind + " list is " +
                                   (constant ? "a constant, not a state variable" : "not a state variable")));
        }
    };
    check(op.delta_list, "Delta");
    check(op.xi_list, "Xi");
    return out;
}

std::vector<Diagnostic> analyze(const Specification& spec)
{
    const TypeEnv env = build_type_env(spec);
    const ClassTable table = class_table(spec);
    std::vector<Diagnostic> out;
    auto append = [&](std::vector<Diagnostic> ds) {
        out.insert(out.end(), std::make_move_iterator(ds.begin()), std::make_move_iterator(ds.end()));
    };

    for (const Paragraph& p : spec.paragraphs) {
        const auto* c = std::get_if<ClassDef>(&p);
        if (!c)
            continue;
        SchemaScope inherit_scope{c->name.text, {BlockLabel::Kind::Inheritance, {}}, {}, {}};

        auto resolved = resolve_inheritance(*c, table);
        ResolvedClass rc;
        if (auto* err = std::get_if<InheritanceError>(&resolved)) {
            // Faults further up the hierarchy are reported by the class that holds them.
            if (err->kind == InheritanceError::Kind::UnknownParent && err->owner == c->name.text) {
                out.push_back(make(Code::Inh201, inherit_scope, err->ref,
                                   "inherited class " + quoted(err->ref.text) + " is not defined"));
            } else if (err->kind == InheritanceError::Kind::Cycle && err->ref.text == c->name.text) {
                std::string path = c->name.text;
                for (const Name& n : err->chain)
                    path += " -> " + n.text;
                out.push_back(make(Code::Inh202, inherit_scope, err->chain.front(),
                                   "inheritance cycle " + path));
            }
            rc = resolve_locally(*c);
        } else {
            rc = std::get<ResolvedClass>(std::move(resolved));
        }

        for (const ClassRef& ref : c->inherits)
            for (const TypeExpr& actual : ref.actuals) {
                std::vector<const Name*> leaves;
                named_leaves(actual, leaves);
                for (const Name* leaf : leaves)
                    if (!env.is_type(leaf->text, c->name.text))
                        out.push_back(make(Code::Sem102, inherit_scope, *leaf,
                                           "type " + quoted(leaf->text) + " is not defined"));
            }

        for (const SchemaScope& scope : schema_scopes(rc)) {
            append(check_circular(scope));
            append(check_undefined_types(scope, env));
            append(check_duplicates(scope));
            append(check_type_name_clash(scope, env));
        }
        for (const OperationSchema& op : c->operations)
            append(check_delta_list(op, rc));
    }
    sort_diagnostics(out);
    return out;
}

} // namespace ozcheck
