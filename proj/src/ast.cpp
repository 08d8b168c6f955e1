#include "ozcheck/ast.hpp"

#include <sstream>
#include <stdexcept>

namespace ozcheck {

namespace {

class Lowering {
public:
    explicit Lowering(const Grammar& g) : g_(g) {}

    Specification specification(const ParseNode& root) const
    {
        Specification spec;
        const ParseNode* list = &root;
        for (;;) {
            expect(*list, "ParagraphList");
            spec.paragraphs.push_back(paragraph(list->children.at(0)));
            if (list->children.size() < 2)
                break;
            list = &list->children[1];
        }
        return spec;
    }

private:
    const std::string& sym(const ParseNode& n) const { return g_.name(n.symbol); }

    void expect(const ParseNode& n, std::string_view what) const
    {
        if (sym(n) != what)
            throw std::logic_error("AST lowering expected " + std::string(what) + ", found " + sym(n));
    }

    static Name name_of(const ParseNode& leaf)
    {
        return Name{leaf.token->lexeme, leaf.token->pos};
    }

    // Word leaves of a comma-separated list, in order.
    static void words(const ParseNode& n, std::vector<Name>& out)
    {
        if (n.token) {
            if (n.token->kind == TokenKind::Word)
                out.push_back(name_of(n));
            return;
        }
        for (const auto& c : n.children)
            words(c, out);
    }

    static std::vector<Name> words(const ParseNode& n)
    {
        std::vector<Name> out;
        words(n, out);
        return out;
    }

    static void leaves(const ParseNode& n, std::vector<const Token*>& out)
    {
        if (n.token) {
            out.push_back(&*n.token);
            return;
        }
        for (const auto& c : n.children)
            leaves(c, out);
    }

    Paragraph paragraph(const ParseNode& n) const
    {
        expect(n, "Paragraph");
        if (sym(n.children.front()) == "[")
            return GivenTypeDecl{words(n.children.at(1))};

        ClassDef c;
        const ParseNode& heading = n.children.at(2);
        c.name = name_of(heading.children.at(0));
        if (heading.children.size() > 1)
            c.generic_params = words(heading.children.at(2));
        for (std::size_t i = 4; i + 1 < n.children.size(); ++i)
            class_part(n.children[i], c);
        return c;
    }

    void class_part(const ParseNode& n, ClassDef& c) const
    {
        if (n.token)
            return;
        const std::string& s = sym(n);
        if (s == "VisibilityList") {
            c.visibility = words(n.children.at(2));
        } else if (s == "ClassRef") {
            ClassRef ref{name_of(n.children.at(0)), {}};
            if (n.children.size() > 1)
                ref.actuals = type_list(n.children.at(2));
            c.inherits.push_back(std::move(ref));
        } else if (s == "AxDef") {
            decl_part(n.children.at(1), c.local_defs);
            if (n.children.size() > 3)
                pred_part(n.children.at(3), c.local_predicates);
        } else if (s == "StateBox") {
            SchemaBlock b{SchemaKind::State, {}, {}};
            decl_part(n.children.at(1), b.declarations);
            if (n.children.size() > 3)
                pred_part(n.children.at(3), b.predicates);
            c.state = std::move(b);
        } else if (s == "InitBox") {
            SchemaBlock b{SchemaKind::Init, {}, {}};
            if (n.children.size() == 3) {
                pred_part(n.children.at(1), b.predicates);
            } else {
                decl_part(n.children.at(1), b.declarations);
                pred_part(n.children.at(3), b.predicates);
            }
            c.init = std::move(b);
        } else if (s == "Operation") {
            c.operations.push_back(operation(n));
        } else {
            for (const auto& child : n.children)
                class_part(child, c);
        }
    }

    OperationSchema operation(const ParseNode& n) const
    {
        // \begin{op} { Word } ChangeLists OpDecls OpPredicates \end{op}
        OperationSchema op;
        op.name = name_of(n.children.at(2));
        change_lists(n.children.at(4), op);
        const ParseNode& decls = n.children.at(5);
        if (!decls.children.empty())
            decl_part(decls.children.front(), op.declarations);
        const ParseNode& preds = n.children.at(6);
        if (!preds.children.empty())
            pred_part(preds.children.at(1), op.predicates);
        return op;
    }

    void change_lists(const ParseNode& n, OperationSchema& op) const
    {
        if (n.children.empty())
            return;
        change_lists(n.children.at(0), op);
        const ParseNode& list = n.children.at(1);
        auto& target = sym(list.children.front()) == "\\Delta" ? op.delta_list : op.xi_list;
        if (!target)
            target.emplace();
        for (Name& w : words(list.children.at(2)))
            target->push_back(std::move(w));
    }

    void decl_part(const ParseNode& n, std::vector<Declaration>& out) const
    {
        expect(n, "DeclPart");
        if (n.children.size() == 3)
            decl_part(n.children[0], out);
        const ParseNode& d = n.children.back();
        out.push_back(Declaration{words(d.children.at(0)), type_expr(d.children.at(2))});
    }

    void pred_part(const ParseNode& n, std::vector<PredicateLine>& out) const
    {
        expect(n, "PredPart");
        if (n.children.size() == 3)
            pred_part(n.children[0], out);
        std::vector<const Token*> toks;
        leaves(n.children.back(), toks);
        PredicateLine line;
        line.pos = toks.front()->pos;
        for (const Token* t : toks)
            line.tokens.push_back(t->lexeme);
        out.push_back(std::move(line));
    }

    std::vector<TypeExpr> type_list(const ParseNode& n) const
    {
        std::vector<TypeExpr> out;
        const ParseNode* cur = &n;
        std::vector<const ParseNode*> rev;
        while (cur->children.size() == 3) {
            rev.push_back(&cur->children[2]);
            cur = &cur->children[0];
        }
        rev.push_back(&cur->children[0]);
        for (auto it = rev.rbegin(); it != rev.rend(); ++it)
            out.push_back(type_expr(**it));
        return out;
    }

    TypeExpr type_expr(const ParseNode& n) const
    {
        expect(n, "TypeExpr");
        if (n.children.size() == 1)
            return type_term(n.children[0]);
        std::vector<const ParseNode*> rev;
        const ParseNode* cur = &n;
        while (cur->children.size() == 3) {
            rev.push_back(&cur->children[2]);
            cur = &cur->children[0];
        }
        rev.push_back(&cur->children[0]);
        TypeExpr product;
        product.kind = TypeExpr::Kind::Product;
        for (auto it = rev.rbegin(); it != rev.rend(); ++it)
            product.args.push_back(type_term(**it));
        product.name = product.args.front().name;
        return product;
    }

    TypeExpr type_term(const ParseNode& n) const
    {
        expect(n, "TypeTerm");
        const ParseNode& first = n.children.front();
        const std::string& head = sym(first);
        if (head == "(")
            return type_expr(n.children.at(1));

        TypeExpr t;
        t.name = name_of(first);
        if (head == "Word") {
            t.kind = TypeExpr::Kind::Named;
            if (n.children.size() > 1)
                t.args = type_list(n.children.at(2));
            return t;
        }
        t.kind = TypeExpr::Kind::Builtin;
        if (head == "\\nat")
            t.builtin = BuiltinKind::Naturals;
        else if (head == "\\num")
            t.builtin = BuiltinKind::Integers;
        else if (head == "\\seq")
            t.builtin = BuiltinKind::Sequence;
        else if (head == "\\pset")
            t.builtin = BuiltinKind::PowerSet;
        else if (head == "\\fset")
            t.builtin = BuiltinKind::FiniteSets;
        else
            throw std::logic_error("unknown type constructor " + head);
        t.name.text = head;
        if (n.children.size() > 1)
            t.args.push_back(type_term(n.children[1]));
        return t;
    }

    const Grammar& g_;
};

std::string join(const std::vector<Name>& names)
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            out += " , ";
        out += names[i].text;
    }
    return out;
}

std::string builtin_command(BuiltinKind k)
{
    switch (k) {
    case BuiltinKind::Naturals: return "\\nat";
    case BuiltinKind::Integers: return "\\num";
    case BuiltinKind::FiniteSets: return "\\fset";
    case BuiltinKind::PowerSet: return "\\pset";
    case BuiltinKind::Sequence: return "\\seq";
    }
    return "\\nat";
}

// A type in a position that binds tighter than \cross.
std::string render_factor(const TypeExpr& t)
{
    if (t.kind == TypeExpr::Kind::Product)
        return "( " + render_type(t) + " )";
    return render_type(t);
}

void render_decls(std::ostream& os, const std::vector<Declaration>& decls)
{
    for (std::size_t i = 0; i < decls.size(); ++i) {
        if (i)
            os << " \\\\\n";
        os << join(decls[i].names) << " : " << render_type(decls[i].type);
    }
    os << '\n';
}

void render_preds(std::ostream& os, const std::vector<PredicateLine>& preds)
{
    for (std::size_t i = 0; i < preds.size(); ++i) {
        if (i)
            os << " \\\\\n";
        for (std::size_t j = 0; j < preds[i].tokens.size(); ++j)
            os << (j ? " " : "") << preds[i].tokens[j];
    }
    os << '\n';
}

void render_class(std::ostream& os, const ClassDef& c)
{
    os << "\\begin{class} { " << c.name.text;
    if (!c.generic_params.empty())
        os << " [ " << join(c.generic_params) << " ]";
    os << " }\n";
    if (c.visibility)
        os << "\\visibility ( " << join(*c.visibility) << " )\n";
    if (!c.inherits.empty()) {
        os << "\\inherit ";
        for (std::size_t i = 0; i < c.inherits.size(); ++i) {
            if (i)
                os << " \\\\ ";
            os << c.inherits[i].name.text;
            if (!c.inherits[i].actuals.empty()) {
                os << " [ ";
                for (std::size_t j = 0; j < c.inherits[i].actuals.size(); ++j)
                    os << (j ? " , " : "") << render_type(c.inherits[i].actuals[j]);
                os << " ]";
            }
        }
        os << " \\endinherit\n";
    }
    if (!c.local_defs.empty()) {
        os << "\\begin{axdef}\n";
        render_decls(os, c.local_defs);
        if (!c.local_predicates.empty()) {
            os << "\\ST\n";
            render_preds(os, c.local_predicates);
        }
        os << "\\end{axdef}\n";
    }
    if (c.state) {
        os << "\\begin{state}\n";
        render_decls(os, c.state->declarations);
        if (!c.state->predicates.empty()) {
            os << "\\ST\n";
            render_preds(os, c.state->predicates);
        }
        os << "\\end{state}\n";
    }
    if (c.init) {
        os << "\\begin{init}\n";
        if (!c.init->declarations.empty()) {
            render_decls(os, c.init->declarations);
            os << "\\ST\n";
        }
        render_preds(os, c.init->predicates);
        os << "\\end{init}\n";
    }
    for (const OperationSchema& op : c.operations) {
        os << "\\begin{op} { " << op.name.text << " }\n";
        if (op.delta_list)
            os << "\\Delta ( " << join(*op.delta_list) << " )\n";
        if (op.xi_list)
            os << "\\Xi ( " << join(*op.xi_list) << " )\n";
        if (!op.declarations.empty())
            render_decls(os, op.declarations);
        if (!op.predicates.empty()) {
            os << "\\ST\n";
            render_preds(os, op.predicates);
        }
        os << "\\end{op}\n";
    }
    os << "\\end{class}\n";
}

} // namespace

Specification build_ast(const ParseTree& tree, const Grammar& g)
{
    return Lowering(g).specification(tree);
}

std::string render_type(const TypeExpr& t)
{
    switch (t.kind) {
    case TypeExpr::Kind::Builtin: {
        std::string out = builtin_command(t.builtin);
        if (!t.args.empty()) {
            const TypeExpr& arg = t.args.front();
            // The argument of a prefix constructor is a single term.
            out += " " + render_factor(arg);
        }
        return out;
    }
    case TypeExpr::Kind::Named: {
        std::string out = t.name.text;
        if (!t.args.empty()) {
            out += " [ ";
            for (std::size_t i = 0; i < t.args.size(); ++i)
                out += (i ? " , " : "") + render_type(t.args[i]);
            out += " ]";
        }
        return out;
    }
    case TypeExpr::Kind::Product: {
        std::string out;
        for (std::size_t i = 0; i < t.args.size(); ++i)
            out += (i ? " \\cross " : "") + render_factor(t.args[i]);
        return out;
    }
    }
    return {};
}

std::string render_specification(const Specification& spec)
{
    std::ostringstream os;
    for (const Paragraph& p : spec.paragraphs) {
        if (const auto* given = std::get_if<GivenTypeDecl>(&p))
            os << "[ " << join(given->names) << " ]\n";
        else
            render_class(os, std::get<ClassDef>(p));
    }
    return os.str();
}

} // namespace ozcheck
