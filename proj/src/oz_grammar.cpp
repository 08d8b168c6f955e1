#include "ozcheck/oz_grammar.hpp"

#include <stdexcept>

namespace ozcheck {

namespace {

// The first four productions are the top-level class forms; production 5 is
// the plain class heading. Sections of a class body follow the order
// visibility, inheritance, local definitions, state, init, operations.
// Classes without an inheritance block use the ClassBody tiers, which are
// each non-empty so that the empty class stays a distinct production.
constexpr std::string_view grammar_text = R"grammar(# Object Z over zed.sty / oz.sty LaTeX terminals
ParagraphList -> Paragraph
ParagraphList -> Paragraph ParagraphList
Paragraph -> "\begin{class}" "{" ClassHeading "}" "\end{class}"
Paragraph -> "\begin{class}" "{" ClassHeading "}" Visibility "\inherit" Inheritance "\endinherit" StateSchema InitialSchema Operations "\end{class}"
ClassHeading -> Word
ClassHeading -> Word "[" NameList "]"
Paragraph -> "\begin{class}" "{" ClassHeading "}" ClassBody "\end{class}"
Paragraph -> "[" NameList "]"

# inheriting classes
Visibility ->
Visibility -> VisibilityList
VisibilityList -> "\visibility" "(" NameList ")"
Inheritance -> ClassRef
Inheritance -> Inheritance "\\" ClassRef
ClassRef -> Word
ClassRef -> Word "[" TypeList "]"
StateSchema -> LocalDefinitions
StateSchema -> LocalDefinitions StateBox
LocalDefinitions ->
LocalDefinitions -> LocalDefinitions AxDef
InitialSchema ->
InitialSchema -> InitBox
Operations ->
Operations -> Operations Operation

# other classes
ClassBody -> VisibilityList LocalTierOpt
ClassBody -> LocalTier
LocalTierOpt ->
LocalTierOpt -> LocalTier
LocalTier -> LocalDefList StateTierOpt
LocalTier -> StateTier
LocalDefList -> AxDef
LocalDefList -> LocalDefList AxDef
StateTierOpt ->
StateTierOpt -> StateTier
StateTier -> StateBox InitTierOpt
StateTier -> InitTier
InitTierOpt ->
InitTierOpt -> InitTier
InitTier -> InitBox OperationList
InitTier -> InitBox
InitTier -> OperationList
OperationList -> Operation
OperationList -> OperationList Operation

# boxes
AxDef -> "\begin{axdef}" DeclPart "\end{axdef}"
AxDef -> "\begin{axdef}" DeclPart "\ST" PredPart "\end{axdef}"
StateBox -> "\begin{state}" DeclPart "\end{state}"
StateBox -> "\begin{state}" DeclPart "\ST" PredPart "\end{state}"
InitBox -> "\begin{init}" PredPart "\end{init}"
InitBox -> "\begin{init}" DeclPart "\ST" PredPart "\end{init}"
Operation -> "\begin{op}" "{" Word "}" ChangeLists OpDecls OpPredicates "\end{op}"
ChangeLists ->
ChangeLists -> ChangeLists ChangeList
ChangeList -> "\Delta" "(" NameList ")"
ChangeList -> "\Xi" "(" NameList ")"
OpDecls ->
OpDecls -> DeclPart
OpPredicates ->
OpPredicates -> "\ST" PredPart

# declarations
DeclPart -> Declaration
DeclPart -> DeclPart "\\" Declaration
Declaration -> DeclNames ":" TypeExpr
DeclNames -> Word
DeclNames -> DeclNames "," Word
NameList -> Word
NameList -> NameList "," Word

# types
TypeExpr -> TypeTerm
TypeExpr -> TypeExpr "\cross" TypeTerm
TypeTerm -> "\nat"
TypeTerm -> "\num"
TypeTerm -> "\seq" TypeTerm
TypeTerm -> "\pset" TypeTerm
TypeTerm -> "\fset" TypeTerm
TypeTerm -> Word
TypeTerm -> Word "[" TypeList "]"
TypeTerm -> "(" TypeExpr ")"
TypeList -> TypeExpr
TypeList -> TypeList "," TypeExpr

# predicates
PredPart -> Predicate
PredPart -> PredPart "\\" Predicate
Predicate -> Expression Relation Expression
Relation -> "="
Relation -> "\neq"
Relation -> "<"
Relation -> "\leq"
Relation -> ">"
Relation -> "\geq"
Relation -> "\in"
Relation -> "\notin"
Relation -> "\subseteq"
Expression -> Term
Expression -> Expression "+" Term
Expression -> Expression "-" Term
Expression -> Expression "\cat" Term
Expression -> Expression "\cup" Term
Expression -> Expression "\cap" Term
Term -> Word
Term -> Number
Term -> "\emptyseq"
Term -> "\lseq" "\rseq"
Term -> "\lseq" SeqElems "\rseq"
Term -> "(" Expression ")"
Term -> "\#" Term
SeqElems -> SeqElem
SeqElems -> SeqElems "," SeqElem
SeqElem -> Word
SeqElem -> Number
)grammar";

struct Shipped {
    Grammar grammar;
    ParseTable table;
};

const Shipped& shipped()
{
    static const Shipped s = [] {
        Grammar g = grammar_from_text(grammar_text);
        auto built = build_table(g);
        if (auto* report = std::get_if<ConflictReport>(&built))
            throw std::logic_error("shipped Object Z grammar is not SLR(1):\n" +
                                   format_conflicts(*report, g));
        ParseTable t = std::get<ParseTable>(std::move(built));
        return Shipped{std::move(g), std::move(t)};
    }();
    return s;
}

} // namespace

std::string_view object_z_grammar_text() { return grammar_text; }

const Grammar& object_z_grammar() { return shipped().grammar; }

const ParseTable& object_z_table() { return shipped().table; }

} // namespace ozcheck
