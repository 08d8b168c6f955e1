#include "ozcheck/ast.hpp"

#include "spec_gen.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ozcheck;
using test_support::spec_of;

namespace {

const ClassDef& only_class(const Specification& s, std::size_t i = 0)
{
    return std::get<ClassDef>(s.paragraphs.at(i));
}

std::vector<std::string> texts(const std::vector<Name>& ns)
{
    std::vector<std::string> out;
    for (const Name& n : ns)
        out.push_back(n.text);
    return out;
}

// Names and predicate starts in the order they are written.
void positions(const TypeExpr& t, std::vector<SourcePos>& out)
{
    if (t.kind != TypeExpr::Kind::Product)
        out.push_back(t.name.pos);
    for (const TypeExpr& a : t.args)
        positions(a, out);
}

void positions(const std::vector<Declaration>& ds, std::vector<SourcePos>& out)
{
    for (const Declaration& d : ds) {
        for (const Name& n : d.names)
            out.push_back(n.pos);
        positions(d.type, out);
    }
}

void positions(const std::vector<PredicateLine>& ps, std::vector<SourcePos>& out)
{
    for (const PredicateLine& p : ps)
        out.push_back(p.pos);
}

std::vector<SourcePos> positions(const Specification& s)
{
    std::vector<SourcePos> out;
    for (const Paragraph& p : s.paragraphs) {
        if (const auto* g = std::get_if<GivenTypeDecl>(&p)) {
            for (const Name& n : g->names)
                out.push_back(n.pos);
            continue;
        }
        const ClassDef& c = std::get<ClassDef>(p);
        out.push_back(c.name.pos);
        for (const Name& n : c.generic_params)
            out.push_back(n.pos);
        if (c.visibility)
            for (const Name& n : *c.visibility)
                out.push_back(n.pos);
        for (const ClassRef& r : c.inherits) {
            out.push_back(r.name.pos);
            for (const TypeExpr& t : r.actuals)
                positions(t, out);
        }
        positions(c.local_defs, out);
        positions(c.local_predicates, out);
        for (const auto* b : {&c.state, &c.init})
            if (*b) {
                positions((*b)->declarations, out);
                positions((*b)->predicates, out);
            }
        for (const OperationSchema& op : c.operations) {
            out.push_back(op.name.pos);
            for (const auto* l : {&op.delta_list, &op.xi_list})
                if (*l)
                    for (const Name& n : **l)
                        out.push_back(n.pos);
            positions(op.declarations, out);
            positions(op.predicates, out);
        }
    }
    return out;
}

} // namespace

TEST_SUITE("ast") {

TEST_CASE("the queue listing lowers to its class")
{
    Specification s = spec_of(test_support::corpus("queue.tex"));
    REQUIRE(s.paragraphs.size() == 1);
    const ClassDef& q = only_class(s);
    CHECK(q.name.text == "Queue");
    CHECK(q.name.pos.line == 1);
    CHECK(texts(q.generic_params) == std::vector<std::string>{"Item"});
    REQUIRE(q.visibility);
    CHECK(texts(*q.visibility) == std::vector<std::string>{"count", "Init", "Join", "Leave"});
    CHECK(q.inherits.empty());
    CHECK(q.local_defs.empty());

    REQUIRE(q.state);
    REQUIRE(q.state->declarations.size() == 2);
    const Declaration& items = q.state->declarations[0];
    CHECK(texts(items.names) == std::vector<std::string>{"items"});
    CHECK(items.type.kind == TypeExpr::Kind::Builtin);
    CHECK(items.type.builtin == BuiltinKind::Sequence);
    REQUIRE(items.type.args.size() == 1);
    CHECK(items.type.args[0].kind == TypeExpr::Kind::Named);
    CHECK(items.type.args[0].name.text == "Item");
    CHECK(q.state->declarations[1].type.builtin == BuiltinKind::Naturals);
    CHECK(q.state->predicates.empty());

    REQUIRE(q.init);
    CHECK(q.init->declarations.empty());
    REQUIRE(q.init->predicates.size() == 2);
    CHECK(q.init->predicates[0].tokens == std::vector<std::string>{"items", "=", "\\emptyseq"});
    CHECK(q.init->predicates[1].tokens == std::vector<std::string>{"count", "=", "0"});

    REQUIRE(q.operations.size() == 2);
    const OperationSchema& join = q.operations[0];
    CHECK(join.name.text == "Join");
    REQUIRE(join.delta_list);
    CHECK(texts(*join.delta_list) == std::vector<std::string>{"items", "count"});
    CHECK_FALSE(join.xi_list);
    REQUIRE(join.declarations.size() == 1);
    CHECK(join.declarations[0].names[0].text == "item?");
    REQUIRE(join.predicates.size() == 2);
    CHECK(join.predicates[0].tokens ==
          std::vector<std::string>{"items'", "=", "items", "\\cat", "\\lseq", "item?", "\\rseq"});
    CHECK(join.predicates[1].pos.line == 17);
    CHECK(texts(*q.operations[1].delta_list) == std::vector<std::string>{"items"});
}

TEST_CASE("given types and inheritance")
{
    Specification s = spec_of("[ Message , Frame ]\n"
                              "\\begin{class} { B } \\inherit A \\\\ C [ \\nat , Message ] \\endinherit "
                              "\\begin{axdef} k : \\nat \\ST k > 1 \\end{axdef} \\begin{axdef} j : \\num \\end{axdef} "
                              "\\begin{op} { Op } \\Xi ( x ) \\Delta ( y ) \\Delta ( z ) \\end{op} \\end{class}");
    REQUIRE(s.paragraphs.size() == 2);
    CHECK(texts(std::get<GivenTypeDecl>(s.paragraphs[0]).names) == std::vector<std::string>{"Message", "Frame"});
    const ClassDef& b = only_class(s, 1);
    REQUIRE(b.inherits.size() == 2);
    CHECK(b.inherits[0].name.text == "A");
    CHECK(b.inherits[0].actuals.empty());
    CHECK(b.inherits[1].actuals.size() == 2);
    CHECK(b.local_defs.size() == 2);
    CHECK(b.local_predicates.size() == 1);
    CHECK_FALSE(b.visibility);
    CHECK_FALSE(b.state);
    const OperationSchema& op = b.operations.at(0);
    CHECK(texts(*op.xi_list) == std::vector<std::string>{"x"});
    CHECK(texts(*op.delta_list) == std::vector<std::string>{"y", "z"});
}

TEST_CASE("cross products flatten unless parenthesized")
{
    Specification s = spec_of("\\begin{class} { P } \\begin{state} p : A \\cross B \\cross C \\\\ "
                              "q : ( A \\cross B ) \\cross C \\\\ r : \\pset ( A \\cross B ) \\\\ "
                              "s : F [ A \\cross B , C ] \\end{state} \\end{class}");
    const auto& d = only_class(s).state->declarations;
    REQUIRE(d.size() == 4);
    CHECK(d[0].type.kind == TypeExpr::Kind::Product);
    CHECK(d[0].type.args.size() == 3);
    CHECK(d[1].type.args.size() == 2);
    CHECK(d[1].type.args[0].kind == TypeExpr::Kind::Product);
    CHECK(d[2].type.builtin == BuiltinKind::PowerSet);
    CHECK(d[2].type.args[0].kind == TypeExpr::Kind::Product);
    CHECK(d[3].type.args.size() == 2);
    CHECK(d[3].type.args[0].kind == TypeExpr::Kind::Product);
    CHECK(render_type(d[1].type) == "( A \\cross B ) \\cross C");
    CHECK(render_type(d[2].type) == "\\pset ( A \\cross B )");
}

TEST_CASE("mathbb spellings lower to the builtin types")
{
    Specification s = spec_of(test_support::corpus("exp1.tex"));
    const TypeExpr& t = only_class(s).state->declarations[0].type;
    CHECK(t.builtin == BuiltinKind::FiniteSets);
    CHECK(t.args.at(0).builtin == BuiltinKind::Naturals);
}

TEST_CASE("corpus specifications survive rendering")
{
    for (const char* f : {"class_a.tex", "queue.tex", "queue_var_type.tex", "exp1.tex", "exp2.tex", "exp3.tex",
                          "exp4.tex", "exp5.tex"}) {
        CAPTURE(f);
        Specification s = spec_of(test_support::corpus(f));
        CHECK(spec_of(render_specification(s)) == s);
    }
}

TEST_CASE("property: generated specifications parse, lower, and round-trip")
{
    for (unsigned seed = 1; seed <= 200; ++seed) {
        CAPTURE(seed);
        spec_gen::Generator gen(seed, {seed % 2 == 0});
        Specification s = gen.specification();
        std::string text = render_specification(s);
        CAPTURE(text);
        Specification back;
        REQUIRE_NOTHROW(back = spec_of(text));
        CHECK(back == s);
        CHECK(render_specification(back) == text);

        std::vector<SourcePos> ps = positions(back);
        for (std::size_t i = 1; i < ps.size(); ++i)
            CHECK(position_before(ps[i - 1], ps[i]));
    }
}

}
