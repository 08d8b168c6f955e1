#include "ozcheck/lexer.hpp"
#include "ozcheck/oz_grammar.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace ozcheck;

namespace {

std::vector<TokenKind> kinds(const TokenStream& ts)
{
    std::vector<TokenKind> out;
    for (const Token& t : ts.tokens)
        out.push_back(t.kind);
    return out;
}

std::vector<std::string> lexemes(const TokenStream& ts)
{
    std::vector<std::string> out;
    for (const Token& t : ts.tokens)
        out.push_back(t.lexeme);
    return out;
}

std::string pos_of(std::string_view text, std::string_view what)
{
    try {
        tokenize(text);
    } catch (const LexError& e) {
        std::ostringstream os;
        os << e.unit() << '@' << e.pos().line << ':' << e.pos().column;
        return os.str();
    }
    return std::string("no error for ") + std::string(what);
}

using K = TokenKind;

} // namespace

TEST_SUITE("lexer") {

TEST_CASE("the smallest class")
{
    TokenStream ts = tokenize("\\begin{class} { A } \\end{class}");
    CHECK(kinds(ts) == std::vector<K>{K::EnvBegin, K::LBrace, K::Word, K::RBrace, K::EnvEnd, K::EndMarker});
    CHECK(ts.tokens[0].name == "class");
    CHECK(ts.tokens[2].lexeme == "A");
    CHECK(ts.tokens[4].name == "class");
}

TEST_CASE("empty and blank text give only the end marker")
{
    CHECK(kinds(tokenize("")) == std::vector<K>{K::EndMarker});
    CHECK(kinds(tokenize(" \t\n\n ")) == std::vector<K>{K::EndMarker});
}

TEST_CASE("a declaration line")
{
    TokenStream ts = tokenize("items : \\seq Item \\\\");
    CHECK(kinds(ts) == std::vector<K>{K::Word, K::Operator, K::Command, K::Word, K::LineSep, K::EndMarker});
    CHECK(ts.tokens[2].name == "seq");
}

TEST_CASE("a spaced backslash pair is a line separator")
{
    TokenStream ts = tokenize("a : \\nat \\ \\\nb : \\nat");
    CHECK(kinds(ts) == std::vector<K>{K::Word, K::Operator, K::Command, K::LineSep, K::Word, K::Operator,
                                      K::Command, K::EndMarker});
    CHECK(ts.tokens[3].lexeme == "\\\\");
    CHECK(pos_of("a \\ b", "lone backslash").rfind("\\@1:3", 0) == 0);
}

TEST_CASE("decorated names are single words")
{
    TokenStream ts = tokenize("items' item? item! x1_y");
    REQUIRE(ts.tokens.size() == 5);
    CHECK(ts.tokens[0].kind == K::Word);
    CHECK(ts.tokens[0].decoration == "'");
    CHECK(ts.tokens[1].decoration == "?");
    CHECK(ts.tokens[2].decoration == "!");
    CHECK(ts.tokens[3].decoration.empty());
}

TEST_CASE("numbers, operators, commands")
{
    TokenStream ts = tokenize("0 42 = + ( ) , \\Delta \\# \\mathbb{N}");
    CHECK(kinds(ts) == std::vector<K>{K::Number, K::Number, K::Operator, K::Operator, K::Operator,
                                      K::Operator, K::Operator, K::Command, K::Command, K::Command,
                                      K::EndMarker});
    CHECK(ts.tokens[8].name == "#");
    CHECK(ts.tokens[9].lexeme == "\\mathbb{N}");
}

TEST_CASE("positions are 1-based lines and code-point columns")
{
    TokenStream ts = tokenize("ab  cd\n  é x");
    REQUIRE(ts.tokens.size() == 5);
    CHECK(ts.tokens[1].pos.line == 1);
    CHECK(ts.tokens[1].pos.column == 5);
    CHECK(ts.tokens[2].pos.line == 2);
    CHECK(ts.tokens[2].pos.column == 3);
    CHECK(ts.tokens[2].kind == K::Word);
    CHECK(ts.tokens[3].pos.column == 5);
    for (std::size_t i = 0; i < ts.tokens.size(); ++i)
        CHECK(ts.tokens[i].pos.index == i);
}

TEST_CASE("comment lines and the document preamble are skipped")
{
    CHECK(lexemes(tokenize("% a comment \\begin{class}\nx")) == std::vector<std::string>{"x", ""});
    CHECK(lexemes(tokenize("\\documentclass{article}\n\\usepackage{oz}\n\\begin{document}\nx\n"
                           "\\end{document}\ntrailing")) == std::vector<std::string>{"x", ""});
    TokenStream ts = tokenize("\\begin{document}\n  y");
    CHECK(ts.tokens[0].pos.line == 2);
}

TEST_CASE("malformed units are lexical errors")
{
    CHECK(pos_of("\\begin{class", "unterminated").rfind("\\begin{class@1:1", 0) == 0);
    CHECK(pos_of("x \\end{}", "empty env").rfind("\\end{}@1:3", 0) == 0);
    CHECK(pos_of("a,b", "glued").rfind("a,b@1:1", 0) == 0);
    CHECK(pos_of("ok\nx\x01y", "control").find("@2:2") != std::string::npos);
}

TEST_CASE("lenient mode splits glued punctuation")
{
    TokenStream ts = tokenize("\\begin{op}{Join} \\Delta(items,count) x:\\nat", LexOptions{true});
    CHECK(lexemes(ts) == std::vector<std::string>{"\\begin{op}", "{", "Join", "}", "\\Delta", "(", "items", ",",
                                                  "count", ")", "x", ":", "\\nat", ""});
    CHECK(ts.tokens[2].pos.column == 12);
    CHECK_THROWS_AS(tokenize("\\Delta(items)"), LexError);
}

TEST_CASE("tokens map to grammar terminals")
{
    const Grammar& g = object_z_grammar();
    TokenStream ts = tokenize("A \\Delta \\mathbb{N} \\\\ \\begin{state} 7 =");
    CHECK(g.name(terminal_of(ts.tokens[0], g)) == "Word");
    CHECK(g.name(terminal_of(ts.tokens[1], g)) == "\\Delta");
    CHECK(g.name(terminal_of(ts.tokens[2], g)) == "\\nat");
    CHECK(g.name(terminal_of(ts.tokens[3], g)) == "\\\\");
    CHECK(g.name(terminal_of(ts.tokens[4], g)) == "\\begin{state}");
    CHECK(g.name(terminal_of(ts.tokens[5], g)) == "Number");
    CHECK(g.name(terminal_of(ts.tokens[6], g)) == "=");
    CHECK(terminal_of(ts.tokens[7], g) == g.end_marker());
    CHECK_THROWS_AS(terminal_of(tokenize("\\unknowncommand").tokens[0], g), UnknownToken);
}

TEST_CASE("locate names the class and block of a token")
{
    TokenStream ts = tokenize(test_support::corpus("queue.tex"));
    auto at = [&](int line, int col) {
        for (const Token& t : ts.tokens)
            if (t.pos.line == line && t.pos.column == col)
                return locate(ts.tokens, t.pos.index);
        FAIL("no token at " << line << ":" << col);
        return Localization{};
    };
    Localization heading = at(1, 17);
    CHECK(heading.class_name == "Queue");
    CHECK(heading.block.kind == BlockLabel::Kind::ClassHeading);
    CHECK(at(2, 15).block.kind == BlockLabel::Kind::Visibility);
    CHECK(at(5, 7).block.kind == BlockLabel::Kind::State);
    CHECK(at(9, 7).block.kind == BlockLabel::Kind::Init);
    CHECK(at(13, 1).block == BlockLabel::op("Join"));
    CHECK(at(24, 12).block == BlockLabel::op("Leave"));
    CHECK_FALSE(locate(ts.tokens, ts.tokens.size() - 1).class_name.has_value());
    CHECK(locate(ts.tokens, 0).block.kind == BlockLabel::Kind::TopLevel);
}

TEST_CASE("block labels round-trip through their compact form")
{
    for (BlockLabel b : {BlockLabel{BlockLabel::Kind::TopLevel, {}}, BlockLabel{BlockLabel::Kind::ClassHeading, {}},
                         BlockLabel{BlockLabel::Kind::ClassBody, {}}, BlockLabel{BlockLabel::Kind::Visibility, {}},
                         BlockLabel{BlockLabel::Kind::Inheritance, {}},
                         BlockLabel{BlockLabel::Kind::LocalDefinitions, {}}, BlockLabel{BlockLabel::Kind::State, {}},
                         BlockLabel{BlockLabel::Kind::Init, {}}, BlockLabel::op("Join")})
        CHECK(parse_block_label(to_string(b)) == b);
    CHECK(to_string(BlockLabel::op("Join")) == "operation(Join)");
    CHECK(describe(BlockLabel{BlockLabel::Kind::State, {}}) == "state schema");
    CHECK_FALSE(parse_block_label("nonsense").has_value());
}

TEST_CASE("property: whitespace convention")
{
    static const std::vector<std::string> pool{
        "\\begin{class}", "\\end{state}", "{", "}", "[", "]", "\\\\", "\\Delta", "\\seq", "\\mathbb{Z}",
        "items", "item?", "count'", "x!", "a_1", "0", "123", "=", ":", ",", "(", ")", "+", "\\#"};
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<std::size_t> unit(0, pool.size() - 1);
    std::uniform_int_distribution<int> n_units(0, 40), gap(0, 5);
    static const char* blanks[] = {" ", "  ", "\t", "\n", " \n ", "\n\n"};

    for (int round = 0; round < 300; ++round) {
        std::string text;
        int n = n_units(rng);
        for (int i = 0; i < n; ++i) {
            text += blanks[gap(rng)];
            text += pool[unit(rng)];
        }
        text += blanks[gap(rng)];
        TokenStream ts = tokenize(text);

        // one token per unit plus the end marker
        REQUIRE(ts.tokens.size() == static_cast<std::size_t>(n) + 1);

        // positions point at the first character of the unit
        std::vector<std::size_t> line_start{0};
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] == '\n')
                line_start.push_back(i + 1);
        for (std::size_t i = 0; i + 1 < ts.tokens.size(); ++i) {
            const Token& t = ts.tokens[i];
            std::size_t at = line_start[static_cast<std::size_t>(t.pos.line - 1)] +
                             static_cast<std::size_t>(t.pos.column - 1);
            REQUIRE(at < text.size());
            CHECK(text.compare(at, t.lexeme.size(), t.lexeme) == 0);
        }

        // re-joining the lexemes with single spaces gives the same tokens
        std::string joined;
        for (std::size_t i = 0; i + 1 < ts.tokens.size(); ++i)
            joined += (i ? " " : "") + ts.tokens[i].lexeme;
        TokenStream again = tokenize(joined);
        CHECK(kinds(again) == kinds(ts));
        CHECK(lexemes(again) == lexemes(ts));
    }
}

TEST_CASE("token dump has one line per token")
{
    TokenStream ts = tokenize("A = 1");
    CHECK(dump_tokens(ts) == "0\tWord\tA\t1:1\n1\tOperator\t=\t1:3\n2\tNumber\t1\t1:5\n3\tEndMarker\t\t1:6\n");
}

}
