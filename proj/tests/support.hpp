#pragma once

#include "ozcheck/ast.hpp"
#include "ozcheck/lexer.hpp"
#include "ozcheck/oz_grammar.hpp"
#include "ozcheck/parser.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace test_support {

inline std::string corpus_path(const std::string& name)
{
    return std::string(OZCHECK_CORPUS_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string corpus(const std::string& name) { return read_file(corpus_path(name)); }

/// Space-separated terminal names, each becoming one Word token, then `$`.
inline std::vector<ozcheck::InputSymbol> symbols_of(const ozcheck::Grammar& g, const std::string& names)
{
    std::vector<ozcheck::InputSymbol> out;
    std::istringstream in(names);
    std::string name;
    int column = 1;
    while (in >> name) {
        ozcheck::Token t;
        t.kind = ozcheck::TokenKind::Word;
        t.lexeme = name;
        t.pos = {out.size(), 1, column};
        column += static_cast<int>(name.size()) + 1;
        out.push_back({g.find(name).value(), t});
    }
    ozcheck::Token end;
    end.pos = {out.size(), 1, column};
    out.push_back({g.end_marker(), end});
    return out;
}

inline ozcheck::ParseOutcome parse_text(std::string_view text)
{
    const auto& g = ozcheck::object_z_grammar();
    auto input = ozcheck::map_terminals(ozcheck::tokenize(text), g);
    return ozcheck::parse(input, ozcheck::object_z_table(), g);
}

/// Parses and lowers; throws when the text is not a specification.
inline ozcheck::Specification spec_of(std::string_view text)
{
    auto outcome = parse_text(text);
    if (auto* e = std::get_if<ozcheck::SyntaxError>(&outcome))
        throw std::runtime_error("syntax error at \"" + e->offending.lexeme + "\"");
    return ozcheck::build_ast(std::get<ozcheck::ParseTree>(outcome), ozcheck::object_z_grammar());
}

struct CliRun {
    int status = -1;
    std::string out;
};

/// Runs the ozcheck executable with stderr discarded.
inline CliRun run_cli(const std::string& args)
{
    std::string cmd = std::string("\"") + OZCHECK_CLI_PATH + "\" " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace test_support
