#include "ozcheck/lexer.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace ozcheck {

// ----------------------------------------------------------------------------
// Block labels

std::string to_string(const BlockLabel& b)
{
    using K = BlockLabel::Kind;
    switch (b.kind) {
    case K::TopLevel: return "top-level";
    case K::ClassHeading: return "class-heading";
    case K::ClassBody: return "class-body";
    case K::Visibility: return "visibility";
    case K::Inheritance: return "inheritance";
    case K::LocalDefinitions: return "local-definitions";
    case K::State: return "state";
    case K::Init: return "init";
    case K::Operation: return "operation(" + b.operation + ")";
    }
    return "top-level";
}

std::optional<BlockLabel> parse_block_label(std::string_view s)
{
    using K = BlockLabel::Kind;
    static const std::array<std::pair<std::string_view, K>, 8> simple{{
        {"top-level", K::TopLevel},
        {"class-heading", K::ClassHeading},
        {"class-body", K::ClassBody},
        {"visibility", K::Visibility},
        {"inheritance", K::Inheritance},
        {"local-definitions", K::LocalDefinitions},
        {"state", K::State},
        {"init", K::Init},
    }};
    for (const auto& [text, kind] : simple)
        if (s == text)
            return BlockLabel{kind, {}};
    constexpr std::string_view prefix = "operation(";
    if (s.size() > prefix.size() && s.substr(0, prefix.size()) == prefix && s.back() == ')')
        return BlockLabel::op(std::string(s.substr(prefix.size(), s.size() - prefix.size() - 1)));
    return std::nullopt;
}

std::string describe(const BlockLabel& b)
{
    using K = BlockLabel::Kind;
    switch (b.kind) {
    case K::TopLevel: return "top-level";
    case K::ClassHeading: return "class heading";
    case K::ClassBody: return "class body";
    case K::Visibility: return "visibility list";
    case K::Inheritance: return "inheritance list";
    case K::LocalDefinitions: return "local definitions";
    case K::State: return "state schema";
    case K::Init: return "initial state schema";
    case K::Operation: return "operation \"" + b.operation + "\"";
    }
    return "top-level";
}

// ----------------------------------------------------------------------------
// Tokens

std::string_view to_string(TokenKind k)
{
    switch (k) {
    case TokenKind::EnvBegin: return "EnvBegin";
    case TokenKind::EnvEnd: return "EnvEnd";
    case TokenKind::Command: return "Command";
    case TokenKind::LBrace: return "LBrace";
    case TokenKind::RBrace: return "RBrace";
    case TokenKind::LBracket: return "LBracket";
    case TokenKind::RBracket: return "RBracket";
    case TokenKind::Word: return "Word";
    case TokenKind::Number: return "Number";
    case TokenKind::Operator: return "Operator";
    case TokenKind::LineSep: return "LineSep";
    case TokenKind::EndMarker: return "EndMarker";
    }
    return "?";
}

LexError::LexError(SourcePos pos, std::string unit, const std::string& what)
    : std::runtime_error(what), pos_(pos), unit_(std::move(unit))
{
}

UnknownToken::UnknownToken(Token t)
    : std::runtime_error("no grammar terminal for '" + t.lexeme + "'"), token_(std::move(t))
{
}

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

bool is_letter(unsigned char c) { return std::isalpha(c) || c >= 0x80; }

bool is_operator_char(char c)
{
    static constexpr std::string_view ops = "=+-*/<>:;,.()|&^~@";
    return ops.find(c) != std::string_view::npos;
}

int code_points(std::string_view s)
{
    int n = 0;
    for (char c : s)
        if (!is_continuation(static_cast<unsigned char>(c)))
            ++n;
    return n;
}

struct Unit {
    std::string text;
    int line;
    int column;
};

bool valid_env_name(std::string_view n)
{
    if (n.empty())
        return false;
    for (char c : n)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '*')
            return false;
    return true;
}

// Length of a command piece starting at s[0] == '\\', or 0 when malformed.
std::size_t command_length(std::string_view s)
{
    if (s.size() < 2)
        return 0;
    if (!std::isalpha(static_cast<unsigned char>(s[1])))
        return 2; // control symbol such as \# or \{
    std::size_t i = 1;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
        ++i;
    if (s.substr(1, i - 1) == "mathbb" && i < s.size() && s[i] == '{') {
        auto close = s.find('}', i);
        if (close == std::string_view::npos || close == i + 1)
            return 0;
        return close + 1;
    }
    return i;
}

Token classify(const Unit& u)
{
    const std::string& s = u.text;
    Token t;
    t.lexeme = s;
    t.pos.line = u.line;
    t.pos.column = u.column;

    auto env = [&](std::string_view prefix, TokenKind kind) {
        if (s.back() != '}')
            throw LexError(t.pos, s, "malformed environment delimiter '" + s + "'");
        std::string name = s.substr(prefix.size(), s.size() - prefix.size() - 1);
        if (!valid_env_name(name))
            throw LexError(t.pos, s, "malformed environment delimiter '" + s + "'");
        t.kind = kind;
        t.name = std::move(name);
        return t;
    };

    if (s.rfind("\\begin{", 0) == 0)
        return env("\\begin{", TokenKind::EnvBegin);
    if (s.rfind("\\end{", 0) == 0)
        return env("\\end{", TokenKind::EnvEnd);
    if (s == "\\\\") {
        t.kind = TokenKind::LineSep;
        return t;
    }
    if (s[0] == '\\') {
        if (command_length(s) != s.size())
            throw LexError(t.pos, s, "malformed command '" + s + "'");
        t.kind = TokenKind::Command;
        t.name = s.substr(1);
        return t;
    }
    if (s.size() == 1) {
        switch (s[0]) {
        case '{': t.kind = TokenKind::LBrace; return t;
        case '}': t.kind = TokenKind::RBrace; return t;
        case '[': t.kind = TokenKind::LBracket; return t;
        case ']': t.kind = TokenKind::RBracket; return t;
        default: break;
        }
    }
    bool digits = true;
    for (char c : s)
        digits &= std::isdigit(static_cast<unsigned char>(c)) != 0;
    if (digits) {
        t.kind = TokenKind::Number;
        return t;
    }
    if (is_letter(static_cast<unsigned char>(s[0]))) {
        std::size_t i = 0;
        while (i < s.size() && (is_letter(static_cast<unsigned char>(s[i])) ||
                                std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        std::size_t stem = i;
        while (i < s.size() && (s[i] == '\'' || s[i] == '?' || s[i] == '!'))
            ++i;
        if (i == s.size()) {
            t.kind = TokenKind::Word;
            t.decoration = s.substr(stem);
            return t;
        }
    }
    bool ops = true;
    for (char c : s)
        ops &= is_operator_char(c);
    if (ops) {
        t.kind = TokenKind::Operator;
        return t;
    }
    throw LexError(t.pos, s,
                   "unrecognized lexical unit '" + s + "' (units must be separated by blanks)");
}

// Splits a unit into pieces for lenient mode.
std::vector<Unit> split_lenient(const Unit& u)
{
    static constexpr std::string_view split_chars = "{}[](),:";
    const std::string& s = u.text;
    std::vector<Unit> out;
    std::size_t i = 0;
    auto emit = [&](std::size_t from, std::size_t len) {
        out.push_back(Unit{s.substr(from, len), u.line,
                           u.column + code_points(std::string_view(s).substr(0, from))});
    };
    while (i < s.size()) {
        std::string_view rest = std::string_view(s).substr(i);
        if (rest.rfind("\\begin{", 0) == 0 || rest.rfind("\\end{", 0) == 0) {
            auto close = rest.find('}');
            std::size_t len = close == std::string_view::npos ? rest.size() : close + 1;
            emit(i, len);
            i += len;
        } else if (rest.rfind("\\\\", 0) == 0) {
            emit(i, 2);
            i += 2;
        } else if (rest[0] == '\\') {
            std::size_t len = command_length(rest);
            if (len == 0)
                len = rest.size();
            emit(i, len);
            i += len;
        } else if (split_chars.find(rest[0]) != std::string_view::npos) {
            emit(i, 1);
            i += 1;
        } else {
            std::size_t len = 0;
            while (len < rest.size() && rest[len] != '\\' &&
                   split_chars.find(rest[len]) == std::string_view::npos)
                ++len;
            emit(i, len);
            i += len;
        }
    }
    return out;
}

std::vector<Unit> scan_units(std::string_view src, std::size_t from, std::size_t to,
                             int& end_line, int& end_column)
{
    std::vector<Unit> units;
    int line = 1;
    int column = 1;
    bool at_line_start = true;
    std::size_t i = 0;

    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
            at_line_start = true;
        } else if (!is_continuation(static_cast<unsigned char>(c))) {
            ++column;
        }
    };
    auto check_control = [&](char c) {
        auto uc = static_cast<unsigned char>(c);
        if ((uc < 0x20 && c != '\t' && c != '\n' && c != '\r' && c != '\f') || uc == 0x7F) {
            std::ostringstream msg;
            msg << "unsupported control character 0x" << std::hex << static_cast<int>(uc);
            throw LexError(SourcePos{units.size(), line, column}, std::string(1, c), msg.str());
        }
    };

    while (i < from)
        advance(src[i++]);

    while (i < to) {
        char c = src[i];
        check_control(c);
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
            advance(c);
            ++i;
            continue;
        }
        if (c == '%' && at_line_start) {
            while (i < to && src[i] != '\n')
                advance(src[i++]);
            continue;
        }
        at_line_start = false;
        Unit u{{}, line, column};
        while (i < to && src[i] != ' ' && src[i] != '\t' && src[i] != '\n' && src[i] != '\r' &&
               src[i] != '\f') {
            check_control(src[i]);
            u.text += src[i];
            advance(src[i++]);
        }
        units.push_back(std::move(u));
    }
    end_line = line;
    end_column = column;
    return units;
}

} // namespace

TokenStream tokenize(std::string_view source, LexOptions options)
{
    std::size_t from = 0;
    std::size_t to = source.size();
    constexpr std::string_view doc_begin = "\\begin{document}";
    constexpr std::string_view doc_end = "\\end{document}";
    if (auto b = source.find(doc_begin); b != std::string_view::npos) {
        from = b + doc_begin.size();
        if (auto e = source.find(doc_end, from); e != std::string_view::npos)
            to = e;
    }

    int end_line = 1;
    int end_column = 1;
    std::vector<Unit> units = scan_units(source, from, to, end_line, end_column);

    TokenStream ts;
    auto push = [&](Token t) {
        t.pos.index = ts.tokens.size();
        ts.tokens.push_back(std::move(t));
    };

    for (std::size_t u = 0; u < units.size(); ++u) {
        if (units[u].text == "\\") {
            // `\ \` is read as a line separator.
            if (u + 1 < units.size() && units[u + 1].text == "\\") {
                Token t;
                t.kind = TokenKind::LineSep;
                t.lexeme = "\\\\";
                t.pos.line = units[u].line;
                t.pos.column = units[u].column;
                push(std::move(t));
                ++u;
                continue;
            }
            throw LexError(SourcePos{ts.tokens.size(), units[u].line, units[u].column}, "\\",
                           "stray backslash");
        }
        if (options.lenient) {
            for (const Unit& piece : split_lenient(units[u])) {
                try {
                    push(classify(piece));
                } catch (LexError& e) {
                    SourcePos p = e.pos();
                    p.index = ts.tokens.size();
                    throw LexError(p, e.unit(), e.what());
                }
            }
        } else {
            try {
                push(classify(units[u]));
            } catch (LexError& e) {
                SourcePos p = e.pos();
                p.index = ts.tokens.size();
                throw LexError(p, e.unit(), e.what());
            }
        }
    }

    Token end;
    end.kind = TokenKind::EndMarker;
    end.pos.line = end_line;
    end.pos.column = end_column;
    push(std::move(end));
    return ts;
}

std::string dump_tokens(const TokenStream& ts)
{
    std::ostringstream os;
    for (const Token& t : ts.tokens)
        os << t.pos.index << '\t' << to_string(t.kind) << '\t' << t.lexeme << '\t' << t.pos.line
           << ':' << t.pos.column << '\n';
    return os.str();
}

SymbolId terminal_of(const Token& t, const Grammar& g)
{
    auto terminal = [&](std::string_view name) -> std::optional<SymbolId> {
        auto s = g.find(name);
        if (s && g.is_terminal(*s))
            return s;
        return std::nullopt;
    };

    std::optional<SymbolId> out;
    switch (t.kind) {
    case TokenKind::EnvBegin: out = terminal("\\begin{" + t.name + "}"); break;
    case TokenKind::EnvEnd: out = terminal("\\end{" + t.name + "}"); break;
    case TokenKind::Command: {
        static const std::array<std::pair<std::string_view, std::string_view>, 4> aliases{{
            {"mathbb{N}", "\\nat"},
            {"mathbb{Z}", "\\num"},
            {"mathbb{F}", "\\fset"},
            {"mathbb{P}", "\\pset"},
        }};
        out = terminal(t.lexeme);
        for (const auto& [from, to] : aliases)
            if (!out && t.name == from)
                out = terminal(to);
        break;
    }
    case TokenKind::Word:
        out = terminal("Word");
        if (!out)
            out = terminal(t.lexeme);
        break;
    case TokenKind::Number:
        out = terminal("Number");
        if (!out)
            out = terminal(t.lexeme);
        break;
    case TokenKind::LBrace:
    case TokenKind::RBrace:
    case TokenKind::LBracket:
    case TokenKind::RBracket:
    case TokenKind::Operator:
    case TokenKind::LineSep: out = terminal(t.lexeme); break;
    case TokenKind::EndMarker: out = g.end_marker(); break;
    }
    if (!out)
        throw UnknownToken(t);
    return *out;
}

// ----------------------------------------------------------------------------
// Localization

Localization locate(std::span<const Token> tokens, std::size_t index)
{
    enum class Mode { None, Heading, Visibility, Inheritance };

    std::optional<std::string> class_name;
    std::vector<std::string> envs;
    std::string op_name;
    Mode mode = Mode::None;
    int heading_depth = 0;

    const std::size_t end = std::min(index, tokens.size());
    for (std::size_t i = 0; i < end; ++i) {
        const Token& t = tokens[i];
        auto next_word_after_brace = [&]() -> std::optional<std::string> {
            if (i + 2 < tokens.size() && tokens[i + 1].kind == TokenKind::LBrace &&
                tokens[i + 2].kind == TokenKind::Word)
                return tokens[i + 2].lexeme;
            return std::nullopt;
        };
        switch (t.kind) {
        case TokenKind::EnvBegin:
            envs.push_back(t.name);
            if (t.name == "class") {
                class_name = next_word_after_brace();
                mode = Mode::Heading;
                heading_depth = 0;
            } else if (t.name == "op") {
                op_name = next_word_after_brace().value_or("");
            }
            break;
        case TokenKind::EnvEnd:
            if (!envs.empty() && envs.back() == t.name)
                envs.pop_back();
            if (t.name == "class") {
                class_name.reset();
                mode = Mode::None;
            }
            break;
        case TokenKind::LBrace:
            if (mode == Mode::Heading)
                ++heading_depth;
            break;
        case TokenKind::RBrace:
            if (mode == Mode::Heading && --heading_depth <= 0)
                mode = Mode::None;
            break;
        case TokenKind::Command:
            if (t.name == "visibility")
                mode = Mode::Visibility;
            else if (t.name == "inherit")
                mode = Mode::Inheritance;
            else if (t.name == "endinherit" && mode == Mode::Inheritance)
                mode = Mode::None;
            break;
        case TokenKind::Operator:
            if (t.lexeme == ")" && mode == Mode::Visibility)
                mode = Mode::None;
            break;
        default: break;
        }
    }

    Localization loc;
    loc.class_name = class_name;
    using K = BlockLabel::Kind;
    const std::string top = envs.empty() ? std::string() : envs.back();
    if (top == "state")
        loc.block = BlockLabel{K::State, {}};
    else if (top == "init")
        loc.block = BlockLabel{K::Init, {}};
    else if (top == "op")
        loc.block = BlockLabel::op(op_name);
    else if (top == "axdef")
        loc.block = BlockLabel{K::LocalDefinitions, {}};
    else if (top == "class") {
        switch (mode) {
        case Mode::Heading: loc.block = BlockLabel{K::ClassHeading, {}}; break;
        case Mode::Visibility: loc.block = BlockLabel{K::Visibility, {}}; break;
        case Mode::Inheritance: loc.block = BlockLabel{K::Inheritance, {}}; break;
        case Mode::None: loc.block = BlockLabel{K::ClassBody, {}}; break;
        }
    } else {
        loc.block = BlockLabel{K::TopLevel, {}};
    }
    return loc;
}

} // namespace ozcheck
