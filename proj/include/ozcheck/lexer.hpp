#pragma once

// Tokenizer for LaTeX-encoded Object Z. Lexical units are separated by
// whitespace; each unit is classified on its own.

#include "ozcheck/grammar.hpp"
#include "ozcheck/location.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ozcheck {

enum class TokenKind {
    EnvBegin,
    EnvEnd,
    Command,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Word,
    Number,
    Operator,
    LineSep,
    EndMarker,
};

std::string_view to_string(TokenKind k);

struct Token {
    TokenKind kind = TokenKind::EndMarker;
    std::string lexeme;
    std::string name;       // environment name for EnvBegin/EnvEnd, command name without '\' for Command
    std::string decoration; // trailing ', ?, ! of a Word
    SourcePos pos;
};

struct TokenStream {
    std::vector<Token> tokens; // ends with exactly one EndMarker
};

class LexError : public std::runtime_error {
public:
    LexError(SourcePos pos, std::string unit, const std::string& what);
    const SourcePos& pos() const { return pos_; }
    const std::string& unit() const { return unit_; }

private:
    SourcePos pos_;
    std::string unit_;
};

struct LexOptions {
    /// Additionally split `{ } [ ] ( ) , :` away from the units they are glued to.
    bool lenient = false;
};

/// Lines starting with `%` are skipped. When the text contains
/// `\begin{document}`, everything up to it and from `\end{document}` on is
/// ignored.
TokenStream tokenize(std::string_view source, LexOptions options = {});

/// One token per line: `index<TAB>kind<TAB>lexeme<TAB>line:col`.
std::string dump_tokens(const TokenStream& ts);

class UnknownToken : public std::runtime_error {
public:
    explicit UnknownToken(Token t);
    const Token& token() const { return token_; }

private:
    Token token_;
};

/// Grammar terminal for a token. Environments and commands map to the
/// terminal spelled like them (`\begin{class}`, `\Delta`); a word maps to the
/// terminal of the same name when the grammar has one, otherwise to `Word`;
/// numbers map to `Number`; the end marker to `$`.
SymbolId terminal_of(const Token& t, const Grammar& g);

/// Class and block enclosing the token at `index`, from the environment
/// nesting of the tokens before it.
struct Localization {
    std::optional<std::string> class_name;
    BlockLabel block;
};
Localization locate(std::span<const Token> tokens, std::size_t index);

} // namespace ozcheck
