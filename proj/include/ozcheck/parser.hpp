#pragma once

// Table-driven shift-reduce parsing with optional step tracing.

#include "ozcheck/grammar.hpp"
#include "ozcheck/lexer.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ozcheck {

/// A token together with the grammar terminal it stands for.
struct InputSymbol {
    SymbolId terminal;
    Token token;
};

/// Maps every token with terminal_of(); throws UnknownToken.
std::vector<InputSymbol> map_terminals(const TokenStream& ts, const Grammar& g);

struct ParseNode {
    SymbolId symbol;
    int production = -1;        // reducing production for internal nodes
    std::optional<Token> token; // set for leaves
    std::vector<ParseNode> children;
};
using ParseTree = ParseNode;

struct SyntaxError {
    Token offending;
    std::optional<std::string> enclosing_class;
    BlockLabel enclosing_block;
    std::vector<std::string> expected; // terminals with a non-error action in the failing state
};

using ParseOutcome = std::variant<ParseTree, SyntaxError>;

/// Stack entry of the automaton: the bottom `$` marker, a state, or a symbol.
struct StackEntry {
    enum class Kind { Bottom, State, Symbol };
    Kind kind;
    int value = 0; // state number, or symbol id
};

struct TraceAction {
    enum class Kind { Shift, Reduce, Goto, Accept, Error };
    Kind kind;
    int target = 0;     // shifted-to state, reduced production, or goto target
    int from_state = 0; // for Goto: the exposed state
    SymbolId symbol;    // for Goto: the nonterminal just pushed
};

struct TraceStep {
    std::vector<StackEntry> stack; // snapshot when the action is taken
    std::size_t input_position = 0; // index of the lookahead
    TraceAction action;
};

struct TracedParse {
    ParseOutcome outcome;
    std::vector<TraceStep> trace;
};

/// `input` must end with the end marker.
ParseOutcome parse(std::span<const InputSymbol> input, const ParseTable& table, const Grammar& g);
TracedParse parse_with_trace(std::span<const InputSymbol> input, const ParseTable& table,
                             const Grammar& g);

/// Three tab-separated columns `pile`, `entrée`, `action` with a header row.
/// States are printed in brackets.
std::string render_trace(const std::vector<TraceStep>& trace, std::span<const InputSymbol> input,
                         const Grammar& g);
std::string render_action(const TraceAction& a, const Grammar& g);

} // namespace ozcheck
