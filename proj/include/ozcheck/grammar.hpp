#pragma once

// Context-free grammars and SLR(1) table construction.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ozcheck {

struct SymbolId {
    int value = -1;
    friend auto operator<=>(SymbolId, SymbolId) = default;
};

enum class SymbolKind { Terminal, Nonterminal };

struct SymbolInfo {
    std::string name;
    SymbolKind kind;
    int column = -1; // index among terminals or among nonterminals; -1 for the augmented start
};

struct Production {
    int index = 0;
    SymbolId head;
    std::vector<SymbolId> body; // empty body is an epsilon production
};

class GrammarError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An augmented grammar. Production 0 is always `S' -> S`; user productions
/// keep the order in which they were added, numbered from 1.
class Grammar {
public:
    const std::vector<SymbolInfo>& symbols() const { return symbols_; }
    const std::vector<Production>& productions() const { return productions_; }
    const Production& production(int index) const { return productions_.at(index); }

    SymbolId start() const { return start_; }
    SymbolId augmented_start() const { return augmented_start_; }
    SymbolId end_marker() const { return end_marker_; }

    bool is_terminal(SymbolId s) const { return info(s).kind == SymbolKind::Terminal; }
    bool is_nonterminal(SymbolId s) const { return info(s).kind == SymbolKind::Nonterminal; }
    const std::string& name(SymbolId s) const { return info(s).name; }
    int column(SymbolId s) const { return info(s).column; }
    const SymbolInfo& info(SymbolId s) const { return symbols_.at(static_cast<std::size_t>(s.value)); }

    std::optional<SymbolId> find(std::string_view name) const;

    /// Terminals in column order; the end marker is the last one.
    const std::vector<SymbolId>& terminals() const { return terminals_; }
    /// Nonterminals in column order, excluding the augmented start.
    const std::vector<SymbolId>& nonterminals() const { return nonterminals_; }

    /// Indices of the productions whose head is `head`, in order.
    const std::vector<int>& productions_of(SymbolId head) const;

private:
    friend class GrammarBuilder;

    std::vector<SymbolInfo> symbols_;
    std::vector<Production> productions_;
    std::vector<SymbolId> terminals_;
    std::vector<SymbolId> nonterminals_;
    std::vector<std::vector<int>> by_head_;
    std::map<std::string, SymbolId, std::less<>> by_name_;
    SymbolId start_;
    SymbolId augmented_start_;
    SymbolId end_marker_;
};

class GrammarBuilder {
public:
    /// Registers a terminal, or returns the existing one of that name.
    SymbolId terminal(std::string_view name);
    SymbolId nonterminal(std::string_view name);

    GrammarBuilder& add(SymbolId head, std::vector<SymbolId> body);

    /// Validates and augments. Throws GrammarError when a nonterminal has no
    /// production or when `$` was used as a user symbol.
    Grammar build(SymbolId start) const;

private:
    SymbolId intern(std::string_view name, SymbolKind kind);

    std::vector<SymbolInfo> symbols_;
    std::vector<std::pair<SymbolId, std::vector<SymbolId>>> productions_;
};

// ---------------------------------------------------------------------------
// FIRST / FOLLOW

struct FirstEntry {
    std::set<SymbolId> terminals;
    bool nullable = false;
    friend bool operator==(const FirstEntry&, const FirstEntry&) = default;
};

class FirstSets {
public:
    explicit FirstSets(std::vector<FirstEntry> entries) : entries_(std::move(entries)) {}
    const FirstEntry& operator[](SymbolId s) const { return entries_.at(static_cast<std::size_t>(s.value)); }
    FirstEntry of_sequence(std::span<const SymbolId> seq) const;
    friend bool operator==(const FirstSets&, const FirstSets&) = default;

private:
    std::vector<FirstEntry> entries_;
};

class FollowSets {
public:
    explicit FollowSets(std::vector<std::set<SymbolId>> sets) : sets_(std::move(sets)) {}
    /// Empty for terminals.
    const std::set<SymbolId>& operator[](SymbolId s) const { return sets_.at(static_cast<std::size_t>(s.value)); }
    friend bool operator==(const FollowSets&, const FollowSets&) = default;

private:
    std::vector<std::set<SymbolId>> sets_;
};

FirstSets compute_first(const Grammar& g);
FollowSets compute_follow(const Grammar& g, const FirstSets& first);

// ---------------------------------------------------------------------------
// LR(0) items

struct Item {
    int production = 0;
    int dot = 0;
    friend auto operator<=>(const Item&, const Item&) = default;
};

/// Sorted and deduplicated.
using ItemSet = std::vector<Item>;

ItemSet closure(std::span<const Item> items, const Grammar& g);
ItemSet goto_set(std::span<const Item> items, SymbolId x, const Grammar& g);

struct ItemSetCollection {
    std::vector<ItemSet> states;
    std::map<std::pair<int, SymbolId>, int> transitions;

    std::optional<int> target(int state, SymbolId x) const;
};

/// States are numbered in breadth-first discovery order, expanding symbols in
/// registration order, so the numbering is reproducible.
ItemSetCollection canonical_collection(const Grammar& g);

std::string to_string(const Item& item, const Grammar& g);

// ---------------------------------------------------------------------------
// SLR(1) table

struct Action {
    enum class Kind : std::uint8_t { Error, Shift, Reduce, Accept };
    Kind kind = Kind::Error;
    int target = 0; // state for Shift, production index for Reduce

    static Action shift(int state) { return {Kind::Shift, state}; }
    static Action reduce(int production) { return {Kind::Reduce, production}; }
    static Action accept() { return {Kind::Accept, 0}; }

    friend bool operator==(const Action&, const Action&) = default;
};

std::string to_string(const Action& a);

/// Dense ACTION/GOTO arrays. Immutable after construction.
class ParseTable {
public:
    ParseTable(int n_states, int n_terminals, int n_nonterminals);

    Action action(int state, int terminal_column) const;
    std::optional<int> go_to(int state, int nonterminal_column) const;

    int n_states() const { return n_states_; }
    int n_terminals() const { return n_terminals_; }
    int n_nonterminals() const { return n_nonterminals_; }

    void set_action(int state, int terminal_column, Action a);
    void set_goto(int state, int nonterminal_column, int target);

    friend bool operator==(const ParseTable&, const ParseTable&) = default;

private:
    int n_states_;
    int n_terminals_;
    int n_nonterminals_;
    std::vector<Action> actions_;
    std::vector<int> gotos_;
};

struct Conflict {
    int state = 0;
    SymbolId terminal;
    std::vector<Action> actions;
    std::vector<std::vector<Item>> causes; // causes[i] produced actions[i]
};

struct ConflictReport {
    std::vector<Conflict> conflicts;
};

std::variant<ParseTable, ConflictReport> build_table(const Grammar& g);

/// Table dump: a `#` header line with production count and dimensions, then
/// tab-separated rows with `sN` / `rN` / `acc` / `.` action cells and plain
/// state numbers (or `.`) in the goto columns.
std::string table_to_tsv(const ParseTable& t, const Grammar& g);
std::string table_dimensions(const ParseTable& t, const Grammar& g);
std::string format_conflicts(const ConflictReport& r, const Grammar& g);

// ---------------------------------------------------------------------------
// Interchange format

class GrammarFormatError : public std::runtime_error {
public:
    GrammarFormatError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// One production per line, `Head -> sym sym ...`, `#` comments. Symbols that
/// head a production are nonterminals; quoted symbols and all others are
/// terminals. Inside quotes a doubled `""` stands for one quote character.
/// The first head is the start symbol.
Grammar grammar_from_text(std::string_view text);
std::string grammar_to_text(const Grammar& g);

} // namespace ozcheck
