#include "ozcheck/grammar.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ozcheck {

// ----------------------------------------------------------------------------
// Grammar

std::optional<SymbolId> Grammar::find(std::string_view name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

const std::vector<int>& Grammar::productions_of(SymbolId head) const
{
    return by_head_.at(static_cast<std::size_t>(head.value));
}

SymbolId GrammarBuilder::intern(std::string_view name, SymbolKind kind)
{
    if (name.empty())
        throw GrammarError("symbol names must be non-empty");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].name == name) {
            if (symbols_[i].kind != kind)
                throw GrammarError("symbol '" + std::string(name) +
                                   "' registered both as terminal and nonterminal");
            return SymbolId{static_cast<int>(i)};
        }
    }
    symbols_.push_back(SymbolInfo{std::string(name), kind, -1});
    return SymbolId{static_cast<int>(symbols_.size() - 1)};
}

SymbolId GrammarBuilder::terminal(std::string_view name)
{
    return intern(name, SymbolKind::Terminal);
}

SymbolId GrammarBuilder::nonterminal(std::string_view name)
{
    return intern(name, SymbolKind::Nonterminal);
}

GrammarBuilder& GrammarBuilder::add(SymbolId head, std::vector<SymbolId> body)
{
    auto valid = [&](SymbolId s) {
        return s.value >= 0 && static_cast<std::size_t>(s.value) < symbols_.size();
    };
    if (!valid(head) || symbols_[head.value].kind != SymbolKind::Nonterminal)
        throw GrammarError("production head must be a registered nonterminal");
    for (SymbolId s : body)
        if (!valid(s))
            throw GrammarError("production body uses an unregistered symbol");
    productions_.emplace_back(head, std::move(body));
    return *this;
}

Grammar GrammarBuilder::build(SymbolId start) const
{
    if (start.value < 0 || static_cast<std::size_t>(start.value) >= symbols_.size() ||
        symbols_[start.value].kind != SymbolKind::Nonterminal)
        throw GrammarError("start symbol must be a registered nonterminal");

    Grammar g;
    g.symbols_ = symbols_;
    for (const auto& s : g.symbols_)
        if (s.name == "$")
            throw GrammarError("'$' is reserved for the end marker");

    std::string aug_name = g.symbols_[start.value].name + "'";
    auto taken = [&](const std::string& n) {
        return std::any_of(g.symbols_.begin(), g.symbols_.end(),
                           [&](const SymbolInfo& s) { return s.name == n; });
    };
    while (taken(aug_name))
        aug_name += "'";

    g.end_marker_ = SymbolId{static_cast<int>(g.symbols_.size())};
    g.symbols_.push_back(SymbolInfo{"$", SymbolKind::Terminal, -1});
    g.augmented_start_ = SymbolId{static_cast<int>(g.symbols_.size())};
    g.symbols_.push_back(SymbolInfo{aug_name, SymbolKind::Nonterminal, -1});
    g.start_ = start;

    for (std::size_t i = 0; i < g.symbols_.size(); ++i) {
        SymbolId id{static_cast<int>(i)};
        SymbolInfo& info = g.symbols_[i];
        if (info.kind == SymbolKind::Terminal && id != g.end_marker_) {
            info.column = static_cast<int>(g.terminals_.size());
            g.terminals_.push_back(id);
        } else if (info.kind == SymbolKind::Nonterminal && id != g.augmented_start_) {
            info.column = static_cast<int>(g.nonterminals_.size());
            g.nonterminals_.push_back(id);
        }
        g.by_name_.emplace(info.name, id);
    }
    g.symbols_[g.end_marker_.value].column = static_cast<int>(g.terminals_.size());
    g.terminals_.push_back(g.end_marker_);

    g.productions_.push_back(Production{0, g.augmented_start_, {start}});
    for (const auto& [head, body] : productions_)
        g.productions_.push_back(Production{static_cast<int>(g.productions_.size()), head, body});

    g.by_head_.assign(g.symbols_.size(), {});
    for (const auto& p : g.productions_)
        g.by_head_[p.head.value].push_back(p.index);

    for (SymbolId nt : g.nonterminals_)
        if (g.by_head_[nt.value].empty())
            throw GrammarError("nonterminal '" + g.name(nt) + "' has no production");
    return g;
}

// ----------------------------------------------------------------------------
// FIRST / FOLLOW

FirstEntry FirstSets::of_sequence(std::span<const SymbolId> seq) const
{
    FirstEntry out;
    for (SymbolId s : seq) {
        const FirstEntry& e = (*this)[s];
        out.terminals.insert(e.terminals.begin(), e.terminals.end());
        if (!e.nullable)
            return out;
    }
    out.nullable = true;
    return out;
}

FirstSets compute_first(const Grammar& g)
{
    std::vector<FirstEntry> entries(g.symbols().size());
    for (SymbolId t : g.terminals())
        entries[t.value].terminals.insert(t);

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions()) {
            FirstEntry& head = entries[p.head.value];
            bool all_nullable = true;
            for (SymbolId s : p.body) {
                const FirstEntry& e = entries[s.value];
                for (SymbolId t : e.terminals)
                    changed |= head.terminals.insert(t).second;
                if (!e.nullable) {
                    all_nullable = false;
                    break;
                }
            }
            if (all_nullable && !head.nullable) {
                head.nullable = true;
                changed = true;
            }
        }
    }
    return FirstSets(std::move(entries));
}

FollowSets compute_follow(const Grammar& g, const FirstSets& first)
{
    std::vector<std::set<SymbolId>> follow(g.symbols().size());
    follow[g.start().value].insert(g.end_marker());
    follow[g.augmented_start().value].insert(g.end_marker());

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions()) {
            for (std::size_t i = 0; i < p.body.size(); ++i) {
                SymbolId b = p.body[i];
                if (g.is_terminal(b))
                    continue;
                auto rest = std::span<const SymbolId>(p.body).subspan(i + 1);
                FirstEntry fr = first.of_sequence(rest);
                for (SymbolId t : fr.terminals)
                    changed |= follow[b.value].insert(t).second;
                if (fr.nullable)
                    for (SymbolId t : follow[p.head.value])
                        changed |= follow[b.value].insert(t).second;
            }
        }
    }
    return FollowSets(std::move(follow));
}

// ----------------------------------------------------------------------------
// Items

namespace {

std::optional<SymbolId> after_dot(const Item& item, const Grammar& g)
{
    const Production& p = g.production(item.production);
    if (static_cast<std::size_t>(item.dot) >= p.body.size())
        return std::nullopt;
    return p.body[item.dot];
}

} // namespace

ItemSet closure(std::span<const Item> items, const Grammar& g)
{
    std::set<Item> out(items.begin(), items.end());
    std::vector<Item> work(items.begin(), items.end());
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        auto next = after_dot(it, g);
        if (!next || g.is_terminal(*next))
            continue;
        for (int p : g.productions_of(*next)) {
            Item fresh{p, 0};
            if (out.insert(fresh).second)
                work.push_back(fresh);
        }
    }
    return ItemSet(out.begin(), out.end());
}

ItemSet goto_set(std::span<const Item> items, SymbolId x, const Grammar& g)
{
    std::vector<Item> kernel;
    for (const Item& it : items) {
        auto next = after_dot(it, g);
        if (next && *next == x)
            kernel.push_back(Item{it.production, it.dot + 1});
    }
    return closure(kernel, g);
}

std::optional<int> ItemSetCollection::target(int state, SymbolId x) const
{
    auto it = transitions.find({state, x});
    if (it == transitions.end())
        return std::nullopt;
    return it->second;
}

ItemSetCollection canonical_collection(const Grammar& g)
{
    ItemSetCollection c;
    std::map<ItemSet, int> index;

    Item start{0, 0};
    c.states.push_back(closure(std::span<const Item>(&start, 1), g));
    index.emplace(c.states.front(), 0);

    std::deque<int> queue{0};
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (std::size_t sym = 0; sym < g.symbols().size(); ++sym) {
            SymbolId x{static_cast<int>(sym)};
            ItemSet next = goto_set(c.states[s], x, g);
            if (next.empty())
                continue;
            auto [it, inserted] = index.emplace(next, static_cast<int>(c.states.size()));
            if (inserted) {
                c.states.push_back(std::move(next));
                queue.push_back(it->second);
            }
            c.transitions.emplace(std::make_pair(s, x), it->second);
        }
    }
    return c;
}

std::string to_string(const Item& item, const Grammar& g)
{
    const Production& p = g.production(item.production);
    std::string out = g.name(p.head) + " ->";
    for (std::size_t i = 0; i <= p.body.size(); ++i) {
        if (static_cast<int>(i) == item.dot)
            out += " .";
        if (i < p.body.size())
            out += " " + g.name(p.body[i]);
    }
    return out;
}

// ----------------------------------------------------------------------------
// Table

std::string to_string(const Action& a)
{
    switch (a.kind) {
    case Action::Kind::Shift: return "s" + std::to_string(a.target);
    case Action::Kind::Reduce: return "r" + std::to_string(a.target);
    case Action::Kind::Accept: return "acc";
    case Action::Kind::Error: break;
    }
    return ".";
}

ParseTable::ParseTable(int n_states, int n_terminals, int n_nonterminals)
    : n_states_(n_states), n_terminals_(n_terminals), n_nonterminals_(n_nonterminals),
      actions_(static_cast<std::size_t>(n_states) * n_terminals),
      gotos_(static_cast<std::size_t>(n_states) * n_nonterminals, -1)
{
}

Action ParseTable::action(int state, int terminal_column) const
{
    return actions_.at(static_cast<std::size_t>(state) * n_terminals_ + terminal_column);
}

std::optional<int> ParseTable::go_to(int state, int nonterminal_column) const
{
    if (nonterminal_column < 0)
        return std::nullopt;
    int t = gotos_.at(static_cast<std::size_t>(state) * n_nonterminals_ + nonterminal_column);
    if (t < 0)
        return std::nullopt;
    return t;
}

void ParseTable::set_action(int state, int terminal_column, Action a)
{
    actions_.at(static_cast<std::size_t>(state) * n_terminals_ + terminal_column) = a;
}

void ParseTable::set_goto(int state, int nonterminal_column, int target)
{
    gotos_.at(static_cast<std::size_t>(state) * n_nonterminals_ + nonterminal_column) = target;
}

std::variant<ParseTable, ConflictReport> build_table(const Grammar& g)
{
    const FirstSets first = compute_first(g);
    const FollowSets follow = compute_follow(g, first);
    const ItemSetCollection c = canonical_collection(g);

    const int n_states = static_cast<int>(c.states.size());
    const int n_terms = static_cast<int>(g.terminals().size());

    // Every candidate action per cell, with the items that proposed it.
    struct Candidate {
        Action action;
        std::vector<Item> items;
    };
    std::vector<std::vector<Candidate>> cells(static_cast<std::size_t>(n_states) * n_terms);
    auto propose = [&](int state, SymbolId t, Action a, const Item& cause) {
        auto& cell = cells[static_cast<std::size_t>(state) * n_terms + g.column(t)];
        for (auto& cand : cell) {
            if (cand.action == a) {
                cand.items.push_back(cause);
                return;
            }
        }
        cell.push_back(Candidate{a, {cause}});
    };

    ParseTable table(n_states, n_terms, static_cast<int>(g.nonterminals().size()));
    for (int s = 0; s < n_states; ++s) {
        for (const Item& it : c.states[s]) {
            const Production& p = g.production(it.production);
            if (static_cast<std::size_t>(it.dot) < p.body.size()) {
                SymbolId x = p.body[it.dot];
                if (g.is_terminal(x))
                    propose(s, x, Action::shift(*c.target(s, x)), it);
            } else if (p.index == 0) {
                propose(s, g.end_marker(), Action::accept(), it);
            } else {
                for (SymbolId t : follow[p.head])
                    propose(s, t, Action::reduce(p.index), it);
            }
        }
        for (SymbolId nt : g.nonterminals())
            if (auto t = c.target(s, nt))
                table.set_goto(s, g.column(nt), *t);
    }

    ConflictReport report;
    for (int s = 0; s < n_states; ++s) {
        for (int col = 0; col < n_terms; ++col) {
            const auto& cell = cells[static_cast<std::size_t>(s) * n_terms + col];
            if (cell.size() == 1) {
                table.set_action(s, col, cell.front().action);
            } else if (cell.size() > 1) {
                Conflict conflict{s, g.terminals()[col], {}, {}};
                for (const auto& cand : cell) {
                    conflict.actions.push_back(cand.action);
                    conflict.causes.push_back(cand.items);
                }
                report.conflicts.push_back(std::move(conflict));
            }
        }
    }
    if (!report.conflicts.empty())
        return report;
    return table;
}

std::string table_dimensions(const ParseTable& t, const Grammar& g)
{
    std::ostringstream os;
    os << "productions: " << g.productions().size() - 1
       << "  table: " << t.n_states() << "x" << (t.n_terminals() + t.n_nonterminals())
       << " (" << t.n_states() << " states, " << t.n_terminals() << " terminals, "
       << t.n_nonterminals() << " nonterminals)";
    return os.str();
}

std::string table_to_tsv(const ParseTable& t, const Grammar& g)
{
    std::ostringstream os;
    os << "# " << table_dimensions(t, g) << "\n";
    os << "state";
    for (SymbolId s : g.terminals())
        os << '\t' << g.name(s);
    for (SymbolId s : g.nonterminals())
        os << '\t' << g.name(s);
    os << '\n';
    for (int s = 0; s < t.n_states(); ++s) {
        os << s;
        for (int col = 0; col < t.n_terminals(); ++col)
            os << '\t' << to_string(t.action(s, col));
        for (int col = 0; col < t.n_nonterminals(); ++col) {
            auto target = t.go_to(s, col);
            os << '\t';
            if (target)
                os << *target;
            else
                os << '.';
        }
        os << '\n';
    }
    return os.str();
}

std::string format_conflicts(const ConflictReport& r, const Grammar& g)
{
    std::ostringstream os;
    for (const Conflict& c : r.conflicts) {
        os << "state " << c.state << " on " << g.name(c.terminal) << ":\n";
        for (std::size_t i = 0; i < c.actions.size(); ++i) {
            os << "  " << to_string(c.actions[i]) << " from";
            for (const Item& it : c.causes[i])
                os << " [" << to_string(it, g) << "]";
            os << '\n';
        }
    }
    return os.str();
}

} // namespace ozcheck
