#include "ozcheck/parser.hpp"

#include <sstream>
#include <stdexcept>

namespace ozcheck {

std::vector<InputSymbol> map_terminals(const TokenStream& ts, const Grammar& g)
{
    std::vector<InputSymbol> out;
    out.reserve(ts.tokens.size());
    for (const Token& t : ts.tokens)
        out.push_back(InputSymbol{terminal_of(t, g), t});
    return out;
}

namespace {

ParseOutcome run(std::span<const InputSymbol> input, const ParseTable& table, const Grammar& g,
                 std::vector<TraceStep>* trace)
{
    if (input.empty() || input.back().terminal != g.end_marker())
        throw std::invalid_argument("parser input must end with the end marker");

    std::vector<StackEntry> stack{{StackEntry::Kind::Bottom, 0}, {StackEntry::Kind::State, 0}};
    std::vector<ParseNode> nodes;
    std::size_t pos = 0;

    auto record = [&](TraceAction a) {
        if (trace)
            trace->push_back(TraceStep{stack, pos, a});
    };

    for (;;) {
        const int state = stack.back().value;
        const InputSymbol& lookahead = input[pos];
        const Action a = table.action(state, g.column(lookahead.terminal));

        switch (a.kind) {
        case Action::Kind::Shift:
            record({TraceAction::Kind::Shift, a.target, state, lookahead.terminal});
            stack.push_back({StackEntry::Kind::Symbol, lookahead.terminal.value});
            stack.push_back({StackEntry::Kind::State, a.target});
            nodes.push_back(ParseNode{lookahead.terminal, -1, lookahead.token, {}});
            ++pos;
            break;

        case Action::Kind::Reduce: {
            record({TraceAction::Kind::Reduce, a.target, state, {}});
            const Production& p = g.production(a.target);
            const std::size_t n = p.body.size();
            stack.resize(stack.size() - 2 * n);
            ParseNode node{p.head, p.index, std::nullopt, {}};
            node.children.assign(std::make_move_iterator(nodes.end() - static_cast<long>(n)),
                                 std::make_move_iterator(nodes.end()));
            nodes.resize(nodes.size() - n);
            nodes.push_back(std::move(node));

            const int exposed = stack.back().value;
            stack.push_back({StackEntry::Kind::Symbol, p.head.value});
            auto target = table.go_to(exposed, g.column(p.head));
            if (!target)
                throw std::logic_error("parse table has no goto for a completed reduction");
            record({TraceAction::Kind::Goto, *target, exposed, p.head});
            stack.push_back({StackEntry::Kind::State, *target});
            break;
        }

        case Action::Kind::Accept:
            record({TraceAction::Kind::Accept, 0, state, {}});
            return std::move(nodes.back());

        case Action::Kind::Error: {
            record({TraceAction::Kind::Error, 0, state, {}});
            std::vector<Token> tokens;
            tokens.reserve(input.size());
            for (const auto& in : input)
                tokens.push_back(in.token);
            Localization loc = locate(tokens, pos);

            SyntaxError err{lookahead.token, loc.class_name, loc.block, {}};
            for (SymbolId t : g.terminals())
                if (table.action(state, g.column(t)).kind != Action::Kind::Error)
                    err.expected.push_back(g.name(t));
            return err;
        }
        }
    }
}

std::string production_text(const Production& p, const Grammar& g)
{
    std::string out = g.name(p.head) + " =";
    if (p.body.empty())
        out += " ε";
    for (SymbolId s : p.body)
        out += " " + g.name(s);
    return out;
}

} // namespace

ParseOutcome parse(std::span<const InputSymbol> input, const ParseTable& table, const Grammar& g)
{
    return run(input, table, g, nullptr);
}

TracedParse parse_with_trace(std::span<const InputSymbol> input, const ParseTable& table,
                             const Grammar& g)
{
    TracedParse out{SyntaxError{}, {}};
    out.outcome = run(input, table, g, &out.trace);
    return out;
}

std::string render_action(const TraceAction& a, const Grammar& g)
{
    switch (a.kind) {
    case TraceAction::Kind::Shift: return "d" + std::to_string(a.target);
    case TraceAction::Kind::Reduce:
        return "r" + std::to_string(a.target) + ": " + production_text(g.production(a.target), g);
    case TraceAction::Kind::Goto:
        return "goto [" + std::to_string(a.from_state) + "] " + g.name(a.symbol) + " -> [" +
               std::to_string(a.target) + "]";
    case TraceAction::Kind::Accept: return "acc";
    case TraceAction::Kind::Error: return "error";
    }
    return "?";
}

std::string render_trace(const std::vector<TraceStep>& trace, std::span<const InputSymbol> input,
                         const Grammar& g)
{
    std::ostringstream os;
    os << "pile\tentrée\taction\n";
    for (const TraceStep& step : trace) {
        bool first = true;
        for (const StackEntry& e : step.stack) {
            if (!first)
                os << ' ';
            first = false;
            switch (e.kind) {
            case StackEntry::Kind::Bottom: os << '$'; break;
            case StackEntry::Kind::State: os << '[' << e.value << ']'; break;
            case StackEntry::Kind::Symbol: os << g.name(SymbolId{e.value}); break;
            }
        }
        os << '\t';
        for (std::size_t i = step.input_position; i < input.size(); ++i) {
            if (i > step.input_position)
                os << ' ';
            os << (input[i].terminal == g.end_marker() ? std::string("$") : input[i].token.lexeme);
        }
        os << '\t' << render_action(step.action, g) << '\n';
    }
    return os.str();
}

} // namespace ozcheck
