#include "ozcheck/grammar.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace ozcheck {

GrammarFormatError::GrammarFormatError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

struct Word {
    std::string text;
    bool quoted = false;
};

std::vector<Word> split_line(std::string_view line, int line_no)
{
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '"') {
            Word w{"", true};
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        w.text += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    closed = true;
                    break;
                }
                w.text += line[i++];
            }
            if (!closed)
                throw GrammarFormatError(line_no, "unterminated quoted symbol");
            if (w.text.empty())
                throw GrammarFormatError(line_no, "empty quoted symbol");
            out.push_back(std::move(w));
        } else {
            Word w;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
                   line[i] != '"' && line[i] != '#')
                w.text += line[i++];
            out.push_back(std::move(w));
        }
    }
    return out;
}

bool plain_identifier(const std::string& s)
{
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
            return false;
    return !s.empty();
}

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

Grammar grammar_from_text(std::string_view text)
{
    struct Line {
        int number;
        Word head;
        std::vector<Word> body;
    };
    std::vector<Line> lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto words = split_line(raw, number);
        if (words.empty())
            continue;
        if (words.size() < 2 || words[1].quoted || words[1].text != "->")
            throw GrammarFormatError(number, "expected 'Head -> symbols'");
        if (words[0].quoted)
            throw GrammarFormatError(number, "a production head cannot be a quoted terminal");
        if (words[0].text == "$")
            throw GrammarFormatError(number, "'$' is reserved");
        lines.push_back(Line{number, words[0], {words.begin() + 2, words.end()}});
    }
    if (lines.empty())
        throw GrammarFormatError(number, "grammar has no productions");

    std::set<std::string> heads;
    for (const auto& l : lines)
        heads.insert(l.head.text);

    GrammarBuilder b;
    auto symbol = [&](const Word& w, int line_no) {
        if (w.text == "$")
            throw GrammarFormatError(line_no, "'$' is reserved");
        if (heads.count(w.text)) {
            if (w.quoted)
                throw GrammarFormatError(line_no, "quoted symbol '" + w.text + "' is also a production head");
            return b.nonterminal(w.text);
        }
        return b.terminal(w.text);
    };

    for (const auto& l : lines) {
        SymbolId head = b.nonterminal(l.head.text);
        std::vector<SymbolId> body;
        for (const auto& w : l.body)
            body.push_back(symbol(w, l.number));
        b.add(head, std::move(body));
    }
    try {
        return b.build(b.nonterminal(lines.front().head.text));
    } catch (const GrammarError& e) {
        throw GrammarFormatError(lines.front().number, e.what());
    }
}

std::string grammar_to_text(const Grammar& g)
{
    std::ostringstream os;
    for (const Production& p : g.productions()) {
        if (p.index == 0)
            continue;
        os << g.name(p.head) << " ->";
        for (SymbolId s : p.body) {
            const std::string& n = g.name(s);
            os << ' ' << (g.is_terminal(s) && !plain_identifier(n) ? quote(n) : n);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace ozcheck
