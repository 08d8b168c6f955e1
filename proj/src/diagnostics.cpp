#include "ozcheck/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ozcheck {

namespace {

constexpr std::array<std::pair<Code, std::string_view>, 9> code_names{{
    {Code::Syn001, "OZ-SYN-001"},
    {Code::Sem101, "OZ-SEM-101"},
    {Code::Sem102, "OZ-SEM-102"},
    {Code::Sem103, "OZ-SEM-103"},
    {Code::Sem104, "OZ-SEM-104"},
    {Code::Sem105, "OZ-SEM-105"},
    {Code::Inh201, "OZ-INH-201"},
    {Code::Inh202, "OZ-INH-202"},
    {Code::Lex001, "OZ-LEX-001"},
}};

std::string block_fr(const BlockLabel& b)
{
    switch (b.kind) {
    case BlockLabel::Kind::TopLevel: return "hors classe";
    case BlockLabel::Kind::ClassHeading: return "en-tête de classe";
    case BlockLabel::Kind::ClassBody: return "corps de classe";
    case BlockLabel::Kind::Visibility: return "liste de visibilité";
    case BlockLabel::Kind::Inheritance: return "liste d'héritage";
    case BlockLabel::Kind::LocalDefinitions: return "définitions locales";
    case BlockLabel::Kind::State: return "schéma d'état";
    case BlockLabel::Kind::Init: return "schéma d'état initial";
    case BlockLabel::Kind::Operation: return "opération \"" + b.operation + "\"";
    }
    return {};
}

std::string message_fr(const Diagnostic& d)
{
    const std::string s = "\"" + d.symbol + "\"";
    switch (d.code) {
    case Code::Syn001: return "syntaxe incorrecte";
    case Code::Sem101: return "déclaration circulaire, la variable " + s + " du même schéma sert de type";
    case Code::Sem102: return "le type " + s + " n'est pas défini";
    case Code::Sem103: return "la variable " + s + " est déclarée plusieurs fois";
    case Code::Sem104: return "la variable " + s + " porte le nom d'un type";
    case Code::Sem105: return s + " n'est pas une variable d'état";
    case Code::Inh201: return "la classe héritée " + s + " n'est pas définie";
    case Code::Inh202: return "héritage cyclique par " + s;
    case Code::Lex001: return "unité lexicale non reconnue " + s;
    }
    return {};
}

bool needs_escape(std::string_view f)
{
    std::size_t i = 0;
    while (i < f.size() && f[i] == '\\')
        ++i;
    return i + 1 == f.size() && f[i] == '-';
}

std::string field_out(const std::string& f)
{
    if (f.empty())
        return "-";
    if (needs_escape(f))
        return "\\" + f;
    return f;
}

std::string field_in(std::string_view f)
{
    if (f == "-")
        return {};
    if (!f.empty() && f.front() == '\\' && needs_escape(f))
        f.remove_prefix(1);
    return std::string(f);
}

int to_int(std::string_view s, std::string_view line)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad position in diagnostic line: " + std::string(line));
    return v;
}

} // namespace

std::string_view code_name(Code c)
{
    for (const auto& [code, name] : code_names)
        if (code == c)
            return name;
    return "?";
}

std::optional<Code> parse_code(std::string_view s)
{
    for (const auto& [code, name] : code_names)
        if (name == s)
            return code;
    return std::nullopt;
}

std::string render_human(const Diagnostic& d, Locale locale)
{
    const bool fr = locale == Locale::Fr;
    std::ostringstream os;
    os << (fr ? "erreur[" : "error[") << code_name(d.code) << ']';
    if (d.class_name)
        os << (fr ? " classe \"" : " class \"") << *d.class_name << '"';
    if (d.block) {
        if (d.class_name)
            os << ',';
        os << (fr ? " bloc " : " block ") << (fr ? block_fr(*d.block) : describe(*d.block));
    }
    os << ": " << (fr ? message_fr(d) : d.message) << " (";
    if (!d.symbol.empty())
        os << (fr ? "symbole \"" : "caused by \"") << d.symbol << "\", ";
    os << (fr ? "ligne " : "line ") << d.pos.line << " col " << d.pos.column << ')';
    return os.str();
}

bool diagnostic_before(const Diagnostic& a, const Diagnostic& b)
{
    return std::tie(a.pos.line, a.pos.column, a.code, a.symbol) <
           std::tie(b.pos.line, b.pos.column, b.code, b.symbol);
}

void sort_diagnostics(std::vector<Diagnostic>& ds)
{
    std::stable_sort(ds.begin(), ds.end(), diagnostic_before);
}

std::string render_machine(const std::vector<Diagnostic>& ds)
{
    std::ostringstream os;
    for (const Diagnostic& d : ds) {
        os << code_name(d.code) << '\t' << field_out(d.class_name.value_or(""))
           << '\t' << (d.block ? to_string(*d.block) : "-") << '\t' << field_out(d.symbol)
           << '\t' << d.pos.line << ':' << d.pos.column << '\t' << field_out(d.message) << '\n';
    }
    return os.str();
}

std::vector<Diagnostic> parse_machine(std::string_view text)
{
    std::vector<Diagnostic> out;
    while (!text.empty()) {
        std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (line.empty())
            continue;

        std::vector<std::string_view> f;
        std::size_t start = 0;
        for (;;) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string_view::npos || f.size() == 5) {
                f.push_back(line.substr(start));
                break;
            }
            f.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (f.size() != 6)
            throw std::invalid_argument("diagnostic line needs 6 fields: " + std::string(line));

        Diagnostic d;
        auto code = parse_code(f[0]);
        if (!code)
            throw std::invalid_argument("unknown diagnostic code: " + std::string(f[0]));
        d.code = *code;
        if (f[1] != "-")
            d.class_name = field_in(f[1]);
        if (f[2] != "-") {
            d.block = parse_block_label(f[2]);
            if (!d.block)
                throw std::invalid_argument("unknown block label: " + std::string(f[2]));
        }
        d.symbol = field_in(f[3]);
        std::size_t colon = f[4].find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("bad position in diagnostic line: " + std::string(line));
        d.pos.line = to_int(f[4].substr(0, colon), line);
        d.pos.column = to_int(f[4].substr(colon + 1), line);
        d.message = field_in(f[5]);
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace ozcheck
