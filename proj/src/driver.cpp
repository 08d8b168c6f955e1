#include "ozcheck/driver.hpp"

#include "ozcheck/ast.hpp"
#include "ozcheck/lexer.hpp"
#include "ozcheck/oz_grammar.hpp"
#include "ozcheck/parser.hpp"
#include "ozcheck/semantics.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ozcheck {

namespace {

std::string symbol_of(const Token& t)
{
    return t.kind == TokenKind::EndMarker ? std::string("$") : t.lexeme;
}

Diagnostic syntax_diagnostic(const SyntaxError& e)
{
    std::string message = "syntax is incorrect";
    if (!e.expected.empty()) {
        message += "; expected";
        for (std::size_t i = 0; i < e.expected.size(); ++i)
            message += (i ? ", \"" : " \"") + e.expected[i] + "\"";
    }
    return Diagnostic{Code::Syn001, e.enclosing_class, e.enclosing_block, symbol_of(e.offending),
                      e.offending.pos, std::move(message)};
}

std::string render(const FileResult& r, const RunConfig& cfg, const std::string& trace)
{
    std::string out = trace;
    if (cfg.format == OutputFormat::Machine)
        return out + render_machine(r.diagnostics);
    for (const Diagnostic& d : r.diagnostics)
        out += r.path + ": " + render_human(d, cfg.locale) + "\n";
    return out;
}

std::string join_terminals(const std::set<SymbolId>& set, const Grammar& g)
{
    std::string out;
    for (SymbolId t : g.terminals()) {
        if (!set.count(t))
            continue;
        if (!out.empty())
            out += ' ';
        out += g.name(t);
    }
    return out.empty() ? "-" : out;
}

} // namespace

SourceResult check_source(std::string_view text, const RunConfig& cfg)
{
    const Grammar& g = object_z_grammar();
    const ParseTable& table = object_z_table();
    SourceResult result;

    TokenStream ts;
    try {
        ts = tokenize(text, LexOptions{cfg.lenient_lexing});
    } catch (const LexError& e) {
        result.diagnostics.push_back(Diagnostic{Code::Lex001, std::nullopt, std::nullopt, e.unit(),
                                                e.pos(), e.what()});
        return result;
    }

    std::vector<InputSymbol> input;
    try {
        input = map_terminals(ts, g);
    } catch (const UnknownToken& e) {
        const Token& t = e.token();
        Localization where = locate(ts.tokens, t.pos.index);
        result.diagnostics.push_back(Diagnostic{Code::Lex001, where.class_name, where.block, t.lexeme,
                                                t.pos, "token \"" + t.lexeme + "\" is not part of the grammar"});
        return result;
    }

    ParseOutcome outcome;
    if (cfg.trace) {
        TracedParse traced = parse_with_trace(input, table, g);
        result.trace = render_trace(traced.trace, input, g);
        outcome = std::move(traced.outcome);
    } else {
        outcome = parse(input, table, g);
    }
    if (auto* err = std::get_if<SyntaxError>(&outcome)) {
        result.diagnostics.push_back(syntax_diagnostic(*err));
        return result;
    }
    result.diagnostics = analyze(build_ast(std::get<ParseTree>(outcome), g));
    return result;
}

FileResult check_file(const std::string& path, const RunConfig& cfg)
{
    FileResult r;
    r.path = path;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        r.io_error = true;
        r.error = "cannot read " + path;
        return r;
    }
    std::ostringstream text;
    text << in.rdbuf();
    SourceResult s = check_source(text.str(), cfg);
    r.diagnostics = std::move(s.diagnostics);
    r.output = render(r, cfg, s.trace);
    return r;
}

std::vector<FileResult> check_files_serial(const RunConfig& cfg)
{
    std::vector<FileResult> out;
    out.reserve(cfg.inputs.size());
    for (const std::string& path : cfg.inputs)
        out.push_back(check_file(path, cfg));
    return out;
}

std::vector<FileResult> check_files(const RunConfig& cfg)
{
    // Build the shared table before any worker touches it.
    object_z_table();
    const auto n = static_cast<long>(cfg.inputs.size());
    std::vector<FileResult> out(cfg.inputs.size());
#ifdef _OPENMP
    int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = check_file(cfg.inputs[static_cast<std::size_t>(i)], cfg);
    return out;
}

std::string first_follow_to_tsv(const Grammar& g)
{
    FirstSets first = compute_first(g);
    FollowSets follow = compute_follow(g, first);
    std::ostringstream os;
    os << "symbol\tnullable\tfirst\tfollow\n";
    for (SymbolId n : g.nonterminals())
        os << g.name(n) << '\t' << (first[n].nullable ? "yes" : "no") << '\t'
           << join_terminals(first[n].terminals, g) << '\t' << join_terminals(follow[n], g) << '\n';
    return os.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Grammar& g = object_z_grammar();
    if (cfg.dump_grammar)
        out << grammar_to_text(g);
    if (cfg.dump_table)
        out << table_to_tsv(object_z_table(), g);
    if (cfg.dump_first_follow)
        out << first_follow_to_tsv(g);

    int status = Clean;
    for (const FileResult& r : check_files(cfg)) {
        if (r.io_error) {
            err << "ozcheck: " << r.error << '\n';
            status = UsageOrIoFailure;
            continue;
        }
        out << r.output;
        if (!r.diagnostics.empty() && status == Clean)
            status = DiagnosticsEmitted;
    }
    out.flush();
    return status;
}

} // namespace ozcheck
