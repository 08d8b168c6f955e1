// ozcheck: checks LaTeX-encoded Object Z specifications.

#include "ozcheck/driver.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv)
{
    ozcheck::RunConfig cfg;
    CLI::App app{"Syntax and semantic checker for Object Z specifications written with oz.sty"};

    app.add_option("files", cfg.inputs, "Specification files");
    app.add_flag("--trace", cfg.trace, "Print the shift-reduce trace of each file");
    app.add_flag("--dump-table", cfg.dump_table, "Print the ACTION/GOTO table as TSV");
    app.add_flag("--dump-grammar", cfg.dump_grammar, "Print the shipped grammar in interchange format");
    app.add_flag("--dump-first-follow", cfg.dump_first_follow, "Print FIRST and FOLLOW sets");
    app.add_option("--format", cfg.format, "Diagnostic format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ozcheck::OutputFormat>{{"text", ozcheck::OutputFormat::Text},
                                                         {"machine", ozcheck::OutputFormat::Machine}})
                       .description(""))
        ->option_text("text|machine");
    app.add_option("--locale", cfg.locale, "Language of human-readable messages")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ozcheck::Locale>{{"en", ozcheck::Locale::En}, {"fr", ozcheck::Locale::Fr}})
                       .description(""))
        ->option_text("en|fr");
    app.add_flag("--lenient", cfg.lenient_lexing, "Split braces, brackets, parentheses, commas and colons off glued units");
    app.add_option("-j,--jobs", cfg.jobs, "Files checked in parallel (0: OpenMP default)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ozcheck::UsageOrIoFailure;
    }

    if (cfg.inputs.empty() && !cfg.dump_table && !cfg.dump_grammar && !cfg.dump_first_follow) {
        std::cerr << "ozcheck: no input files\n" << app.help();
        return ozcheck::UsageOrIoFailure;
    }

    try {
        return ozcheck::run(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "ozcheck: " << e.what() << '\n';
        return ozcheck::UsageOrIoFailure;
    }
}
