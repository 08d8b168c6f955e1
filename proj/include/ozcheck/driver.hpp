#pragma once

// Checking pipeline over source text and files: tokenize, parse, lower,
// analyze, render.

#include "ozcheck/diagnostics.hpp"
#include "ozcheck/grammar.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ozcheck {

enum class OutputFormat { Text, Machine };

struct RunConfig {
    std::vector<std::string> inputs;
    bool trace = false;
    bool dump_table = false;
    bool dump_grammar = false;
    bool dump_first_follow = false;
    OutputFormat format = OutputFormat::Text;
    Locale locale = Locale::En;
    bool lenient_lexing = false;
    int jobs = 0; // 0: OpenMP default
};

enum ExitStatus : int { Clean = 0, DiagnosticsEmitted = 1, UsageOrIoFailure = 2 };

struct SourceResult {
    std::vector<Diagnostic> diagnostics;
    std::string trace; // set when RunConfig::trace
};

/// The whole pipeline on one specification text, with the shipped grammar.
SourceResult check_source(std::string_view text, const RunConfig& cfg);

struct FileResult {
    std::string path;
    bool io_error = false;
    std::string error;  // IO failure message
    std::string output; // rendered trace and diagnostics
    std::vector<Diagnostic> diagnostics;
};

FileResult check_file(const std::string& path, const RunConfig& cfg);

/// Files are checked concurrently; results come back in input order.
std::vector<FileResult> check_files(const RunConfig& cfg);
/// Reference implementation, one file after another.
std::vector<FileResult> check_files_serial(const RunConfig& cfg);

/// `symbol<TAB>nullable<TAB>first<TAB>follow` per nonterminal, sets
/// space-separated in column order.
std::string first_follow_to_tsv(const Grammar& g);

/// Dumps, then each file's output in order. IO failures go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace ozcheck
