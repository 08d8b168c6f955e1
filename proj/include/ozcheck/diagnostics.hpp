#pragma once

// Diagnostic records and their human and machine renderings.

#include "ozcheck/location.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ozcheck {

enum class Code {
    Syn001, // syntax error
    Sem101, // variable typed by a variable of the same schema
    Sem102, // undefined type
    Sem103, // variable declared twice in one schema
    Sem104, // variable named like a type
    Sem105, // Delta or Xi list names a non-state variable
    Inh201, // inherited class not defined
    Inh202, // inheritance cycle
    Lex001, // unrecognized lexical unit
};

std::string_view code_name(Code c); // "OZ-SEM-101", ...
std::optional<Code> parse_code(std::string_view s);

struct Diagnostic {
    Code code = Code::Syn001;
    std::optional<std::string> class_name;
    std::optional<BlockLabel> block;
    std::string symbol; // offending lexeme
    SourcePos pos;
    std::string message; // English

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

enum class Locale { En, Fr };

/// `error[CODE] class "C", block B: message (caused by "sym", line L col K)`,
/// leaving out absent parts. The French locale rebuilds the message text.
std::string render_human(const Diagnostic& d, Locale locale = Locale::En);

/// Position, then code, then symbol.
bool diagnostic_before(const Diagnostic& a, const Diagnostic& b);
void sort_diagnostics(std::vector<Diagnostic>& ds);

/// One line per diagnostic:
/// `code<TAB>class<TAB>block<TAB>symbol<TAB>line:col<TAB>message`. Absent
/// fields are written `-`; a field that is a backslash run followed by `-`
/// gets one more leading backslash.
std::string render_machine(const std::vector<Diagnostic>& ds);

/// Inverse of render_machine. Token indexes are not carried and come back 0.
/// Throws std::invalid_argument on a malformed line.
std::vector<Diagnostic> parse_machine(std::string_view text);

} // namespace ozcheck
