#pragma once

#include "ozcheck/grammar.hpp"

#include <string_view>

namespace ozcheck {

/// Source text of the shipped grammar in interchange format.
std::string_view object_z_grammar_text();

/// The shipped Object Z grammar and its SLR(1) table, built once on first
/// use. Throws std::logic_error if the grammar ever stops being SLR(1).
const Grammar& object_z_grammar();
const ParseTable& object_z_table();

} // namespace ozcheck
