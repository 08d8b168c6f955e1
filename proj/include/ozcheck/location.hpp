#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ozcheck {

struct SourcePos {
    std::size_t index = 0; // token index in the stream
    int line = 1;
    int column = 1; // 1-based, counted in code points

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

inline bool position_before(const SourcePos& a, const SourcePos& b)
{
    if (a.line != b.line)
        return a.line < b.line;
    return a.column < b.column;
}

/// The block of a class a finding lies in.
struct BlockLabel {
    enum class Kind {
        TopLevel,
        ClassHeading,
        ClassBody,
        Visibility,
        Inheritance,
        LocalDefinitions,
        State,
        Init,
        Operation,
    };
    Kind kind = Kind::TopLevel;
    std::string operation; // set for Kind::Operation

    static BlockLabel op(std::string name) { return {Kind::Operation, std::move(name)}; }

    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

/// Compact form used in machine output: `state`, `operation(Join)`, ...
std::string to_string(const BlockLabel& b);
std::optional<BlockLabel> parse_block_label(std::string_view s);

/// Human-readable English form: `state schema`, `operation "Join"`, ...
std::string describe(const BlockLabel& b);

} // namespace ozcheck
