#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qwalk/graph.hpp"

namespace qwalk {

enum class GraphFormat { edgelist, graph6 };

class ParseError : public std::runtime_error {
public:
    enum class Code {
        malformed_header,
        malformed_line,
        index_out_of_range,
        asymmetric_weight,
        duplicate_edge,
        edge_count_mismatch,
        invalid_graph6,
        unsupported_graph,
    };

    ParseError(Code code, std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), code_(code), line_(line) {}

    Code code() const noexcept { return code_; }
    /// 1-based input line (graph6: always 1).
    std::size_t line() const noexcept { return line_; }

private:
    Code code_;
    std::size_t line_;
};

std::string_view to_string(ParseError::Code code);

/// Edgelist: "n m", then m lines "u v" or "u v w", then optional "loop u w".
/// Blank lines are ignored. graph6 accepts an optional ">>graph6<<" prefix.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Canonical text: edgelist lists edges with u < v in lexicographic order
/// (weight omitted when it is 1) followed by loops; graph6 is a single line
/// without trailing newline and only accepts simple graphs.
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Edgelist when the first non-blank line is two integers, graph6 otherwise.
GraphFormat detect_format(std::string_view text);

GraphFormat parse_format_name(std::string_view name);

}  // namespace qwalk
