#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cpgraph/graph.hpp"
#include "cpgraph/verdicts.hpp"

namespace cpgraph {

// Line-oriented DSL:
//
//   # comment
//   vertex u
//   vertex w
//   edge b u w      # edge <id> <src> <dst>
//
// Identifiers are nonempty runs of [A-Za-z0-9_.:-]. Vertices must be declared
// before an edge uses them. Syntax errors raise ParseError; duplicate ids and
// undeclared vertices raise GraphError. Both carry line and column.
Graph parse_dsl(std::string_view text);
std::string serialize_dsl(const Graph& g);

// Structured format:
//   {"vertices": ["u", ...], "edges": [{"id": "b", "src": "u", "dst": "w"}, ...]}
// Schema violations raise ParseError located by JSON pointer.
Graph parse_json(std::string_view text);
/// Canonical document: two-space indentation, keys in the order above,
/// trailing newline. parse_json of it gives back the same graph.
std::string serialize_json(const Graph& g);

/// Picks JSON when the first non-blank character is '{', the DSL otherwise.
Graph parse_graph(std::string_view text);
/// Reads a file and parses it. Throws ParseError if unreadable.
Graph load_graph(const std::string& path);

bool is_valid_identifier(std::string_view id);

/// Graphviz digraph: one node per vertex, one labelled edge per edge.
std::string emit_dot(const Graph& g);
/// As above, with exitless-cycle edges and members of nontrivial saturated
/// hereditary subsets annotated. Identical to emit_dot(g) when there is
/// nothing to annotate.
std::string emit_dot(const Graph& g, const AnalysisReport& report);

std::string report_to_text(const Graph& g, const AnalysisReport& report);
std::string report_to_json(const Graph& g, const AnalysisReport& report);

} // namespace cpgraph
