#pragma once

#include <string>
#include <string_view>

#include "rpk/factory.hpp"

namespace rpk {

// Instance documents are JSON objects:
//   {"vertices": ["a", "b", ...], "arcs": [["a", "b", 1], ...]}
// Vertex i of the digraph is vertices[i].

/// Throws Error(ParseError); syntax errors carry "line L, column C".
Instance parse_instance(std::string_view text);

/// Reads and parses a file; unreadable files are reported as ParseError too.
Instance load_instance(const std::string& path);

/// One arc per line, arcs ordered by (from, to); parse_instance inverts it.
std::string serialize_instance(const Instance& instance);

/// Closure document: same vertices, arcs as colourless [from, to] pairs.
std::string serialize_closure(const Digraph& closure, const std::vector<std::string>& names);

/// Graphviz description; colour c is drawn with entry (c - 1) mod 12 of a
/// fixed palette and labelled with its number.
std::string export_dot(const Instance& instance);

/// "a,b,c" to the vertex set of those names. Throws Error(ParseError) on
/// unknown or repeated names.
VertexSet parse_vertex_list(std::string_view list, const std::vector<std::string>& names);

std::string vertex_names(VertexSet s, const std::vector<std::string>& names);

}  // namespace rpk
