#pragma once

#include <packlab/graph.hpp>

#include <string>
#include <string_view>

namespace packlab {

/// graph6 encoding (no trailing newline, no ">>graph6<<" header).
std::string encode_graph6(const Graph & g);

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" prefix and a
/// trailing newline; throws ParseError on anything else malformed.
Graph decode_graph6(std::string_view text);

/// Plain edge list: a "n=<N>" header line then one "u v" line per edge.
std::string encode_edge_list(const Graph & g);
Graph decode_edge_list(std::string_view text);

enum class GraphFormat { automatic, graph6, edge_list };

/// Decodes either format. In automatic mode the text is read as an edge list
/// when its first non-blank line starts with "n=", otherwise as graph6.
Graph decode_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);

} // namespace packlab
