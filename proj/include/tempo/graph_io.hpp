#pragma once

#include <string>
#include <string_view>

#include "tempo/temporal_graph.hpp"

namespace tempo {

// Text format, one edge per line:
//
//   # comment
//   n 4
//   0 1 1
//   1 2 2 5
//
// The header gives the vertex count; every other line is an edge followed by
// its presence times. Endpoint order is free on input, duplicate times are
// merged, duplicate edges are an error.
TemporalGraph parse_temporal_graph(std::string_view text);

// Normal form: header, then edges sorted by vertex pair with times ascending.
std::string serialize_temporal_graph(const TemporalGraph& g);

// Graphviz rendering with the presence times as edge labels.
std::string to_dot(const TemporalGraph& g);

}  // namespace tempo
