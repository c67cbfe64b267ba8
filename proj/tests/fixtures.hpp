#pragma once

#include "tempo/temporal_graph.hpp"

// Small graphs with hand-checked behavior, shared across suites.
namespace fixtures {

using tempo::Edge;
using tempo::TemporalGraph;

// 4-cycle where opposite edges share a time. Temporally connected, yet no
// round trip between the two vertices of the 1-1 diagonal, and no spanning
// tree survives on its own.
inline TemporalGraph square() {
    return TemporalGraph(4, {{Edge(0, 1), {1}},
                             {Edge(1, 2), {2}},
                             {Edge(2, 3), {1}},
                             {Edge(3, 0), {2}}});
}

// Cycle 1-2-3-4 with pendants 0 and 5 hanging off vertex 1. Proper but not
// simple; round trips exist everywhere, but only by using the whole graph.
inline TemporalGraph pendant_cycle() {
    return TemporalGraph(6, {{Edge(0, 1), {1, 9}},
                             {Edge(1, 2), {2, 8}},
                             {Edge(2, 3), {3, 7}},
                             {Edge(3, 4), {6}},
                             {Edge(4, 1), {5, 10}},
                             {Edge(1, 5), {4, 11}}});
}

// Complete graph on four vertices with a proper edge coloring as times.
inline TemporalGraph happy_k4() {
    return TemporalGraph(4, {{Edge(0, 1), {1}},
                             {Edge(2, 3), {1}},
                             {Edge(0, 2), {2}},
                             {Edge(1, 3), {2}},
                             {Edge(0, 3), {3}},
                             {Edge(1, 2), {3}}});
}

// Three edges around a hub, all present at times 1 and 2.
inline TemporalGraph star4() {
    return TemporalGraph(4, {{Edge(0, 1), {1, 2}},
                             {Edge(0, 2), {1, 2}},
                             {Edge(0, 3), {1, 2}}});
}

}  // namespace fixtures
