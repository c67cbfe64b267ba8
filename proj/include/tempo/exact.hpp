#pragma once

#include <optional>
#include <vector>

#include "tempo/bipath.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

// Outcome of asking for a spanning tree whose induced temporal subgraph is
// temporally connected. NeverForSimpleStrict flags the inputs where no
// labeling can work: one label per edge leaves no room for a return journey
// once the tree has more than one edge.
struct SpanningTreeResult {
    enum class Verdict { Exists, NotExists, NeverForSimpleStrict };

    Verdict verdict = Verdict::NotExists;
    std::optional<TemporalGraph> tree;  // witness, kept labels included; set iff Exists

    bool exists() const { return verdict == Verdict::Exists; }
};

// Tries every spanning tree of the footprint, labels inherited. Refuses
// graphs with more than max_n vertices.
SpanningTreeResult tst_bruteforce(const TemporalGraph& g, Setting setting, int max_n = 10);

// Polynomial route for graphs with one label per edge. NonStrict: a tree
// works iff some single time's snapshot already connects everything. Strict:
// hopeless beyond two vertices.
SpanningTreeResult tst_simple(const TemporalGraph& g, Setting setting);

struct MinBiSpanner {
    int size = 0;  // footprint edges kept
    TemporalGraph subgraph;
};

// Smallest edge subset (labels inherited) that keeps the graph
// bidirectionally connected; empty when the graph itself is not. Refuses
// footprints with more than max_edges edges.
std::optional<MinBiSpanner> min_bispanner_bruteforce(const TemporalGraph& g, Setting setting,
                                                     int max_edges = 20);

// Edges no bi-spanner can do without: dropping any of them disconnects some
// round trip. Requires a bidirectionally connected input.
std::vector<Edge> critical_bispanner_edges(const TemporalGraph& g, Setting setting);

}  // namespace tempo
