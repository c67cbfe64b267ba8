#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tempo {

// Presence times are positive integers; 0 is reserved for "no label".
using Label = std::int64_t;

// Journey semantics: NonStrict allows consecutive contacts to share a time,
// Strict requires times to increase hop by hop.
enum class Setting { NonStrict, Strict };

std::string to_string(Setting s);

// Undirected vertex pair, normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    int other(int w) const { return w == u ? v : u; }
    auto operator<=>(const Edge&) const = default;
};

// A static undirected graph whose edges carry sorted sets of presence times.
// Vertices are 0..n-1. Immutable after construction; duplicate labels on an
// edge are merged silently, duplicate edges are rejected.
class TemporalGraph {
public:
    using EdgeList = std::vector<std::pair<Edge, std::vector<Label>>>;

    TemporalGraph() = default;
    explicit TemporalGraph(int n);
    TemporalGraph(int n, EdgeList edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Largest label anywhere in the graph; 0 when edgeless.
    Label lifetime() const { return lifetime_; }

    const EdgeList& edges() const { return edges_; }
    bool has_edge(int a, int b) const { return !labels(a, b).empty(); }

    // Sorted presence times of {a,b}; empty span if the edge is absent.
    std::span<const Label> labels(Edge e) const;
    std::span<const Label> labels(int a, int b) const { return labels(Edge(a, b)); }

    // Sorted, deduplicated adjacency.
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;

    // Edges present at time t.
    std::vector<Edge> snapshot(Label t) const;

    // Subgraph on the same vertex set keeping only the given edges, labels
    // included. Every requested edge must exist.
    TemporalGraph restrict_to(std::span<const Edge> keep) const;
    TemporalGraph without_edge(Edge e) const;

    bool operator==(const TemporalGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    EdgeList edges_;                     // sorted by vertex pair
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    Label lifetime_ = 0;
};

struct GraphClass {
    bool simple = false;  // every edge has exactly one label
    bool proper = false;  // edges sharing a vertex never share a label
    bool happy = false;   // simple and proper
};

GraphClass classify(const TemporalGraph& g);

}  // namespace tempo
