#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tempo/reachability.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

inline constexpr int kNoVia = -1;

// One way of reaching a vertex and getting back: arrived from `via` at time
// `arrive`, can depart towards `via` at time `depart`. The source holds the
// sentinel (kNoVia, -inf, +inf).
struct Triplet {
    int via = kNoVia;
    Label arrive = kMinusInf;
    Label depart = kPlusInf;

    bool is_source_sentinel() const { return via == kNoVia; }

    // Same neighbor, arrives no later, departs no earlier.
    bool dominates(const Triplet& o) const {
        return via == o.via && arrive <= o.arrive && depart >= o.depart;
    }

    auto operator<=>(const Triplet&) const = default;
};

// Push a triplet held at `from` across an edge with the given presence times.
// The round trip tightens on both ends: the forward hop takes the first time
// not before arrive, the backward hop the last time not after depart (strictly
// before/after in Strict mode). Empty when either side has no usable time.
std::optional<Triplet> extend_triplet(const Triplet& t, int from, std::span<const Label> labels,
                                      Setting setting);

// Triplets known for one vertex, kept minimal: no triplet dominates another.
class TripletSet {
public:
    struct Item {
        Triplet triplet;
        int node = -1;  // provenance handle, see BiPathResult::arena
    };

    explicit TripletSet(int owner) : owner_(owner) {}

    int owner() const { return owner_; }
    bool empty() const { return items_.empty(); }
    size_t size() const { return items_.size(); }
    std::span<const Item> items() const { return items_; }

    // Inserts unless an existing triplet with the same neighbor dominates t;
    // on insertion every triplet t dominates is dropped. True iff changed.
    bool add(const Triplet& t, int node = -1);

    std::vector<Triplet> sorted_triplets() const;

private:
    int owner_;
    std::vector<Item> items_;
};

// Processing order of the waiting list; both reach the same fixed point.
enum class WorklistOrder { Fifo, Lifo };

// All round trips from one source: per-vertex triplet sets at the fixed point
// plus the trail of how each triplet was produced. Arena entries are never
// removed, so trails stay intact even when a triplet is later dominated.
struct BiPathResult {
    struct Node {
        int vertex = 0;
        Triplet triplet;
        int parent = -1;  // arena index, -1 only for the source sentinel
    };

    int source = 0;
    Setting setting = Setting::NonStrict;
    std::vector<TripletSet> sets;
    std::vector<Node> arena;

    const TripletSet& at(int v) const { return sets[static_cast<size_t>(v)]; }
};

BiPathResult compute_bipaths(const TemporalGraph& g, int source, Setting setting,
                             WorklistOrder order = WorklistOrder::Fifo);

// A simple path walkable in both directions: forward[i] and backward[i] are
// the times used on edge {vertices[i], vertices[i+1]} by the outbound and
// return journey. Forward times never decrease along the path, backward times
// never increase (strictly, in Strict mode).
struct BiPath {
    std::vector<int> vertices;
    std::vector<Label> forward;
    std::vector<Label> backward;

    size_t length() const { return forward.size(); }
};

// Follow a triplet's trail back to the source. Revisits are cut out, which
// keeps both journeys valid, so the result is always a simple path.
BiPath reconstruct_bipath_at(const BiPathResult& r, int node);

// Round trip between the source and v, if any. Picks the triplet with the
// earliest arrival, breaking ties by latest departure, then smallest
// neighbor. v == source yields the empty path.
std::optional<BiPath> reconstruct_bipath(const BiPathResult& r, int v);

// Round trip between every pair of vertices.
bool is_bidirectionally_connected(const TemporalGraph& g, Setting setting);

// Subgraph keeping only the contacts used by one reconstructed round trip per
// ordered pair. Empty when the graph is not bidirectionally connected.
std::optional<TemporalGraph> build_bispanner(const TemporalGraph& g, Setting setting);

}  // namespace tempo
