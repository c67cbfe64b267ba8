#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "tempo/temporal_graph.hpp"

namespace tempo {

inline constexpr Label kMinusInf = std::numeric_limits<Label>::min();
inline constexpr Label kPlusInf = std::numeric_limits<Label>::max();

// Earliest time each vertex can be reached from the source by a journey.
// The source itself has no arrival time; it may depart whenever it likes.
struct ArrivalMap {
    int source = 0;
    std::vector<std::optional<Label>> earliest;  // stays empty at the source

    bool reachable(int v) const { return v == source || earliest[static_cast<size_t>(v)].has_value(); }

    bool all_reachable() const {
        for (int v = 0; v < static_cast<int>(earliest.size()); ++v)
            if (!reachable(v)) return false;
        return true;
    }
};

// Single-source earliest arrival. source_arrival acts as if the source had
// itself been reached at that time: the first hop must not precede it
// (NonStrict) or must come strictly after it (Strict). The default places no
// restriction on departures.
ArrivalMap earliest_arrival(const TemporalGraph& g, int source, Setting setting,
                            Label source_arrival = kMinusInf);

// Journey in both directions between every ordered pair of vertices.
bool is_temporally_connected(const TemporalGraph& g, Setting setting);

// A pivot is a vertex everyone can reach by some time t and which can reach
// everyone back when departing at t or later (strictly later in Strict mode).
struct Pivot {
    int vertex = 0;
    Label time = 0;

    bool operator==(const Pivot&) const = default;
};

std::vector<Pivot> find_pivots(const TemporalGraph& g, Setting setting);

}  // namespace tempo
