#include "tempo/reachability.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace tempo {

ArrivalMap earliest_arrival(const TemporalGraph& g, int source, Setting setting,
                            Label source_arrival) {
    if (source < 0 || source >= g.n()) throw std::invalid_argument("source out of range");

    // kPlusInf marks "not reached yet". Each vertex settles at most once
    // because times are processed in ascending order.
    std::vector<Label> arr(static_cast<size_t>(g.n()), kPlusInf);
    arr[static_cast<size_t>(source)] = source_arrival;

    std::map<Label, std::vector<Edge>> by_time;
    for (const auto& [e, labels] : g.edges())
        for (Label t : labels) by_time[t].push_back(e);

    for (const auto& [t, es] : by_time) {
        if (setting == Setting::Strict) {
            // A journey never uses two contacts at the same time, so one
            // sweep suffices; vertices settled at t cannot depart at t.
            for (const Edge& e : es) {
                bool from_u = arr[static_cast<size_t>(e.u)] < t;
                bool from_v = arr[static_cast<size_t>(e.v)] < t;
                if (from_u && arr[static_cast<size_t>(e.v)] > t) arr[static_cast<size_t>(e.v)] = t;
                if (from_v && arr[static_cast<size_t>(e.u)] > t) arr[static_cast<size_t>(e.u)] = t;
            }
        } else {
            // Equal times may chain, so flood the snapshot at t from every
            // vertex already reached by t.
            std::map<int, std::vector<int>> adj;
            for (const Edge& e : es) {
                adj[e.u].push_back(e.v);
                adj[e.v].push_back(e.u);
            }
            std::deque<int> queue;
            for (const auto& [v, unused] : adj)
                if (arr[static_cast<size_t>(v)] <= t) queue.push_back(v);
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int w : adj[v]) {
                    if (arr[static_cast<size_t>(w)] > t) {
                        arr[static_cast<size_t>(w)] = t;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    ArrivalMap result;
    result.source = source;
    result.earliest.resize(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        if (v != source && arr[static_cast<size_t>(v)] != kPlusInf)
            result.earliest[static_cast<size_t>(v)] = arr[static_cast<size_t>(v)];
    return result;
}

bool is_temporally_connected(const TemporalGraph& g, Setting setting) {
    for (int s = 0; s < g.n(); ++s)
        if (!earliest_arrival(g, s, setting).all_reachable()) return false;
    return true;
}

std::vector<Pivot> find_pivots(const TemporalGraph& g, Setting setting) {
    std::vector<Pivot> pivots;
    const int n = g.n();

    // Latest earliest-arrival into each candidate, over all other sources.
    std::vector<Label> latest_in(static_cast<size_t>(n), 0);
    std::vector<bool> everyone_reaches(static_cast<size_t>(n), true);
    for (int s = 0; s < n; ++s) {
        ArrivalMap from_s = earliest_arrival(g, s, setting);
        for (int p = 0; p < n; ++p) {
            if (p == s) continue;
            const auto& a = from_s.earliest[static_cast<size_t>(p)];
            if (!a)
                everyone_reaches[static_cast<size_t>(p)] = false;
            else
                latest_in[static_cast<size_t>(p)] = std::max(latest_in[static_cast<size_t>(p)], *a);
        }
    }

    for (int p = 0; p < n; ++p) {
        if (!everyone_reaches[static_cast<size_t>(p)]) continue;
        Label t = latest_in[static_cast<size_t>(p)];
        if (earliest_arrival(g, p, setting, t).all_reachable()) pivots.push_back({p, t});
    }
    return pivots;
}

}  // namespace tempo
