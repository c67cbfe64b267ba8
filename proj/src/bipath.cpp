#include "tempo/bipath.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace tempo {

std::optional<Triplet> extend_triplet(const Triplet& t, int from, std::span<const Label> labels,
                                      Setting setting) {
    if (labels.empty()) return std::nullopt;
    const bool strict = setting == Setting::Strict;

    auto first_ok = strict ? std::upper_bound(labels.begin(), labels.end(), t.arrive)
                           : std::lower_bound(labels.begin(), labels.end(), t.arrive);
    auto past_ok = strict ? std::lower_bound(labels.begin(), labels.end(), t.depart)
                          : std::upper_bound(labels.begin(), labels.end(), t.depart);
    if (first_ok == labels.end() || past_ok == labels.begin()) return std::nullopt;
    return Triplet{from, *first_ok, *(past_ok - 1)};
}

bool TripletSet::add(const Triplet& t, int node) {
    for (const Item& it : items_)
        if (it.triplet.dominates(t)) return false;
    std::erase_if(items_, [&](const Item& it) { return t.dominates(it.triplet); });
    items_.push_back({t, node});
    return true;
}

std::vector<Triplet> TripletSet::sorted_triplets() const {
    std::vector<Triplet> out;
    out.reserve(items_.size());
    for (const Item& it : items_) out.push_back(it.triplet);
    std::sort(out.begin(), out.end());
    return out;
}

BiPathResult compute_bipaths(const TemporalGraph& g, int source, Setting setting,
                             WorklistOrder order) {
    if (source < 0 || source >= g.n()) throw std::invalid_argument("source out of range");

    BiPathResult r;
    r.source = source;
    r.setting = setting;
    r.sets.reserve(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) r.sets.emplace_back(v);

    r.arena.push_back({source, Triplet{}, -1});
    r.sets[static_cast<size_t>(source)].add(Triplet{}, 0);

    std::deque<int> work{source};
    std::vector<bool> queued(static_cast<size_t>(g.n()), false);
    queued[static_cast<size_t>(source)] = true;

    while (!work.empty()) {
        int u;
        if (order == WorklistOrder::Fifo) {
            u = work.front();
            work.pop_front();
        } else {
            u = work.back();
            work.pop_back();
        }
        queued[static_cast<size_t>(u)] = false;

        // Extending from u only ever touches other vertices' sets, so a copy
        // of u's items keeps iteration simple.
        std::vector<TripletSet::Item> items(r.at(u).items().begin(), r.at(u).items().end());
        for (const auto& item : items) {
            for (int w : g.neighbors(u)) {
                if (w == item.triplet.via) continue;  // no immediate backtracking
                auto ext = extend_triplet(item.triplet, u, g.labels(u, w), setting);
                if (!ext) continue;
                auto& target = r.sets[static_cast<size_t>(w)];
                bool dominated = false;
                for (const auto& existing : target.items())
                    if (existing.triplet.dominates(*ext)) {
                        dominated = true;
                        break;
                    }
                if (dominated) continue;
                r.arena.push_back({w, *ext, item.node});
                target.add(*ext, static_cast<int>(r.arena.size()) - 1);
                if (!queued[static_cast<size_t>(w)]) {
                    queued[static_cast<size_t>(w)] = true;
                    work.push_back(w);
                }
            }
        }
    }
    return r;
}

BiPath reconstruct_bipath_at(const BiPathResult& r, int node) {
    std::vector<int> verts;
    std::vector<Label> fwd, bwd;
    for (int cur = node; cur != -1; cur = r.arena[static_cast<size_t>(cur)].parent) {
        const auto& nd = r.arena[static_cast<size_t>(cur)];
        verts.push_back(nd.vertex);
        if (!nd.triplet.is_source_sentinel()) {
            fwd.push_back(nd.triplet.arrive);
            bwd.push_back(nd.triplet.depart);
        }
    }
    std::reverse(verts.begin(), verts.end());
    std::reverse(fwd.begin(), fwd.end());
    std::reverse(bwd.begin(), bwd.end());

    // The trail is a walk; whenever a vertex repeats, skip ahead to its last
    // visit. Forward times only grow and backward times only shrink along the
    // walk, so the spliced sequences stay monotone.
    BiPath out;
    out.vertices.push_back(verts.front());
    size_t i = 0;
    const size_t last = verts.size() - 1;
    while (i < last) {
        size_t jump = i;
        for (size_t j = verts.size() - 1; j > i; --j)
            if (verts[j] == verts[i]) {
                jump = j;
                break;
            }
        if (jump == last) break;
        out.forward.push_back(fwd[jump]);
        out.backward.push_back(bwd[jump]);
        out.vertices.push_back(verts[jump + 1]);
        i = jump + 1;
    }
    return out;
}

std::optional<BiPath> reconstruct_bipath(const BiPathResult& r, int v) {
    if (v < 0 || v >= static_cast<int>(r.sets.size()))
        throw std::invalid_argument("vertex out of range");
    if (v == r.source) return BiPath{{v}, {}, {}};

    const TripletSet& set = r.at(v);
    if (set.empty()) return std::nullopt;

    const TripletSet::Item* best = nullptr;
    for (const auto& item : set.items()) {
        if (!best) {
            best = &item;
            continue;
        }
        const Triplet &a = item.triplet, &b = best->triplet;
        if (a.arrive != b.arrive ? a.arrive < b.arrive
                                 : (a.depart != b.depart ? a.depart > b.depart : a.via < b.via))
            best = &item;
    }
    return reconstruct_bipath_at(r, best->node);
}

bool is_bidirectionally_connected(const TemporalGraph& g, Setting setting) {
    for (int s = 0; s < g.n(); ++s) {
        BiPathResult r = compute_bipaths(g, s, setting);
        for (int v = 0; v < g.n(); ++v)
            if (v != s && r.at(v).empty()) return false;
    }
    return true;
}

std::optional<TemporalGraph> build_bispanner(const TemporalGraph& g, Setting setting) {
    std::map<Edge, std::set<Label>> used;
    for (int s = 0; s < g.n(); ++s) {
        BiPathResult r = compute_bipaths(g, s, setting);
        for (int v = 0; v < g.n(); ++v) {
            if (v == s) continue;
            auto path = reconstruct_bipath(r, v);
            if (!path) return std::nullopt;
            for (size_t i = 0; i < path->length(); ++i) {
                Edge e(path->vertices[i], path->vertices[i + 1]);
                used[e].insert(path->forward[i]);
                used[e].insert(path->backward[i]);
            }
        }
    }

    TemporalGraph::EdgeList edges;
    edges.reserve(used.size());
    for (const auto& [e, labels] : used)
        edges.emplace_back(e, std::vector<Label>(labels.begin(), labels.end()));
    return TemporalGraph(g.n(), std::move(edges));
}

}  // namespace tempo
