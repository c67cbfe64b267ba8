#include "tempo/exact.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tempo/errors.hpp"
#include "tempo/reachability.hpp"

namespace tempo {
namespace {

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

bool spans_connected(std::span<const Edge> edges, int n) {
    Dsu dsu(n);
    int components = n;
    for (const Edge& e : edges)
        if (dsu.unite(e.u, e.v)) --components;
    return components == 1;
}

// Depth-first over edge choices; edges joining two components are either
// taken or skipped, so every spanning tree of the footprint comes up exactly
// once, in order of the sorted edge list.
bool search_spanning_trees(const TemporalGraph& g, Setting setting,
                           const std::vector<Edge>& edges, size_t i, std::vector<Edge>& chosen,
                           const Dsu& dsu, std::optional<TemporalGraph>& found) {
    const size_t want = static_cast<size_t>(g.n()) - 1;
    if (chosen.size() == want) {
        TemporalGraph tree = g.restrict_to(chosen);
        if (is_temporally_connected(tree, setting)) {
            found = std::move(tree);
            return true;
        }
        return false;
    }
    if (i >= edges.size() || chosen.size() + (edges.size() - i) < want) return false;

    Dsu taken = dsu;
    if (taken.unite(edges[i].u, edges[i].v)) {
        chosen.push_back(edges[i]);
        if (search_spanning_trees(g, setting, edges, i + 1, chosen, taken, found)) return true;
        chosen.pop_back();
    }
    return search_spanning_trees(g, setting, edges, i + 1, chosen, dsu, found);
}

}  // namespace

SpanningTreeResult tst_bruteforce(const TemporalGraph& g, Setting setting, int max_n) {
    if (g.n() > max_n)
        throw SizeGuardError("tst_bruteforce: " + std::to_string(g.n()) +
                             " vertices exceeds the bound of " + std::to_string(max_n));

    if (g.n() <= 1) return {SpanningTreeResult::Verdict::Exists, TemporalGraph(g.n())};

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [e, unused] : g.edges()) edges.push_back(e);
    if (!spans_connected(edges, g.n())) return {SpanningTreeResult::Verdict::NotExists, {}};

    std::vector<Edge> chosen;
    std::optional<TemporalGraph> found;
    search_spanning_trees(g, setting, edges, 0, chosen, Dsu(g.n()), found);
    if (found) return {SpanningTreeResult::Verdict::Exists, std::move(found)};
    return {SpanningTreeResult::Verdict::NotExists, {}};
}

SpanningTreeResult tst_simple(const TemporalGraph& g, Setting setting) {
    if (!classify(g).simple)
        throw std::invalid_argument("tst_simple requires one label per edge");

    if (g.n() <= 1) return {SpanningTreeResult::Verdict::Exists, TemporalGraph(g.n())};

    if (setting == Setting::Strict) {
        if (g.n() > 2) return {SpanningTreeResult::Verdict::NeverForSimpleStrict, {}};
        // Two vertices: the only candidate tree is the single edge, and one
        // shared time serves both directions at path length one.
        if (g.has_edge(0, 1)) {
            std::vector<Edge> keep{Edge(0, 1)};
            return {SpanningTreeResult::Verdict::Exists, g.restrict_to(keep)};
        }
        return {SpanningTreeResult::Verdict::NotExists, {}};
    }

    // One label per edge means a tree is temporally connected only if all its
    // edges share one time, so it must live inside a single snapshot.
    std::set<Label> times;
    for (const auto& [e, labels] : g.edges()) times.insert(labels.front());

    for (Label t : times) {
        std::vector<Edge> present = g.snapshot(t);
        if (present.size() + 1 < static_cast<size_t>(g.n())) continue;

        Dsu dsu(g.n());
        std::vector<Edge> tree;
        for (const Edge& e : present)
            if (dsu.unite(e.u, e.v)) tree.push_back(e);
        if (tree.size() + 1 == static_cast<size_t>(g.n()))
            return {SpanningTreeResult::Verdict::Exists, g.restrict_to(tree)};
    }
    return {SpanningTreeResult::Verdict::NotExists, {}};
}

std::vector<Edge> critical_bispanner_edges(const TemporalGraph& g, Setting setting) {
    if (!is_bidirectionally_connected(g, setting))
        throw std::invalid_argument(
            "critical_bispanner_edges requires a bidirectionally connected graph");

    std::vector<Edge> out;
    for (const auto& [e, unused] : g.edges())
        if (!is_bidirectionally_connected(g.without_edge(e), setting)) out.push_back(e);
    return out;
}

std::optional<MinBiSpanner> min_bispanner_bruteforce(const TemporalGraph& g, Setting setting,
                                                     int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges)
        throw SizeGuardError("min_bispanner_bruteforce: " + std::to_string(m) +
                             " edges exceeds the bound of " + std::to_string(max_edges));

    if (!is_bidirectionally_connected(g, setting)) return std::nullopt;

    // Critical edges sit in every bi-spanner (round trips only disappear when
    // edges do), so only the rest is worth enumerating.
    std::vector<Edge> forced = critical_bispanner_edges(g, setting);
    std::vector<Edge> optional_edges;
    for (const auto& [e, unused] : g.edges())
        if (!std::binary_search(forced.begin(), forced.end(), e)) optional_edges.push_back(e);

    const int base = static_cast<int>(forced.size());
    const int start = std::max(g.n() - 1, base);
    for (int k = start; k <= m; ++k) {
        const int extra = k - base;
        if (extra < 0 || extra > static_cast<int>(optional_edges.size())) continue;

        // k-subsets of the optional edges in ascending index order.
        std::vector<int> pick(static_cast<size_t>(extra));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<Edge> subset = forced;
            for (int idx : pick) subset.push_back(optional_edges[static_cast<size_t>(idx)]);

            if (spans_connected(subset, g.n())) {
                TemporalGraph sub = g.restrict_to(subset);
                if (is_bidirectionally_connected(sub, setting))
                    return MinBiSpanner{k, std::move(sub)};
            }

            int pos = extra - 1;
            while (pos >= 0 &&
                   pick[static_cast<size_t>(pos)] ==
                       static_cast<int>(optional_edges.size()) - extra + pos)
                --pos;
            if (pos < 0) break;
            ++pick[static_cast<size_t>(pos)];
            for (int q = pos + 1; q < extra; ++q)
                pick[static_cast<size_t>(q)] = pick[static_cast<size_t>(q - 1)] + 1;
        }
    }

    // The full edge set passed the connectivity check up front.
    return MinBiSpanner{m, g};
}

}  // namespace tempo
