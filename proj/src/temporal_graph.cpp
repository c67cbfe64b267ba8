#include "tempo/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tempo {

std::string to_string(Setting s) {
    return s == Setting::Strict ? "strict" : "non-strict";
}

TemporalGraph::TemporalGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(static_cast<size_t>(n));
}

TemporalGraph::TemporalGraph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(static_cast<size_t>(n));

    for (auto& [e, labels] : edges_) {
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
        if (labels.empty()) throw std::invalid_argument("edge without labels");
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        if (labels.front() < 1) throw std::invalid_argument("labels must be positive");
        lifetime_ = std::max(lifetime_, labels.back());
    }

    std::sort(edges_.begin(), edges_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].first == edges_[i - 1].first)
            throw std::invalid_argument("duplicate edge");

    for (const auto& [e, labels] : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::span<const Label> TemporalGraph::labels(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const auto& entry, const Edge& key) { return entry.first < key; });
    if (it == edges_.end() || it->first != e) return {};
    return it->second;
}

std::span<const int> TemporalGraph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return adj_[static_cast<size_t>(v)];
}

int TemporalGraph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

int TemporalGraph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<Edge> TemporalGraph::snapshot(Label t) const {
    std::vector<Edge> out;
    for (const auto& [e, labels] : edges_)
        if (std::binary_search(labels.begin(), labels.end(), t)) out.push_back(e);
    return out;
}

TemporalGraph TemporalGraph::restrict_to(std::span<const Edge> keep) const {
    EdgeList kept;
    kept.reserve(keep.size());
    for (Edge e : keep) {
        auto ls = labels(e);
        if (ls.empty()) throw std::invalid_argument("restrict_to: edge not in graph");
        kept.emplace_back(e, std::vector<Label>(ls.begin(), ls.end()));
    }
    return TemporalGraph(n_, std::move(kept));
}

TemporalGraph TemporalGraph::without_edge(Edge e) const {
    EdgeList kept;
    kept.reserve(edges_.size());
    for (const auto& [key, labels] : edges_)
        if (key != e) kept.emplace_back(key, labels);
    return TemporalGraph(n_, std::move(kept));
}

GraphClass classify(const TemporalGraph& g) {
    GraphClass c;
    c.simple = true;
    c.proper = true;

    std::vector<std::unordered_set<Label>> seen(static_cast<size_t>(g.n()));
    for (const auto& [e, labels] : g.edges()) {
        if (labels.size() != 1) c.simple = false;
        for (Label t : labels) {
            if (!seen[static_cast<size_t>(e.u)].insert(t).second) c.proper = false;
            if (!seen[static_cast<size_t>(e.v)].insert(t).second) c.proper = false;
        }
    }
    c.happy = c.simple && c.proper;
    return c;
}

}  // namespace tempo
