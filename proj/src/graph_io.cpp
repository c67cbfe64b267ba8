#include "tempo/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "tempo/errors.hpp"

namespace tempo {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

TemporalGraph parse_temporal_graph(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    TemporalGraph::EdgeList edges;

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (end == text.size() && line.empty()) break;

        auto toks = split_tokens(line);
        if (toks.empty() || toks[0].front() == '#') continue;

        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "n")
                throw ParseError(line_no, "expected header 'n <count>'");
            long long count = parse_int(toks[1], line_no);
            if (count < 0) throw ParseError(line_no, "vertex count must be non-negative");
            n = static_cast<int>(count);
            have_header = true;
            continue;
        }

        if (toks.size() < 3)
            throw ParseError(line_no, "expected '<u> <v> <t1> [t2 ...]'");
        long long u = parse_int(toks[0], line_no);
        long long v = parse_int(toks[1], line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex out of range");
        if (u == v) throw ParseError(line_no, "self-loop");

        std::vector<Label> labels;
        for (size_t i = 2; i < toks.size(); ++i) {
            long long t = parse_int(toks[i], line_no);
            if (t < 1) throw ParseError(line_no, "labels must be positive");
            labels.push_back(t);
        }

        Edge e(static_cast<int>(u), static_cast<int>(v));
        for (const auto& [key, unused] : edges)
            if (key == e) throw ParseError(line_no, "duplicate edge");
        edges.emplace_back(e, std::move(labels));
    }

    if (!have_header) throw ParseError(line_no, "missing header 'n <count>'");
    return TemporalGraph(n, std::move(edges));
}

std::string serialize_temporal_graph(const TemporalGraph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (const auto& [e, labels] : g.edges()) {
        out << e.u << " " << e.v;
        for (Label t : labels) out << " " << t;
        out << "\n";
    }
    return out.str();
}

std::string to_dot(const TemporalGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (const auto& [e, labels] : g.edges()) {
        out << "  " << e.u << " -- " << e.v << " [label=\"";
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i) out << ",";
            out << labels[i];
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tempo
