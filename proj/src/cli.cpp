#include "tempo/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempo/errors.hpp"
#include "tempo/exact.hpp"
#include "tempo/graph_io.hpp"
#include "tempo/reductions.hpp"

namespace tempo::cli {
namespace {

using nlohmann::json;

struct Options {
    bool strict = false;
    std::string out_path;
    std::string format = "text";
    int max_n = 10;
    int max_edges = 20;
    int bound = -1;

    Setting setting() const { return strict ? Setting::Strict : Setting::NonStrict; }
    bool jsonl() const { return format == "jsonl"; }
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    file << content;
}

std::string render_graph(const TemporalGraph& g, const Options& opt) {
    return opt.format == "dot" ? to_dot(g) : serialize_temporal_graph(g);
}

// Graph-valued results go to -o when given, otherwise to the report stream.
void emit_graph(const TemporalGraph& g, const Options& opt, std::ostream& out) {
    std::string rendered = render_graph(g, opt);
    if (!opt.out_path.empty())
        write_file(opt.out_path, rendered);
    else
        out << rendered;
}

json triplet_json(const Triplet& t) {
    json j;
    j["via"] = t.via == kNoVia ? json() : json(t.via);
    j["arrive"] = t.arrive == kMinusInf ? json() : json(t.arrive);
    j["depart"] = t.depart == kPlusInf ? json() : json(t.depart);
    return j;
}

std::string triplet_text(const Triplet& t) {
    std::string via = t.via == kNoVia ? "-" : std::to_string(t.via);
    std::string arrive = t.arrive == kMinusInf ? "-inf" : std::to_string(t.arrive);
    std::string depart = t.depart == kPlusInf ? "+inf" : std::to_string(t.depart);
    return "(" + via + "," + arrive + "," + depart + ")";
}

int cmd_classify(const Options& opt, const TemporalGraph& g, std::ostream& out) {
    GraphClass c = classify(g);
    if (opt.jsonl()) {
        json j{{"simple", c.simple}, {"proper", c.proper}, {"happy", c.happy}};
        out << j.dump() << "\n";
    } else {
        out << "simple=" << (c.simple ? "true" : "false")
            << " proper=" << (c.proper ? "true" : "false")
            << " happy=" << (c.happy ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_connected(const Options& opt, const TemporalGraph& g, std::ostream& out) {
    bool connected = is_temporally_connected(g, opt.setting());
    if (opt.jsonl()) {
        json j{{"connected", connected}, {"setting", to_string(opt.setting())}};
        out << j.dump() << "\n";
    } else {
        out << (connected ? "temporally connected" : "not temporally connected") << " ("
            << to_string(opt.setting()) << ")\n";
    }
    return connected ? 0 : 1;
}

int cmd_pivots(const Options& opt, const TemporalGraph& g, std::ostream& out) {
    auto pivots = find_pivots(g, opt.setting());
    if (opt.jsonl()) {
        for (const Pivot& p : pivots) {
            json j{{"vertex", p.vertex}, {"time", p.time}};
            out << j.dump() << "\n";
        }
    } else if (pivots.empty()) {
        out << "no pivots\n";
    } else {
        for (const Pivot& p : pivots)
            out << "pivot vertex=" << p.vertex << " time=" << p.time << "\n";
    }
    return pivots.empty() ? 1 : 0;
}

int cmd_bipaths(const Options& opt, const TemporalGraph& g, int source, std::ostream& out) {
    BiPathResult r = compute_bipaths(g, source, opt.setting());
    for (int v = 0; v < g.n(); ++v) {
        auto triplets = r.at(v).sorted_triplets();
        if (opt.jsonl()) {
            json list = json::array();
            for (const Triplet& t : triplets) list.push_back(triplet_json(t));
            json j{{"vertex", v}, {"triplets", list}};
            out << j.dump() << "\n";
        } else {
            out << v << ":";
            if (triplets.empty()) out << " unreachable";
            for (const Triplet& t : triplets) out << " " << triplet_text(t);
            out << "\n";
        }
    }
    return 0;
}

int cmd_biconnected(const Options& opt, const TemporalGraph& g, std::ostream& out) {
    bool connected = is_bidirectionally_connected(g, opt.setting());
    if (opt.jsonl()) {
        json j{{"biconnected", connected}, {"setting", to_string(opt.setting())}};
        out << j.dump() << "\n";
    } else {
        out << (connected ? "bidirectionally connected" : "not bidirectionally connected")
            << " (" << to_string(opt.setting()) << ")\n";
    }
    return connected ? 0 : 1;
}

int cmd_bispanner(const Options& opt, const TemporalGraph& g, std::ostream& out) {
    auto spanner = build_bispanner(g, opt.setting());
    if (!spanner) {
        out << "no bi-spanner: graph is not bidirectionally connected\n";
        return 1;
    }
    emit_graph(*spanner, opt, out);
    return 0;
}

int cmd_tst(const Options& opt, const TemporalGraph& g, std::ostream& out) {
    SpanningTreeResult r = classify(g).simple ? tst_simple(g, opt.setting())
                                              : tst_bruteforce(g, opt.setting(), opt.max_n);
    std::string verdict;
    switch (r.verdict) {
        case SpanningTreeResult::Verdict::Exists: verdict = "exists"; break;
        case SpanningTreeResult::Verdict::NotExists: verdict = "none"; break;
        case SpanningTreeResult::Verdict::NeverForSimpleStrict:
            verdict = "never-simple-strict";
            break;
    }
    if (opt.jsonl()) {
        json j{{"verdict", verdict}, {"setting", to_string(opt.setting())}};
        out << j.dump() << "\n";
    } else if (r.verdict == SpanningTreeResult::Verdict::NeverForSimpleStrict) {
        out << "temporal spanning tree: none (one label per edge cannot serve both"
               " directions in the strict setting beyond two vertices)\n";
    } else {
        out << "temporal spanning tree: " << (r.exists() ? "exists" : "none") << "\n";
    }
    if (r.exists() && !opt.out_path.empty()) write_file(opt.out_path, render_graph(*r.tree, opt));
    return r.exists() ? 0 : 1;
}

int cmd_min_bispanner(const Options& opt, const TemporalGraph& g, std::ostream& out) {
    auto result = min_bispanner_bruteforce(g, opt.setting(), opt.max_edges);
    if (!result) {
        out << "no bi-spanner: graph is not bidirectionally connected\n";
        return 1;
    }
    bool within = opt.bound < 0 || result->size <= opt.bound;
    if (opt.jsonl()) {
        json j{{"size", result->size}};
        if (opt.bound >= 0) {
            j["bound"] = opt.bound;
            j["within_bound"] = within;
        }
        out << j.dump() << "\n";
    } else {
        out << "minimum bi-spanner size: " << result->size << "\n";
        if (opt.bound >= 0) out << "within bound " << opt.bound << ": " << (within ? "yes" : "no") << "\n";
    }
    if (!opt.out_path.empty()) write_file(opt.out_path, render_graph(result->subgraph, opt));
    return within ? 0 : 1;
}

int cmd_critical_edges(const Options& opt, const TemporalGraph& g, std::ostream& out) {
    auto edges = critical_bispanner_edges(g, opt.setting());
    for (const Edge& e : edges) {
        if (opt.jsonl()) {
            json j{{"u", e.u}, {"v", e.v}};
            out << j.dump() << "\n";
        } else {
            out << e.u << " " << e.v << "\n";
        }
    }
    return 0;
}

int cmd_gen_sat(const Options& opt, const std::string& input, std::ostream& out) {
    if (opt.out_path.empty()) throw std::runtime_error("gen-sat-gadget requires -o <path>");
    Gadget gadget = sat_to_tst_gadget(parse_dimacs(slurp(input)));
    write_file(opt.out_path, serialize_temporal_graph(gadget.graph));
    write_file(opt.out_path + ".meta", serialize_gadget_meta(gadget.meta));
    out << "sat gadget: " << gadget.graph.n() << " vertices, " << gadget.graph.edge_count()
        << " edges\n";
    return 0;
}

int cmd_gen_setcover(const Options& opt, const std::string& input, std::ostream& out) {
    if (opt.out_path.empty()) throw std::runtime_error("gen-setcover-gadget requires -o <path>");
    Gadget gadget = setcover_to_kbs_gadget(parse_setcover(slurp(input)));
    write_file(opt.out_path, serialize_temporal_graph(gadget.graph));
    write_file(opt.out_path + ".meta", serialize_gadget_meta(gadget.meta));
    out << "cover gadget: " << gadget.graph.n() << " vertices, " << gadget.graph.edge_count()
        << " edges\n";
    return 0;
}

int cmd_verify_sat(const Options& opt, const std::string& input, std::ostream& out) {
    CnfFormula phi = parse_dimacs(slurp(input));
    bool satisfiable = sat_bruteforce(phi).has_value();
    Gadget gadget = sat_to_tst_gadget(phi);
    bool nonstrict = tst_bruteforce(gadget.graph, Setting::NonStrict, opt.max_n).exists();
    bool strict = tst_bruteforce(gadget.graph, Setting::Strict, opt.max_n).exists();
    bool agree = nonstrict == satisfiable && strict == satisfiable;
    if (opt.jsonl()) {
        json j{{"satisfiable", satisfiable},
               {"tst_nonstrict", nonstrict},
               {"tst_strict", strict},
               {"agree", agree}};
        out << j.dump() << "\n";
    } else {
        out << "satisfiable: " << (satisfiable ? "yes" : "no") << "\n";
        out << "spanning tree (non-strict): " << (nonstrict ? "exists" : "none") << "\n";
        out << "spanning tree (strict): " << (strict ? "exists" : "none") << "\n";
        out << "reduction agrees: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_verify_setcover(const Options& opt, const std::string& input, std::ostream& out) {
    SetCoverInstance inst = parse_setcover(slurp(input));
    SetCoverSolution cover = setcover_bruteforce(inst);
    Gadget gadget = setcover_to_kbs_gadget(inst);
    auto spanner = min_bispanner_bruteforce(gadget.graph, Setting::NonStrict, opt.max_edges);
    long long expected = gadget.meta.size_offset + cover.size;
    bool agree = spanner && spanner->size == expected;
    if (opt.jsonl()) {
        json j{{"min_cover", cover.size},
               {"expected_bispanner", expected},
               {"min_bispanner", spanner ? json(spanner->size) : json()},
               {"agree", agree}};
        out << j.dump() << "\n";
    } else {
        out << "minimum cover: " << cover.size << "\n";
        out << "expected bi-spanner size: " << expected << "\n";
        out << "minimum bi-spanner size: ";
        if (spanner)
            out << spanner->size << "\n";
        else
            out << "none\n";
        out << "reduction agrees: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"temporal graph toolkit: journeys, round trips, spanners, gadgets"};
    app.require_subcommand(1);

    Options opt;
    std::string input;
    int source = 0;

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        auto* strict = sub->add_flag("--strict", opt.strict, "require strictly increasing times");
        sub->add_flag("--non-strict", "allow equal consecutive times (default)")->excludes(strict);
        sub->add_option("-o,--output", opt.out_path, "write the main artifact to this path");
        sub->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"text", "jsonl", "dot"}));
        if (with_input)
            sub->add_option("input", input, "input file, or - for stdin")->required();
        return sub;
    };

    auto* c_classify = add_common(app.add_subcommand("classify", "report simple/proper/happy"));
    auto* c_connected =
        add_common(app.add_subcommand("connected", "journeys between all ordered pairs?"));
    auto* c_pivots = add_common(app.add_subcommand("pivots", "list pivot vertices"));
    auto* c_bipaths =
        app.add_subcommand("bipaths", "round-trip triplets from one source");
    c_bipaths->add_option("source", source, "source vertex")->required();
    add_common(c_bipaths);
    auto* c_biconnected =
        add_common(app.add_subcommand("biconnected", "round trips between all pairs?"));
    auto* c_bispanner =
        add_common(app.add_subcommand("bispanner", "extract a round-trip-preserving subgraph"));
    auto* c_tst = add_common(app.add_subcommand("tst", "search for a temporal spanning tree"));
    c_tst->add_option("--max-n", opt.max_n, "vertex bound for the exhaustive search");
    auto* c_minbs =
        add_common(app.add_subcommand("min-bispanner", "smallest round-trip-preserving subgraph"));
    c_minbs->add_option("--max-edges", opt.max_edges, "edge bound for the exhaustive search");
    c_minbs->add_option("-k,--bound", opt.bound, "decide whether the minimum is at most k");
    auto* c_critical =
        add_common(app.add_subcommand("critical-edges", "edges present in every bi-spanner"));
    auto* c_dot = add_common(app.add_subcommand("dot", "render the graph for graphviz"));
    auto* c_gen_sat =
        add_common(app.add_subcommand("gen-sat-gadget", "formula to spanning-tree instance"));
    auto* c_gen_cover = add_common(
        app.add_subcommand("gen-setcover-gadget", "cover instance to bi-spanner instance"));
    auto* c_verify_sat = add_common(
        app.add_subcommand("verify-sat-reduction", "cross-check formula against its gadget"));
    c_verify_sat->add_option("--max-n", opt.max_n, "vertex bound for the exhaustive search");
    auto* c_verify_cover = add_common(app.add_subcommand(
        "verify-setcover-reduction", "cross-check cover instance against its gadget"));
    c_verify_cover->add_option("--max-edges", opt.max_edges, "edge bound for the exhaustive search");

    std::vector<const char*> argv;
    argv.push_back("tempo");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_gen_sat->parsed()) return cmd_gen_sat(opt, input, out);
        if (c_gen_cover->parsed()) return cmd_gen_setcover(opt, input, out);
        if (c_verify_sat->parsed()) return cmd_verify_sat(opt, input, out);
        if (c_verify_cover->parsed()) return cmd_verify_setcover(opt, input, out);

        TemporalGraph g = parse_temporal_graph(slurp(input));
        if (c_classify->parsed()) return cmd_classify(opt, g, out);
        if (c_connected->parsed()) return cmd_connected(opt, g, out);
        if (c_pivots->parsed()) return cmd_pivots(opt, g, out);
        if (c_bipaths->parsed()) {
            if (source < 0 || source >= g.n()) throw std::runtime_error("source out of range");
            return cmd_bipaths(opt, g, source, out);
        }
        if (c_biconnected->parsed()) return cmd_biconnected(opt, g, out);
        if (c_bispanner->parsed()) return cmd_bispanner(opt, g, out);
        if (c_tst->parsed()) return cmd_tst(opt, g, out);
        if (c_minbs->parsed()) return cmd_min_bispanner(opt, g, out);
        if (c_critical->parsed()) return cmd_critical_edges(opt, g, out);
        if (c_dot->parsed()) {
            std::string rendered = to_dot(g);
            if (!opt.out_path.empty())
                write_file(opt.out_path, rendered);
            else
                out << rendered;
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const SizeGuardError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tempo::cli
