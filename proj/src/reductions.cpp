#include "tempo/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tempo/errors.hpp"
#include "tempo/exact.hpp"

namespace tempo {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(pos, end - pos));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::vector<long long> parse_ints(std::string_view line, int line_no) {
    std::vector<long long> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) {
            long long value = 0;
            auto tok = line.substr(i, j - i);
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
            out.push_back(value);
        }
        i = j;
    }
    return out;
}

}  // namespace

void CnfFormula::validate() const {
    if (variable_count < 0) throw std::invalid_argument("negative variable count");
    for (const auto& clause : clauses) {
        if (clause.empty()) throw std::invalid_argument("empty clause");
        std::set<int> vars;
        for (int lit : clause) {
            int var = std::abs(lit);
            if (var < 1 || var > variable_count)
                throw std::invalid_argument("literal out of range");
            if (!vars.insert(var).second)
                throw std::invalid_argument("clause mentions a variable twice");
        }
    }
}

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula phi;
    bool have_header = false;
    long long expected_clauses = 0;
    std::vector<int> current;
    int line_no = 0;

    for (std::string_view line : split_lines(text)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == 'c') continue;

        if (line[first] == 'p') {
            if (have_header) throw ParseError(line_no, "repeated header");
            std::istringstream hdr{std::string(line)};
            std::string p, fmt;
            long long nv = -1, nc = -1;
            hdr >> p >> fmt >> nv >> nc;
            if (p != "p" || fmt != "cnf" || nv < 0 || nc < 0 || !hdr)
                throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
            phi.variable_count = static_cast<int>(nv);
            expected_clauses = nc;
            have_header = true;
            continue;
        }

        if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
        for (long long lit : parse_ints(line, line_no)) {
            if (lit == 0) {
                if (current.empty()) throw ParseError(line_no, "empty clause");
                std::sort(current.begin(), current.end(),
                          [](int a, int b) { return std::abs(a) != std::abs(b)
                                                        ? std::abs(a) < std::abs(b)
                                                        : a < b; });
                current.erase(std::unique(current.begin(), current.end()), current.end());
                phi.clauses.push_back(std::move(current));
                current.clear();
            } else {
                long long var = lit < 0 ? -lit : lit;
                if (var > phi.variable_count)
                    throw ParseError(line_no, "literal out of range");
                current.push_back(static_cast<int>(lit));
            }
        }
    }

    if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(line_no, "unterminated clause");
    if (static_cast<long long>(phi.clauses.size()) != expected_clauses)
        throw ParseError(line_no, "clause count does not match header");
    phi.validate();
    return phi;
}

void SetCoverInstance::validate() const {
    if (universe_size < 0) throw std::invalid_argument("negative universe size");
    std::set<int> covered;
    for (const auto& subset : subsets) {
        if (subset.empty()) throw std::invalid_argument("empty subset");
        for (int x : subset) {
            if (x < 1 || x > universe_size)
                throw std::invalid_argument("element out of range");
            covered.insert(x);
        }
    }
    if (static_cast<int>(covered.size()) != universe_size)
        throw std::invalid_argument("subsets do not cover the universe");
}

SetCoverInstance parse_setcover(std::string_view text) {
    SetCoverInstance inst;
    bool have_header = false;
    long long expected_subsets = 0;
    int line_no = 0;

    for (std::string_view line : split_lines(text)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;

        auto nums = parse_ints(line, line_no);
        if (!have_header) {
            if (nums.size() != 2)
                throw ParseError(line_no, "expected header '<universe_size> <subset_count>'");
            if (nums[0] < 0 || nums[1] < 0) throw ParseError(line_no, "negative header value");
            inst.universe_size = static_cast<int>(nums[0]);
            expected_subsets = nums[1];
            have_header = true;
            continue;
        }

        std::vector<int> subset;
        for (long long x : nums) {
            if (x < 1 || x > inst.universe_size)
                throw ParseError(line_no, "element out of range");
            subset.push_back(static_cast<int>(x));
        }
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        if (subset.empty()) throw ParseError(line_no, "empty subset");
        inst.subsets.push_back(std::move(subset));
    }

    if (!have_header) throw ParseError(line_no, "missing header");
    if (static_cast<long long>(inst.subsets.size()) != expected_subsets)
        throw ParseError(line_no, "subset count does not match header");
    inst.validate();
    return inst;
}

std::string serialize_gadget_meta(const GadgetMeta& meta) {
    std::ostringstream out;
    out << "kind=" << meta.kind << "\n";
    out << "vertices=" << meta.vertex_names.size() << "\n";
    for (size_t i = 0; i < meta.vertex_names.size(); ++i)
        out << "vertex." << i << "=" << meta.vertex_names[i] << "\n";
    out << "eps_num=" << meta.eps_num << "\n";
    out << "eps_den=" << meta.eps_den << "\n";
    out << "scale=" << meta.scale << "\n";
    out << "shift=" << meta.shift << "\n";
    if (meta.kind == "setcover_kbs") {
        out << "size_offset=" << meta.size_offset << "\n";
        out << "size_coeff_k=1\n";
    }
    return out.str();
}

Gadget sat_to_tst_gadget(const CnfFormula& phi) {
    phi.validate();
    const long long n = phi.variable_count;
    const long long k = static_cast<long long>(phi.clauses.size());
    const long long t_plus = n + k + 1;
    const long long t_minus = -t_plus;
    const long long shift = 4 * n + 4 * k + 3;

    // Raw times are integers except for the epsilons at +-1/2; doubling makes
    // everything integral, shifting makes the smallest time exactly 1.
    auto stored = [&](long long raw) { return static_cast<Label>(2 * raw + shift); };
    const Label eps_pos = static_cast<Label>(1 + shift);
    const Label eps_neg = static_cast<Label>(-1 + shift);

    const int vB = 0, vT = 1, vF = 2;
    auto var_vertex = [&](long long i) { return static_cast<int>(2 + i); };
    auto clause_vertex = [&](long long j) { return static_cast<int>(2 + n + j); };

    TemporalGraph::EdgeList edges;
    edges.emplace_back(Edge(vB, vT), std::vector<Label>{stored(t_minus), eps_pos});
    edges.emplace_back(Edge(vB, vF), std::vector<Label>{eps_neg, stored(t_plus)});
    for (long long i = 1; i <= n; ++i) {
        edges.emplace_back(Edge(vT, var_vertex(i)),
                           std::vector<Label>{stored(t_minus - i), stored(i)});
        edges.emplace_back(Edge(vF, var_vertex(i)),
                           std::vector<Label>{stored(-i), stored(t_plus + i)});
    }
    for (long long j = 1; j <= k; ++j) {
        for (int lit : phi.clauses[static_cast<size_t>(j - 1)]) {
            const long long i = std::abs(lit);
            Edge e(var_vertex(i), clause_vertex(j));
            if (lit > 0)
                edges.emplace_back(e, std::vector<Label>{stored(t_minus - (i + j)),
                                                         stored(i + j)});
            else
                edges.emplace_back(e, std::vector<Label>{stored(-(i + j)),
                                                         stored(t_plus + (i + j))});
        }
    }

    Gadget gadget;
    gadget.graph = TemporalGraph(static_cast<int>(3 + n + k), std::move(edges));

    gadget.meta.kind = "sat_tst";
    gadget.meta.vertex_names = {"B", "T", "F"};
    for (long long i = 1; i <= n; ++i) gadget.meta.vertex_names.push_back("x" + std::to_string(i));
    for (long long j = 1; j <= k; ++j) gadget.meta.vertex_names.push_back("c" + std::to_string(j));
    gadget.meta.eps_num = 1;
    gadget.meta.eps_den = 2;
    gadget.meta.scale = 2;
    gadget.meta.shift = shift;

    if (gadget.graph.n() != static_cast<int>(3 + n + k))
        throw std::logic_error("sat gadget: wrong vertex count");
    for (const auto& [e, labels] : gadget.graph.edges())
        if (labels.size() != 2) throw std::logic_error("sat gadget: edge without two times");
    if (!classify(gadget.graph).proper) throw std::logic_error("sat gadget: not proper");
    return gadget;
}

Gadget setcover_to_kbs_gadget(const SetCoverInstance& inst) {
    inst.validate();
    const long long n = inst.universe_size;
    const long long m = static_cast<long long>(inst.subsets.size());

    const int vv = 0, v1 = 1, v2 = 2;
    auto subset_vertex = [&](long long i) { return static_cast<int>(2 + i); };
    auto element_vertex = [&](long long j) { return static_cast<int>(2 + m + j); };

    TemporalGraph::EdgeList edges;
    for (long long i = 1; i <= m; ++i) {
        edges.emplace_back(Edge(vv, subset_vertex(i)), std::vector<Label>{static_cast<Label>(i)});
        for (int j : inst.subsets[static_cast<size_t>(i - 1)])
            edges.emplace_back(Edge(subset_vertex(i), element_vertex(j)),
                               std::vector<Label>{static_cast<Label>(i)});
    }
    for (long long i = 1; i <= m; ++i)
        edges.emplace_back(Edge(v1, subset_vertex(i)), std::vector<Label>{static_cast<Label>(m + 1)});
    for (long long j = 1; j <= n; ++j)
        edges.emplace_back(Edge(v1, element_vertex(j)), std::vector<Label>{static_cast<Label>(m + 1)});
    edges.emplace_back(Edge(v2, vv), std::vector<Label>{static_cast<Label>(m + 2)});
    for (long long i = 1; i <= m; ++i)
        edges.emplace_back(Edge(v2, subset_vertex(i)), std::vector<Label>{static_cast<Label>(m + 2)});

    // The remaining hub edges get fresh times past everything above, in a
    // fixed order so the output is reproducible.
    Label fresh = static_cast<Label>(m + 3);
    edges.emplace_back(Edge(v1, vv), std::vector<Label>{fresh++});
    for (long long j = 1; j <= n; ++j)
        edges.emplace_back(Edge(v2, element_vertex(j)), std::vector<Label>{fresh++});
    edges.emplace_back(Edge(v1, v2), std::vector<Label>{fresh++});

    Gadget gadget;
    gadget.graph = TemporalGraph(static_cast<int>(3 + m + n), std::move(edges));

    gadget.meta.kind = "setcover_kbs";
    gadget.meta.vertex_names = {"v", "v1", "v2"};
    for (long long i = 1; i <= m; ++i) gadget.meta.vertex_names.push_back("s" + std::to_string(i));
    for (long long j = 1; j <= n; ++j) gadget.meta.vertex_names.push_back("u" + std::to_string(j));
    gadget.meta.size_offset = 3 * n + 2 * m + 3;

    if (gadget.graph.n() != static_cast<int>(3 + m + n))
        throw std::logic_error("cover gadget: wrong vertex count");
    if (!classify(gadget.graph).simple) throw std::logic_error("cover gadget: not simple");
    return gadget;
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& phi, int max_vars) {
    phi.validate();
    if (phi.variable_count > max_vars)
        throw SizeGuardError("sat_bruteforce: " + std::to_string(phi.variable_count) +
                             " variables exceeds the bound of " + std::to_string(max_vars));

    const int n = phi.variable_count;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> value(static_cast<size_t>(n) + 1);
        for (int i = 1; i <= n; ++i) value[static_cast<size_t>(i)] = (mask >> (n - i)) & 1;

        bool ok = true;
        for (const auto& clause : phi.clauses) {
            bool satisfied = false;
            for (int lit : clause)
                if (value[static_cast<size_t>(std::abs(lit))] == (lit > 0)) {
                    satisfied = true;
                    break;
                }
            if (!satisfied) {
                ok = false;
                break;
            }
        }
        if (ok) return std::vector<bool>(value.begin() + 1, value.end());
    }
    return std::nullopt;
}

SetCoverSolution setcover_bruteforce(const SetCoverInstance& inst, int max_subsets) {
    inst.validate();
    const int m = static_cast<int>(inst.subsets.size());
    if (m > max_subsets)
        throw SizeGuardError("setcover_bruteforce: " + std::to_string(m) +
                             " subsets exceeds the bound of " + std::to_string(max_subsets));

    for (int k = 0; k <= m; ++k) {
        std::vector<int> pick(static_cast<size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::set<int> covered;
            for (int idx : pick)
                covered.insert(inst.subsets[static_cast<size_t>(idx)].begin(),
                               inst.subsets[static_cast<size_t>(idx)].end());
            if (static_cast<int>(covered.size()) == inst.universe_size)
                return SetCoverSolution{k, pick};

            int pos = k - 1;
            while (pos >= 0 && pick[static_cast<size_t>(pos)] == m - k + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<size_t>(pos)];
            for (int q = pos + 1; q < k; ++q)
                pick[static_cast<size_t>(q)] = pick[static_cast<size_t>(q - 1)] + 1;
        }
    }
    // validate() guarantees the full family covers.
    throw std::logic_error("setcover_bruteforce: no cover found");
}

bool verify_tst_reduction(const CnfFormula& phi, int max_n) {
    const bool satisfiable = sat_bruteforce(phi).has_value();
    const Gadget gadget = sat_to_tst_gadget(phi);
    const bool exists_nonstrict =
        tst_bruteforce(gadget.graph, Setting::NonStrict, max_n).exists();
    const bool exists_strict = tst_bruteforce(gadget.graph, Setting::Strict, max_n).exists();
    return exists_nonstrict == satisfiable && exists_strict == satisfiable;
}

bool verify_kbs_reduction(const SetCoverInstance& inst, int max_edges) {
    const SetCoverSolution cover = setcover_bruteforce(inst);
    const Gadget gadget = setcover_to_kbs_gadget(inst);
    const auto spanner = min_bispanner_bruteforce(gadget.graph, Setting::NonStrict, max_edges);
    return spanner &&
           static_cast<long long>(spanner->size) == gadget.meta.size_offset + cover.size;
}

}  // namespace tempo
