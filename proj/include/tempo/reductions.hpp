#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempo/temporal_graph.hpp"

namespace tempo {

// CNF over variables 1..variable_count; a literal is +v or -v. Clauses keep
// their literals sorted by variable and never pair a variable with its own
// negation.
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;

    void validate() const;  // throws std::invalid_argument
};

// DIMACS CNF: 'c' comments, a 'p cnf <vars> <clauses>' header, then
// zero-terminated clauses, possibly spanning lines.
CnfFormula parse_dimacs(std::string_view text);

// Universe 1..universe_size plus a family of non-empty subsets that jointly
// cover it.
struct SetCoverInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> subsets;

    void validate() const;  // throws std::invalid_argument
};

// First line '<universe_size> <subset_count>', then one line of elements per
// subset. '#' comments allowed.
SetCoverInstance parse_setcover(std::string_view text);

// Bookkeeping emitted next to a generated graph: which vertex plays which
// role, how raw times were mapped onto positive integers, and how instance
// answers translate into graph answers.
struct GadgetMeta {
    std::string kind;
    std::vector<std::string> vertex_names;  // by vertex id

    // Renormalization applied to raw times: stored = scale * raw + shift,
    // with the symbolic epsilon standing for eps_num / eps_den.
    long long eps_num = 0;
    long long eps_den = 1;
    long long scale = 1;
    long long shift = 0;

    // For cover gadgets: a size-k cover corresponds to a bi-spanner with
    // size_offset + k footprint edges.
    long long size_offset = 0;
};

std::string serialize_gadget_meta(const GadgetMeta& meta);

struct Gadget {
    TemporalGraph graph;
    GadgetMeta meta;
};

// Builds the proper graph whose temporal spanning trees are exactly the
// satisfying assignments: dedicated vertices B, T, F plus one vertex per
// variable and per clause, every edge carrying one early and one late time
// around a central instant. Raw times are doubled and shifted so the
// smallest becomes 1.
Gadget sat_to_tst_gadget(const CnfFormula& phi);

// Builds the simple graph whose minimum bi-spanners mirror minimum covers:
// subset and element vertices meet at the subset's index time, two hub
// vertices pin down most of the structure, and the leftover cover choice is
// the only freedom.
Gadget setcover_to_kbs_gadget(const SetCoverInstance& inst);

// First satisfying assignment, scanning assignments with variable 1 as the
// most significant digit and false before true. Refuses formulas with more
// than max_vars variables.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& phi, int max_vars = 20);

struct SetCoverSolution {
    int size = 0;
    std::vector<int> chosen;  // subset indices, 0-based, ascending
};

// Smallest cover, scanning family sizes upward and subsets in index order.
// Refuses instances with more than max_subsets subsets.
SetCoverSolution setcover_bruteforce(const SetCoverInstance& inst, int max_subsets = 15);

// Checks satisfiability against spanning-tree existence on the generated
// graph, in both settings.
bool verify_tst_reduction(const CnfFormula& phi, int max_n = 10);

// Checks the minimum cover size against the minimum bi-spanner size on the
// generated graph.
bool verify_kbs_reduction(const SetCoverInstance& inst, int max_edges = 20);

}  // namespace tempo
