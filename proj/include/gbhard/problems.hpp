#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbhard/cell.hpp"
#include "gbhard/errors.hpp"

namespace gbhard {

//// CNF formulas /////////////////////////////////////////////////////////////

struct Literal {
    int var = 1;  // 1-based variable index
    bool negated = false;

    auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    bool operator==(const CnfFormula&) const = default;
};

// DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header,
// zero-terminated clauses. Throws ParseError with a 1-based line number.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& f);

bool is_three_cnf(const CnfFormula& f);

// Exhaustive search over all 2^n assignments. Refuses n > max_vars.
// The satisfying assignment, when one exists, is re-checked clause by clause
// before being reported.
std::optional<std::vector<bool>> find_sat_assignment(const CnfFormula& f, int max_vars = 20);
bool sat_oracle(const CnfFormula& f, int max_vars = 20);

//// Directed graphs //////////////////////////////////////////////////////////

struct GraphEdge {
    int source = 0;
    int target = 0;

    auto operator<=>(const GraphEdge&) const = default;
};

// Parallel edges permitted, self-loops forbidden. Edge order is preserved so
// constructions that consume the edge list are deterministic.
struct DirectedGraph {
    int num_vertices = 0;
    std::vector<GraphEdge> edges;

    bool operator==(const DirectedGraph&) const = default;
};

// Text form: first line `<num_vertices> <num_edges>`, then one `<src> <dst>`
// pair per line, 0-based vertex ids.
DirectedGraph parse_graph(std::string_view text);
std::string serialize_graph(const DirectedGraph& g);

struct DegreeViolation {
    int vertex = 0;
    int in_degree = 0;
    int out_degree = 0;

    auto operator<=>(const DegreeViolation&) const = default;
};

// Degree-profile check for graphs whose vertices must be (in=1,out=2) or
// (in=2,out=1). alpha counts (1,2) vertices, beta counts (2,1) vertices; a
// valid non-empty graph always has alpha == beta.
struct SkullDoorReport {
    bool is_valid = false;
    int alpha = 0;
    int beta = 0;
    std::vector<DegreeViolation> violations;

    bool operator==(const SkullDoorReport&) const = default;
};

SkullDoorReport validate_skull_door_graph(const DirectedGraph& g);

// Lowest-numbered vertex with in-degree 2 and out-degree 1. Requires a valid,
// non-empty skull-door graph.
int find_pivot_vertex(const DirectedGraph& g);

// Backtracking search for a directed cycle visiting every vertex exactly once,
// anchored at vertex 0. Refuses num_vertices > max_vertices.
bool ham_cycle_oracle(const DirectedGraph& g, int max_vertices = 12);

//// Unbounded knapsack ///////////////////////////////////////////////////////

struct KnapsackItem {
    long long weight = 1;  // >= 1
    long long value = 0;

    auto operator<=>(const KnapsackItem&) const = default;
};

// Decision version: can items (each usable any number of times) with total
// weight <= capacity reach total value >= target?
struct KnapsackInstance {
    long long capacity = 0;
    long long target = 0;
    std::vector<KnapsackItem> items;

    bool operator==(const KnapsackInstance&) const = default;
};

// Text form: line 1 `W V n`, then n lines `w_i v_i`.
KnapsackInstance parse_knapsack(std::string_view text);
std::string serialize_knapsack(const KnapsackInstance& k);

// Returns the violations of the instance invariants (all weights >= 1, no
// negative fields); empty when well-formed.
std::vector<std::string> validate_knapsack(const KnapsackInstance& k);

// Standard unbounded-knapsack dynamic program over capacities 0..W.
// Refuses capacity > max_capacity.
bool knapsack_oracle(const KnapsackInstance& k, long long max_capacity = 1'000'000);

//// Push-1 ///////////////////////////////////////////////////////////////////

// Rectangular grid; the robot pushes (never pulls) blocks one cell at a time
// and must reach the win cell. A block may start on the win cell; the robot
// may start on it too.
struct Push1Instance {
    int width = 0;
    int height = 0;
    std::vector<Cell> blocks;  // kept sorted, pairwise distinct
    Cell robot{};
    Cell win{};

    bool operator==(const Push1Instance&) const = default;
};

// ASCII grid: `.` empty, `B` block, `R` robot, `W` win, `X` robot on win.
// Exactly one robot and one win cell.
Push1Instance parse_push1(std::string_view text);
// Throws std::invalid_argument when a block sits on the win cell (the grid
// alphabet has no glyph for that configuration).
std::string serialize_push1(const Push1Instance& p);

std::vector<std::string> validate_push1(const Push1Instance& p);

// BFS over (robot cell, block set) states. Refuses instances whose state
// bound cells * C(cells, #blocks) exceeds state_cap.
bool push1_oracle(const Push1Instance& p, std::uint64_t state_cap = 1ull << 23);

}  // namespace gbhard
