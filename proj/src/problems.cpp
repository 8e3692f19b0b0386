#include "gbhard/problems.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace gbhard {

namespace {

// Line-oriented tokenizer that remembers the 1-based line of the last token.
struct LineLexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;

    std::optional<std::string> next_token() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') {
                ++line;
                ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos;
            } else {
                break;
            }
        }
        if (pos >= text.size()) return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    void skip_line() {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        if (pos < text.size()) {
            ++line;
            ++pos;
        }
    }
};

long long parse_int_token(const std::string& tok, int line, const char* what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

//// DIMACS CNF ///////////////////////////////////////////////////////////////

CnfFormula parse_dimacs(std::string_view text) {
    LineLexer lex{text};
    long long num_vars = -1;
    long long num_clauses = -1;

    // Header: comment lines until the single `p cnf` line.
    for (;;) {
        auto tok = lex.next_token();
        if (!tok) throw ParseError(lex.line, "missing 'p cnf' header");
        if (*tok == "c") {
            lex.skip_line();
            continue;
        }
        if (*tok != "p") throw ParseError(lex.line, "expected 'p cnf' header, got '" + *tok + "'");
        auto fmt = lex.next_token();
        if (!fmt || *fmt != "cnf")
            throw ParseError(lex.line, "malformed header: expected 'cnf' after 'p'");
        auto vars_tok = lex.next_token();
        auto clauses_tok = lex.next_token();
        if (!vars_tok || !clauses_tok)
            throw ParseError(lex.line, "malformed header: expected 'p cnf <vars> <clauses>'");
        num_vars = parse_int_token(*vars_tok, lex.line, "variable count");
        num_clauses = parse_int_token(*clauses_tok, lex.line, "clause count");
        if (num_vars < 1) throw ParseError(lex.line, "variable count must be positive");
        if (num_clauses < 0) throw ParseError(lex.line, "clause count must be nonnegative");
        break;
    }

    CnfFormula f;
    f.num_vars = static_cast<int>(num_vars);
    Clause current;
    bool in_clause = false;
    for (;;) {
        auto tok = lex.next_token();
        if (!tok) break;
        if (*tok == "c" && !in_clause) {
            lex.skip_line();
            continue;
        }
        long long lit = parse_int_token(*tok, lex.line, "literal");
        if (lit == 0) {
            if (current.empty()) throw ParseError(lex.line, "empty clause");
            f.clauses.push_back(current);
            current.clear();
            in_clause = false;
            continue;
        }
        long long var = lit < 0 ? -lit : lit;
        if (var > num_vars)
            throw ParseError(lex.line, "literal " + std::to_string(lit) + " out of range (" +
                                           std::to_string(num_vars) + " variables)");
        current.push_back(Literal{static_cast<int>(var), lit < 0});
        in_clause = true;
    }
    if (in_clause) throw ParseError(lex.line, "unterminated clause (missing trailing 0)");
    if (static_cast<long long>(f.clauses.size()) != num_clauses)
        throw ParseError(lex.line, "clause count mismatch: header says " +
                                       std::to_string(num_clauses) + ", found " +
                                       std::to_string(f.clauses.size()));
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& clause : f.clauses) {
        for (const Literal& lit : clause) out << (lit.negated ? -lit.var : lit.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool is_three_cnf(const CnfFormula& f) {
    return std::all_of(f.clauses.begin(), f.clauses.end(),
                       [](const Clause& c) { return c.size() == 3; });
}

namespace {

bool assignment_satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const Clause& clause : f.clauses) {
        bool sat = false;
        for (const Literal& lit : clause) {
            if (assignment[lit.var - 1] != lit.negated) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<bool>> find_sat_assignment(const CnfFormula& f, int max_vars) {
    if (f.num_vars > max_vars)
        throw CapExceeded("sat oracle: " + std::to_string(f.num_vars) +
                          " variables exceeds cap of " + std::to_string(max_vars));
    const int n = f.num_vars;
    std::vector<bool> assignment(n, false);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        for (int i = 0; i < n; ++i) assignment[i] = (mask >> i) & 1;
        if (assignment_satisfies(f, assignment)) {
            // Retained witness is re-checked clause by clause before reporting.
            if (!assignment_satisfies(f, assignment))
                throw std::logic_error("sat witness failed re-check");
            return assignment;
        }
    }
    return std::nullopt;
}

bool sat_oracle(const CnfFormula& f, int max_vars) {
    return find_sat_assignment(f, max_vars).has_value();
}

//// Directed graphs //////////////////////////////////////////////////////////

DirectedGraph parse_graph(std::string_view text) {
    LineLexer lex{text};
    auto v_tok = lex.next_token();
    auto e_tok = lex.next_token();
    if (!v_tok || !e_tok)
        throw ParseError(lex.line, "expected '<num_vertices> <num_edges>' header");
    long long num_vertices = parse_int_token(*v_tok, lex.line, "vertex count");
    long long num_edges = parse_int_token(*e_tok, lex.line, "edge count");
    if (num_vertices < 0) throw ParseError(lex.line, "vertex count must be nonnegative");
    if (num_edges < 0) throw ParseError(lex.line, "edge count must be nonnegative");

    DirectedGraph g;
    g.num_vertices = static_cast<int>(num_vertices);
    for (long long i = 0; i < num_edges; ++i) {
        auto src_tok = lex.next_token();
        auto dst_tok = lex.next_token();
        if (!src_tok || !dst_tok)
            throw ParseError(lex.line, "edge count mismatch: header says " +
                                           std::to_string(num_edges) + ", found " +
                                           std::to_string(i));
        long long src = parse_int_token(*src_tok, lex.line, "vertex id");
        long long dst = parse_int_token(*dst_tok, lex.line, "vertex id");
        if (src < 0 || src >= num_vertices || dst < 0 || dst >= num_vertices)
            throw ParseError(lex.line, "vertex id out of range [0, " +
                                           std::to_string(num_vertices) + ")");
        if (src == dst)
            throw ParseError(lex.line, "self-loop on vertex " + std::to_string(src));
        g.edges.push_back(GraphEdge{static_cast<int>(src), static_cast<int>(dst)});
    }
    if (lex.next_token())
        throw ParseError(lex.line, "trailing data after the declared edges");
    return g;
}

std::string serialize_graph(const DirectedGraph& g) {
    std::ostringstream out;
    out << g.num_vertices << ' ' << g.edges.size() << '\n';
    for (const GraphEdge& e : g.edges) out << e.source << ' ' << e.target << '\n';
    return out.str();
}

SkullDoorReport validate_skull_door_graph(const DirectedGraph& g) {
    std::vector<int> in(g.num_vertices, 0), out(g.num_vertices, 0);
    for (const GraphEdge& e : g.edges) {
        ++out[e.source];
        ++in[e.target];
    }
    SkullDoorReport report;
    for (int v = 0; v < g.num_vertices; ++v) {
        if (in[v] == 1 && out[v] == 2) {
            ++report.alpha;
        } else if (in[v] == 2 && out[v] == 1) {
            ++report.beta;
        } else {
            report.violations.push_back(DegreeViolation{v, in[v], out[v]});
        }
    }
    report.is_valid = report.violations.empty();
    return report;
}

int find_pivot_vertex(const DirectedGraph& g) {
    SkullDoorReport report = validate_skull_door_graph(g);
    if (!report.is_valid)
        throw std::invalid_argument("find_pivot_vertex requires a valid skull-door graph");
    if (g.num_vertices == 0)
        throw std::invalid_argument("find_pivot_vertex requires a non-empty graph");
    std::vector<int> in(g.num_vertices, 0), out(g.num_vertices, 0);
    for (const GraphEdge& e : g.edges) {
        ++out[e.source];
        ++in[e.target];
    }
    for (int v = 0; v < g.num_vertices; ++v)
        if (in[v] == 2 && out[v] == 1) return v;
    throw std::logic_error("valid non-empty skull-door graph without a (2,1) vertex");
}

bool ham_cycle_oracle(const DirectedGraph& g, int max_vertices) {
    if (g.num_vertices > max_vertices)
        throw CapExceeded("hamiltonian-cycle oracle: " + std::to_string(g.num_vertices) +
                          " vertices exceeds cap of " + std::to_string(max_vertices));
    const int n = g.num_vertices;
    if (n == 0) return false;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const GraphEdge& e : g.edges) adj[e.source][e.target] = true;
    if (n == 1) return false;  // self-loops are forbidden

    std::vector<bool> used(n, false);
    used[0] = true;
    std::function<bool(int, int)> extend = [&](int vertex, int visited) {
        if (visited == n) return static_cast<bool>(adj[vertex][0]);
        for (int next = 1; next < n; ++next) {
            if (used[next] || !adj[vertex][next]) continue;
            used[next] = true;
            if (extend(next, visited + 1)) return true;
            used[next] = false;
        }
        return false;
    };
    return extend(0, 1);
}

//// Unbounded knapsack ///////////////////////////////////////////////////////

KnapsackInstance parse_knapsack(std::string_view text) {
    LineLexer lex{text};
    auto w_tok = lex.next_token();
    auto v_tok = lex.next_token();
    auto n_tok = lex.next_token();
    if (!w_tok || !v_tok || !n_tok)
        throw ParseError(lex.line, "expected 'W V n' header");
    KnapsackInstance k;
    k.capacity = parse_int_token(*w_tok, lex.line, "capacity");
    k.target = parse_int_token(*v_tok, lex.line, "target value");
    long long n = parse_int_token(*n_tok, lex.line, "item count");
    if (k.capacity < 0) throw ParseError(lex.line, "capacity must be nonnegative");
    if (k.target < 0) throw ParseError(lex.line, "target value must be nonnegative");
    if (n < 0) throw ParseError(lex.line, "item count must be nonnegative");
    for (long long i = 0; i < n; ++i) {
        auto wt = lex.next_token();
        auto vt = lex.next_token();
        if (!wt || !vt)
            throw ParseError(lex.line, "item count mismatch: header says " + std::to_string(n) +
                                           ", found " + std::to_string(i));
        KnapsackItem item;
        item.weight = parse_int_token(*wt, lex.line, "item weight");
        item.value = parse_int_token(*vt, lex.line, "item value");
        if (item.weight < 1)
            throw ParseError(lex.line, "item weight must be at least 1");
        if (item.value < 0) throw ParseError(lex.line, "item value must be nonnegative");
        k.items.push_back(item);
    }
    if (lex.next_token()) throw ParseError(lex.line, "trailing data after the declared items");
    return k;
}

std::string serialize_knapsack(const KnapsackInstance& k) {
    std::ostringstream out;
    out << k.capacity << ' ' << k.target << ' ' << k.items.size() << '\n';
    for (const KnapsackItem& item : k.items) out << item.weight << ' ' << item.value << '\n';
    return out.str();
}

std::vector<std::string> validate_knapsack(const KnapsackInstance& k) {
    std::vector<std::string> violations;
    if (k.capacity < 0) violations.push_back("capacity: must be nonnegative");
    if (k.target < 0) violations.push_back("target: must be nonnegative");
    for (std::size_t i = 0; i < k.items.size(); ++i) {
        if (k.items[i].weight < 1)
            violations.push_back("items[" + std::to_string(i) + "].weight: must be at least 1");
        if (k.items[i].value < 0)
            violations.push_back("items[" + std::to_string(i) + "].value: must be nonnegative");
    }
    return violations;
}

bool knapsack_oracle(const KnapsackInstance& k, long long max_capacity) {
    if (k.capacity > max_capacity)
        throw CapExceeded("knapsack oracle: capacity " + std::to_string(k.capacity) +
                          " exceeds cap of " + std::to_string(max_capacity));
    if (k.target == 0) return true;
    std::vector<long long> best(static_cast<std::size_t>(k.capacity) + 1, 0);
    for (long long c = 1; c <= k.capacity; ++c) {
        for (const KnapsackItem& item : k.items) {
            if (item.weight <= c)
                best[c] = std::max(best[c], best[c - item.weight] + item.value);
        }
        if (best[c] >= k.target) return true;
    }
    return best[k.capacity] >= k.target;
}

//// Push-1 ///////////////////////////////////////////////////////////////////

Push1Instance parse_push1(std::string_view text) {
    Push1Instance p;
    std::vector<std::string> rows;
    std::string row;
    int line = 1;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            if (!row.empty()) rows.push_back(row);
            row.clear();
            ++line;
        } else if (text[i] != '\r') {
            row.push_back(text[i]);
        }
    }
    if (rows.empty()) throw ParseError(1, "empty grid");

    p.height = static_cast<int>(rows.size());
    p.width = static_cast<int>(rows[0].size());
    bool have_robot = false, have_win = false;
    for (int r = 0; r < p.height; ++r) {
        if (static_cast<int>(rows[r].size()) != p.width)
            throw ParseError(r + 1, "ragged row: expected width " + std::to_string(p.width) +
                                        ", got " + std::to_string(rows[r].size()));
        for (int c = 0; c < p.width; ++c) {
            Cell cell{c, r};
            switch (rows[r][c]) {
                case '.':
                    break;
                case 'B':
                    p.blocks.push_back(cell);
                    break;
                case 'R':
                    if (have_robot) throw ParseError(r + 1, "duplicate robot");
                    p.robot = cell;
                    have_robot = true;
                    break;
                case 'W':
                    if (have_win) throw ParseError(r + 1, "duplicate win cell");
                    p.win = cell;
                    have_win = true;
                    break;
                case 'X':
                    if (have_robot) throw ParseError(r + 1, "duplicate robot");
                    if (have_win) throw ParseError(r + 1, "duplicate win cell");
                    p.robot = cell;
                    p.win = cell;
                    have_robot = have_win = true;
                    break;
                default:
                    throw ParseError(r + 1, std::string("unknown grid character '") +
                                                rows[r][c] + "'");
            }
        }
    }
    if (!have_robot) throw ParseError(p.height, "missing robot");
    if (!have_win) throw ParseError(p.height, "missing win cell");
    std::sort(p.blocks.begin(), p.blocks.end());
    return p;
}

std::string serialize_push1(const Push1Instance& p) {
    std::vector<std::string> rows(p.height, std::string(p.width, '.'));
    for (const Cell& b : p.blocks) {
        if (b == p.win)
            throw std::invalid_argument(
                "push-1 grid text cannot express a block on the win cell");
        rows[b.row][b.col] = 'B';
    }
    if (p.robot == p.win) {
        rows[p.win.row][p.win.col] = 'X';
    } else {
        rows[p.win.row][p.win.col] = 'W';
        rows[p.robot.row][p.robot.col] = 'R';
    }
    std::string out;
    for (const std::string& r : rows) {
        out += r;
        out += '\n';
    }
    return out;
}

std::vector<std::string> validate_push1(const Push1Instance& p) {
    std::vector<std::string> violations;
    if (p.width < 1 || p.height < 1) violations.push_back("dimensions: must be positive");
    auto in_bounds = [&](Cell c) {
        return c.col >= 0 && c.col < p.width && c.row >= 0 && c.row < p.height;
    };
    auto cell_str = [](Cell c) {
        return "[" + std::to_string(c.col) + "," + std::to_string(c.row) + "]";
    };
    if (!in_bounds(p.robot)) violations.push_back("robot: out of bounds " + cell_str(p.robot));
    if (!in_bounds(p.win)) violations.push_back("win: out of bounds " + cell_str(p.win));
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (!in_bounds(p.blocks[i]))
            violations.push_back("blocks[" + std::to_string(i) + "]: out of bounds " +
                                 cell_str(p.blocks[i]));
        if (p.blocks[i] == p.robot)
            violations.push_back("blocks[" + std::to_string(i) + "]: overlaps the robot");
        if (i > 0 && p.blocks[i] == p.blocks[i - 1])
            violations.push_back("blocks[" + std::to_string(i) + "]: duplicate block " +
                                 cell_str(p.blocks[i]));
    }
    return violations;
}

namespace {

struct Push1State {
    std::uint16_t robot;
    std::vector<std::uint16_t> blocks;  // sorted

    bool operator==(const Push1State&) const = default;
};

struct Push1StateHash {
    std::size_t operator()(const Push1State& s) const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(s.robot);
        for (std::uint16_t b : s.blocks) mix(b + 1);
        return static_cast<std::size_t>(h);
    }
};

// cells * C(cells, blocks), saturating at limit.
std::uint64_t push1_state_bound(std::uint64_t cells, std::uint64_t blocks, std::uint64_t limit) {
    std::uint64_t bound = 1;
    for (std::uint64_t i = 0; i < blocks; ++i) {
        if (bound > limit) return limit + 1;
        bound = bound * (cells - i) / (i + 1);
    }
    if (bound > limit / std::max<std::uint64_t>(cells, 1)) return limit + 1;
    return bound * cells;
}

}  // namespace

bool push1_oracle(const Push1Instance& p, std::uint64_t state_cap) {
    if (!validate_push1(p).empty())
        throw std::invalid_argument("push1_oracle requires a valid instance");
    const std::uint64_t cells = static_cast<std::uint64_t>(p.width) * p.height;
    if (cells > 0xFFFF)
        throw CapExceeded("push-1 oracle: more than 65535 cells");
    if (push1_state_bound(cells, p.blocks.size(), state_cap) > state_cap)
        throw CapExceeded("push-1 oracle: state bound exceeds cap of " +
                          std::to_string(state_cap));

    auto index = [&](Cell c) { return static_cast<std::uint16_t>(c.row * p.width + c.col); };
    const std::uint16_t win = index(p.win);

    Push1State start;
    start.robot = index(p.robot);
    for (const Cell& b : p.blocks) start.blocks.push_back(index(b));
    std::sort(start.blocks.begin(), start.blocks.end());

    auto blocked = [](const std::vector<std::uint16_t>& blocks, std::uint16_t cell) {
        return std::binary_search(blocks.begin(), blocks.end(), cell);
    };

    if (start.robot == win) return true;

    std::unordered_set<Push1State, Push1StateHash> visited{start};
    std::queue<Push1State> frontier;
    frontier.push(start);
    const int dcol[4] = {0, 0, -1, 1};
    const int drow[4] = {-1, 1, 0, 0};
    while (!frontier.empty()) {
        Push1State state = std::move(frontier.front());
        frontier.pop();
        const int rc = state.robot % p.width;
        const int rr = state.robot / p.width;
        for (int d = 0; d < 4; ++d) {
            const int tc = rc + dcol[d];
            const int tr = rr + drow[d];
            if (tc < 0 || tc >= p.width || tr < 0 || tr >= p.height) continue;
            const std::uint16_t target = static_cast<std::uint16_t>(tr * p.width + tc);
            Push1State next = state;
            if (blocked(state.blocks, target)) {
                const int bc = tc + dcol[d];
                const int br = tr + drow[d];
                if (bc < 0 || bc >= p.width || br < 0 || br >= p.height) continue;
                const std::uint16_t beyond = static_cast<std::uint16_t>(br * p.width + bc);
                if (blocked(state.blocks, beyond)) continue;
                auto it = std::lower_bound(next.blocks.begin(), next.blocks.end(), target);
                next.blocks.erase(it);
                next.blocks.insert(
                    std::lower_bound(next.blocks.begin(), next.blocks.end(), beyond), beyond);
            }
            next.robot = target;
            if (!visited.insert(next).second) continue;
            if (target == win) return true;
            frontier.push(std::move(next));
        }
    }
    return false;
}

}  // namespace gbhard
