#include "gbhard/verify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gbhard/simulators.hpp"

namespace gbhard {

//// Generators ///////////////////////////////////////////////////////////////

CnfFormula gen_random_3cnf(std::uint64_t seed, int n, int m) {
    if (n < 1) throw std::invalid_argument("gen_random_3cnf: n must be at least 1");
    SplitMix64 rng(seed);
    CnfFormula f;
    f.num_vars = n;
    for (int j = 0; j < m; ++j) {
        Clause clause;
        for (int t = 0; t < 3; ++t) {
            const int var = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const bool negated = rng.below(2) == 1;
            clause.push_back(Literal{var, negated});
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

DirectedGraph gen_random_skull_graph(std::uint64_t seed, int pairs) {
    if (pairs < 1) throw std::invalid_argument("gen_random_skull_graph: pairs must be >= 1");
    SplitMix64 rng(seed);

    // Vertices 0..pairs-1 get profile (in 1, out 2); pairs..2*pairs-1 get
    // (in 2, out 1). Out-stubs are matched against shuffled in-stubs; a
    // matching containing a self-loop is reshuffled.
    std::vector<int> out_stubs, in_stubs;
    for (int v = 0; v < pairs; ++v) {
        out_stubs.push_back(v);
        out_stubs.push_back(v);
        in_stubs.push_back(v);
    }
    for (int v = pairs; v < 2 * pairs; ++v) {
        out_stubs.push_back(v);
        in_stubs.push_back(v);
        in_stubs.push_back(v);
    }

    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        for (std::size_t i = in_stubs.size(); i > 1; --i)
            std::swap(in_stubs[i - 1], in_stubs[rng.below(i)]);
        bool self_loop = false;
        for (std::size_t i = 0; i < out_stubs.size(); ++i)
            if (out_stubs[i] == in_stubs[i]) {
                self_loop = true;
                break;
            }
        if (self_loop) continue;
        DirectedGraph g;
        g.num_vertices = 2 * pairs;
        for (std::size_t i = 0; i < out_stubs.size(); ++i)
            g.edges.push_back(GraphEdge{out_stubs[i], in_stubs[i]});
        return g;
    }
    throw std::runtime_error("gen_random_skull_graph: no self-loop-free matching after " +
                             std::to_string(kMaxAttempts) + " shuffles");
}

KnapsackInstance gen_random_knapsack(std::uint64_t seed, const KnapsackGenBounds& bounds) {
    SplitMix64 rng(seed);
    KnapsackInstance k;
    k.capacity = static_cast<long long>(rng.below(bounds.max_capacity + 1));
    const int n = 1 + static_cast<int>(rng.below(bounds.max_items));
    for (int i = 0; i < n; ++i) {
        KnapsackItem item;
        item.weight = 1 + static_cast<long long>(rng.below(bounds.max_weight));
        item.value = static_cast<long long>(rng.below(bounds.max_value + 1));
        k.items.push_back(item);
    }
    // Draw the target around the best single-item repetition revenue so both
    // oracle outcomes show up (the estimate never exceeds the true optimum).
    long long estimate = 0;
    for (const KnapsackItem& item : k.items)
        estimate = std::max(estimate, (k.capacity / item.weight) * item.value);
    k.target = static_cast<long long>(rng.below(estimate + estimate / 2 + 2));
    return k;
}

Push1Instance gen_random_push1(std::uint64_t seed, const Push1GenBounds& bounds) {
    SplitMix64 rng(seed);
    Push1Instance p;
    p.width = 1 + static_cast<int>(rng.below(bounds.max_grid));
    p.height = 1 + static_cast<int>(rng.below(bounds.max_grid));
    const int cells = p.width * p.height;

    std::vector<int> order(cells);
    for (int i = 0; i < cells; ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);

    auto cell_of = [&](int idx) { return Cell{idx % p.width, idx / p.width}; };
    p.robot = cell_of(order[0]);
    // Occasionally start the robot on the win cell; otherwise keep them apart.
    if (cells == 1 || rng.below(8) == 0) {
        p.win = p.robot;
    } else {
        p.win = cell_of(order[1]);
    }
    // Blocks avoid the robot and the win cell so every instance has a grid
    // form.
    const int max_blocks = std::min<int>(bounds.max_blocks, std::max(0, cells - 2));
    const int num_blocks =
        max_blocks > 0 ? static_cast<int>(rng.below(max_blocks + 1)) : 0;
    for (std::size_t i = 0; i < order.size() && static_cast<int>(p.blocks.size()) < num_blocks;
         ++i) {
        Cell c = cell_of(order[i]);
        if (c == p.robot || c == p.win) continue;
        p.blocks.push_back(c);
    }
    std::sort(p.blocks.begin(), p.blocks.end());
    return p;
}

//// Campaigns ////////////////////////////////////////////////////////////////

const char* campaign_pair_name(CampaignPair pair) {
    switch (pair) {
        case CampaignPair::CnfDk: return "cnf-dk";
        case CampaignPair::HamWario: return "ham-wario";
        case CampaignPair::KnapHarvest: return "knap-harvest";
        case CampaignPair::Push1Mole: return "push1-mole";
    }
    return "?";
}

CampaignPair parse_campaign_pair(const std::string& name) {
    if (name == "cnf-dk") return CampaignPair::CnfDk;
    if (name == "ham-wario") return CampaignPair::HamWario;
    if (name == "knap-harvest") return CampaignPair::KnapHarvest;
    if (name == "push1-mole") return CampaignPair::Push1Mole;
    throw std::invalid_argument("unknown campaign pair '" + name +
                                "' (expected cnf-dk, ham-wario, knap-harvest, or push1-mole)");
}

std::vector<std::string> validate_campaign_spec(const CampaignSpec& spec) {
    std::vector<std::string> v;
    if (spec.count < 0) v.push_back("count: must be nonnegative");
    switch (spec.pair) {
        case CampaignPair::CnfDk:
            if (spec.sizes.max_vars < 1 || spec.sizes.max_vars > 20)
                v.push_back("max_vars: must be in [1, 20] (sat oracle cap)");
            if (spec.sizes.max_clauses < 0) v.push_back("max_clauses: must be nonnegative");
            break;
        case CampaignPair::HamWario:
            if (spec.sizes.max_vertices < 2 || spec.sizes.max_vertices > 12)
                v.push_back("max_vertices: must be in [2, 12] (cycle oracle cap)");
            break;
        case CampaignPair::KnapHarvest:
            if (spec.sizes.knapsack.max_capacity < 0 ||
                spec.sizes.knapsack.max_capacity > 1'000'000)
                v.push_back("max_capacity: must be in [0, 1000000] (knapsack oracle cap)");
            if (spec.sizes.knapsack.max_items < 1) v.push_back("max_items: must be >= 1");
            if (spec.sizes.knapsack.max_weight < 1) v.push_back("max_weight: must be >= 1");
            if (spec.sizes.knapsack.max_value < 0) v.push_back("max_value: must be >= 0");
            break;
        case CampaignPair::Push1Mole:
            if (spec.sizes.push1.max_grid < 1 || spec.sizes.push1.max_grid > 8)
                v.push_back("max_grid: must be in [1, 8]");
            if (spec.sizes.push1.max_blocks < 0) v.push_back("max_blocks: must be >= 0");
            break;
    }
    return v;
}

namespace {

void check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("reduction bound violated: ") + what);
}

struct InstanceOutcome {
    bool oracle = false;
    bool solver = false;
    std::string text;
    std::string error;  // nonempty: a cap refused this instance
};

void run_one_impl(const CampaignSpec& spec, std::uint64_t instance_seed,
                  ReductionStats& stats, InstanceOutcome& out);

InstanceOutcome run_one(const CampaignSpec& spec, int index, ReductionStats& stats) {
    const std::uint64_t instance_seed = spec.seed ^ static_cast<std::uint64_t>(index);
    InstanceOutcome out;
    try {
        run_one_impl(spec, instance_seed, stats, out);
    } catch (const CapExceeded& e) {
        out.error = e.what();
    }
    return out;
}

void run_one_impl(const CampaignSpec& spec, std::uint64_t instance_seed,
                  ReductionStats& stats, InstanceOutcome& out) {
    switch (spec.pair) {
        case CampaignPair::CnfDk: {
            SplitMix64 rng(instance_seed);
            const int n = 1 + static_cast<int>(rng.below(spec.sizes.max_vars));
            const int m = static_cast<int>(rng.below(spec.sizes.max_clauses + 1));
            CnfFormula f = gen_random_3cnf(rng.next(), n, m);
            out.text = serialize_dimacs(f);
            out.oracle = sat_oracle(f);
            DonkeyKongRoom room = reduce_3cnf_to_dk(f, &stats);
            check(validate(room).empty(), "cnf-dk output must validate");
            check(stats.output_cells_or_rooms <=
                      kDkCellBound * (static_cast<std::uint64_t>(n) + m),
                  "cnf-dk output cells within bound");
            if (spec.mutation == Mutation::DkFlipPolarity && !room.boards.empty())
                room.boards[0].polarity =
                    room.boards[0].polarity == BoardPolarity::OpenWhenOn
                        ? BoardPolarity::OpenWhenOff
                        : BoardPolarity::OpenWhenOn;
            out.solver = solve_donkey_kong(room).solvable;
            break;
        }
        case CampaignPair::HamWario: {
            SplitMix64 rng(instance_seed);
            const int pairs = 1 + static_cast<int>(rng.below(spec.sizes.max_vertices / 2));
            DirectedGraph g = gen_random_skull_graph(rng.next(), pairs);
            out.text = serialize_graph(g);
            out.oracle = ham_cycle_oracle(g);
            WarioLevel level = reduce_hamcycle_to_wario(g, &stats);
            check(validate(level).empty(), "ham-wario output must validate");
            check(level.rooms.size() == static_cast<std::size_t>(g.num_vertices) + 1,
                  "ham-wario rooms == |V|+1");
            check(level.doors.size() == g.edges.size() + 1, "ham-wario doors == |E|+1");
            std::size_t keys = 0;
            for (const WarioRoom& r : level.rooms) keys += r.key ? 1 : 0;
            check(keys == static_cast<std::size_t>(g.num_vertices),
                  "ham-wario keys == |V|");
            if (spec.mutation == Mutation::WarioDropKey)
                for (WarioRoom& r : level.rooms)
                    if (r.key) {
                        r.key = false;
                        break;
                    }
            out.solver = solve_wario(level).solvable;
            break;
        }
        case CampaignPair::KnapHarvest: {
            SplitMix64 rng(instance_seed);
            KnapsackInstance k = gen_random_knapsack(rng.next(), spec.sizes.knapsack);
            out.text = serialize_knapsack(k);
            out.oracle = knapsack_oracle(k);
            HarvestMoonInstance inst = reduce_knapsack_to_harvest(k, &stats);
            check(validate(inst).empty(), "knap-harvest output must validate");
            check(inst.num_tiles == 1 && inst.days == k.capacity &&
                      inst.target_revenue == k.target &&
                      inst.crops.size() == k.items.size(),
                  "knap-harvest fields equal the source");
            for (std::size_t i = 0; i < k.items.size(); ++i)
                check(inst.crops[i].grow_days == k.items[i].weight &&
                          inst.crops[i].sale_price == k.items[i].value,
                      "knap-harvest crops equal the items");
            if (spec.mutation == Mutation::HarvestDayOffByOne)
                inst.days = inst.days > 0 ? inst.days - 1 : inst.days + 1;
            out.solver = solve_harvest(inst).solvable;
            break;
        }
        case CampaignPair::Push1Mole: {
            SplitMix64 rng(instance_seed);
            Push1Instance p = gen_random_push1(rng.next(), spec.sizes.push1);
            out.text = serialize_push1(p);
            out.oracle = push1_oracle(p);
            MoleManiaRoom room = reduce_push1_to_mole(p, &stats);
            check(validate(room).empty(), "push1-mole output must validate");
            check(room.width == p.width && room.height == p.height &&
                      room.weights.size() == p.blocks.size(),
                  "push1-mole dimensions and weight count equal the source");
            if (spec.mutation == Mutation::MoleShiftWeight && !room.weights.empty()) {
                Cell& w = room.weights[0];
                const Cell shifts[4] = {{w.col + 1, w.row},
                                        {w.col - 1, w.row},
                                        {w.col, w.row + 1},
                                        {w.col, w.row - 1}};
                for (Cell candidate : shifts) {
                    if (!room.in_bounds(candidate) || candidate == room.start) continue;
                    if (std::find(room.weights.begin(), room.weights.end(), candidate) !=
                        room.weights.end())
                        continue;
                    w = candidate;
                    break;
                }
                std::sort(room.weights.begin(), room.weights.end());
            }
            out.solver = solve_mole(room).solvable;
            break;
        }
    }
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec) {
    auto violations = validate_campaign_spec(spec);
    if (!violations.empty())
        throw std::invalid_argument("invalid campaign spec: " + violations[0]);

    CampaignReport report;
    report.pair = spec.pair;
    report.count = spec.count;
    report.seed = spec.seed;
    for (int i = 0; i < spec.count; ++i) {
        ReductionStats stats;
        InstanceOutcome out = run_one(spec, i, stats);
        report.stats.source_size += stats.source_size;
        report.stats.output_cells_or_rooms += stats.output_cells_or_rooms;
        report.stats.wall_clock += stats.wall_clock;
        if (!out.error.empty()) {
            report.error_list.push_back(InstanceError{i, out.text, out.error});
            continue;
        }
        ++report.total;
        if (out.oracle) ++report.positives;
        if (out.oracle == out.solver) {
            ++report.agreements;
        } else {
            ++report.disagreements;
            report.disagreement_list.push_back(
                Disagreement{i, out.text, out.oracle, out.solver});
        }
    }
    return report;
}

std::string report_to_json(const CampaignReport& report) {
    nlohmann::ordered_json j;
    j["pair"] = campaign_pair_name(report.pair);
    j["count"] = report.count;
    j["seed"] = report.seed;
    j["total"] = report.total;
    j["agreements"] = report.agreements;
    j["disagreements"] = report.disagreements;
    j["positives"] = report.positives;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const Disagreement& d : report.disagreement_list) {
        nlohmann::ordered_json item;
        item["index"] = d.index;
        item["instance"] = d.instance_text;
        item["oracle"] = d.oracle_verdict;
        item["solver"] = d.solver_verdict;
        list.push_back(std::move(item));
    }
    j["disagreement_list"] = std::move(list);
    j["errors"] = report.error_list.size();
    nlohmann::ordered_json errors = nlohmann::ordered_json::array();
    for (const InstanceError& e : report.error_list) {
        nlohmann::ordered_json item;
        item["index"] = e.index;
        item["instance"] = e.instance_text;
        item["message"] = e.message;
        errors.push_back(std::move(item));
    }
    j["error_list"] = std::move(errors);
    nlohmann::ordered_json stats;
    stats["source_size_total"] = report.stats.source_size;
    stats["output_cells_or_rooms_total"] = report.stats.output_cells_or_rooms;
    j["stats"] = std::move(stats);
    return j.dump(2) + "\n";
}

std::string report_to_table(const CampaignReport& report) {
    std::ostringstream out;
    out << "pair            " << campaign_pair_name(report.pair) << '\n'
        << "seed            " << report.seed << '\n'
        << "total           " << report.total << '\n'
        << "agreements      " << report.agreements << '\n'
        << "disagreements   " << report.disagreements << '\n'
        << "positives       " << report.positives << '\n'
        << "errors          " << report.error_list.size() << '\n'
        << "reduction time  "
        << std::chrono::duration_cast<std::chrono::microseconds>(report.stats.wall_clock)
               .count()
        << " us\n";
    for (const Disagreement& d : report.disagreement_list)
        out << "disagreement at index " << d.index << " (oracle "
            << (d.oracle_verdict ? "YES" : "NO") << ", solver "
            << (d.solver_verdict ? "YES" : "NO") << "):\n"
            << d.instance_text;
    for (const InstanceError& e : report.error_list)
        out << "error at index " << e.index << ": " << e.message << '\n';
    return out.str();
}

}  // namespace gbhard
