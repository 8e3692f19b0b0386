// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Campaign parameters (counts, seeds, size bounds, time
// budgets) are fixed here and must not be loosened.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gbhard/problems.hpp"
#include "gbhard/reductions.hpp"
#include "gbhard/simulators.hpp"
#include "gbhard/verify.hpp"

using namespace gbhard;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CampaignSpec spec_for(CampaignPair pair, int count) {
    CampaignSpec spec;
    spec.pair = pair;
    spec.count = count;
    spec.seed = 42;
    spec.sizes.max_vars = 8;
    spec.sizes.max_clauses = 10;
    spec.sizes.max_vertices = 10;
    spec.sizes.knapsack = KnapsackGenBounds{30, 6, 10, 20};
    spec.sizes.push1 = Push1GenBounds{4, 3};
    return spec;
}

struct CampaignRun {
    CampaignReport report;
    double elapsed = 0;
};

CampaignRun timed_campaign(CampaignPair pair, int count) {
    const auto start = std::chrono::steady_clock::now();
    CampaignRun run;
    run.report = run_campaign(spec_for(pair, count));
    run.elapsed = seconds_since(start);
    return run;
}

void equivalence_criterion(int criterion, CampaignPair pair, int count, double budget,
                           bool require_both_outcomes) {
    std::ostringstream detail;
    try {
        CampaignRun run = timed_campaign(pair, count);
        bool ok = run.report.agreements == std::uint64_t(count) &&
                  run.report.disagreements == 0 && run.elapsed < budget;
        if (require_both_outcomes)
            ok = ok && run.report.positives > 0 &&
                 run.report.positives < std::uint64_t(count);
        detail << campaign_pair_name(pair) << " " << run.report.agreements << "/" << count
               << " agreements, " << run.report.positives << " positives, "
               << run.elapsed << " s (budget " << budget << " s)";
        report(criterion, ok, detail.str());
    } catch (const std::exception& e) {
        report(criterion, false, std::string(campaign_pair_name(pair)) + " threw: " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    // Criteria 1-4: oracle-vs-solver equivalence campaigns at the pinned
    // sizes, seeds, and time budgets.
    equivalence_criterion(1, CampaignPair::CnfDk, 200, 120.0, true);
    equivalence_criterion(2, CampaignPair::HamWario, 100, 120.0, true);
    equivalence_criterion(3, CampaignPair::KnapHarvest, 500, 30.0, true);
    equivalence_criterion(4, CampaignPair::Push1Mole, 200, 60.0, true);

    // Criterion 5: degree identity and pivot correctness over 1000 generated
    // skull-door graphs; the directed triangle is rejected.
    try {
        SplitMix64 rng(42);
        bool ok = true;
        std::string why = "alpha == beta and pivot (2-in,1-out) on 1000 graphs";
        for (int i = 0; i < 1000 && ok; ++i) {
            DirectedGraph g = gen_random_skull_graph(rng.next(), 1 + int(rng.below(5)));
            SkullDoorReport r = validate_skull_door_graph(g);
            if (!r.is_valid || r.alpha != r.beta) {
                ok = false;
                why = "graph " + std::to_string(i) + " violated the degree identity";
                break;
            }
            const int pivot = find_pivot_vertex(g);
            int in = 0, out = 0;
            for (const GraphEdge& e : g.edges) {
                if (e.target == pivot) ++in;
                if (e.source == pivot) ++out;
            }
            if (in != 2 || out != 1) {
                ok = false;
                why = "pivot of graph " + std::to_string(i) + " has profile (" +
                      std::to_string(in) + "," + std::to_string(out) + ")";
                break;
            }
        }
        DirectedGraph triangle;
        triangle.num_vertices = 3;
        triangle.edges = {{0, 1}, {1, 2}, {2, 0}};
        if (validate_skull_door_graph(triangle).is_valid) {
            ok = false;
            why = "directed triangle was not rejected";
        }
        report(5, ok, why + "; triangle rejected");
    } catch (const std::exception& e) {
        report(5, false, std::string("threw: ") + e.what());
    }

    // Criterion 6: size/structure bounds on every reduction, re-checked here
    // independently of the campaign-internal assertions.
    try {
        bool ok = true;
        std::string why;
        SplitMix64 rng(42);
        for (int i = 0; i < 200 && ok; ++i) {
            const int n = 1 + int(rng.below(8));
            const int m = int(rng.below(11));
            ReductionStats stats;
            reduce_3cnf_to_dk(gen_random_3cnf(rng.next(), n, m), &stats);
            if (stats.output_cells_or_rooms > kDkCellBound * std::uint64_t(n + m)) {
                ok = false;
                why = "cnf-dk cell bound exceeded at instance " + std::to_string(i);
            }

            DirectedGraph g = gen_random_skull_graph(rng.next(), 1 + int(rng.below(5)));
            WarioLevel level = reduce_hamcycle_to_wario(g);
            if (level.rooms.size() != std::size_t(g.num_vertices) + 1 ||
                level.doors.size() != g.edges.size() + 1) {
                ok = false;
                why = "ham-wario counts wrong at instance " + std::to_string(i);
            }

            KnapsackInstance k = gen_random_knapsack(rng.next(), KnapsackGenBounds{30, 6, 10, 20});
            HarvestMoonInstance inst = reduce_knapsack_to_harvest(k);
            bool crops_equal = inst.crops.size() == k.items.size();
            for (std::size_t c = 0; crops_equal && c < k.items.size(); ++c)
                crops_equal = inst.crops[c].grow_days == k.items[c].weight &&
                              inst.crops[c].sale_price == k.items[c].value;
            if (inst.num_tiles != 1 || inst.days != k.capacity ||
                inst.target_revenue != k.target || !crops_equal) {
                ok = false;
                why = "knap-harvest fields differ at instance " + std::to_string(i);
            }

            Push1Instance p = gen_random_push1(rng.next(), Push1GenBounds{4, 3});
            MoleManiaRoom room = reduce_push1_to_mole(p);
            if (room.width != p.width || room.height != p.height ||
                room.weights.size() != p.blocks.size()) {
                ok = false;
                why = "push1-mole dimensions differ at instance " + std::to_string(i);
            }
        }
        if (ok)
            why = "wario rooms |V|+1 and doors |E|+1, mole and harvest exact, dk cells <= " +
                  std::to_string(kDkCellBound) + "*(n+m), over 200 instances each";
        report(6, ok, why);
    } catch (const std::exception& e) {
        report(6, false, std::string("threw: ") + e.what());
    }

    // Criterion 7: each seeded bug yields at least one disagreement in a
    // 100-instance campaign.
    try {
        const std::pair<CampaignPair, Mutation> bugs[] = {
            {CampaignPair::CnfDk, Mutation::DkFlipPolarity},
            {CampaignPair::HamWario, Mutation::WarioDropKey},
            {CampaignPair::KnapHarvest, Mutation::HarvestDayOffByOne},
            {CampaignPair::Push1Mole, Mutation::MoleShiftWeight},
        };
        bool ok = true;
        std::ostringstream detail;
        detail << "disagreements";
        for (const auto& [pair, mutation] : bugs) {
            CampaignSpec spec = spec_for(pair, 100);
            spec.mutation = mutation;
            CampaignReport r = run_campaign(spec);
            detail << " " << campaign_pair_name(pair) << "=" << r.disagreements;
            if (r.disagreements < 1) ok = false;
        }
        report(7, ok, detail.str() + " (each seeded bug must be caught)");
    } catch (const std::exception& e) {
        report(7, false, std::string("threw: ") + e.what());
    }

    // Criterion 8: reruns are byte-identical and every sampled SOLVABLE
    // verdict replays to a win.
    try {
        bool ok = true;
        std::string why;

        const std::pair<CampaignPair, int> reruns[] = {{CampaignPair::CnfDk, 50},
                                                       {CampaignPair::HamWario, 50},
                                                       {CampaignPair::KnapHarvest, 100},
                                                       {CampaignPair::Push1Mole, 50}};
        for (const auto& [pair, count] : reruns) {
            const std::string a = report_to_json(run_campaign(spec_for(pair, count)));
            const std::string b = report_to_json(run_campaign(spec_for(pair, count)));
            if (a != b) {
                ok = false;
                why = std::string("report rerun differs for ") + campaign_pair_name(pair);
            }
        }

        // Witness replay for instances sampled from the criteria-1..4
        // streams: the same seed ^ i derivation the campaigns use.
        int replayed = 0;
        for (int i = 0; i < 40 && ok; ++i) {
            const std::uint64_t instance_seed = 42ull ^ std::uint64_t(i);
            {
                SplitMix64 rng(instance_seed);
                const int n = 1 + int(rng.below(8));
                const int m = int(rng.below(11));
                CnfFormula f = gen_random_3cnf(rng.next(), n, m);
                DonkeyKongRoom room = reduce_3cnf_to_dk(f);
                if (serialize(room) != serialize(reduce_3cnf_to_dk(f))) {
                    ok = false;
                    why = "dk level bytes differ between runs";
                    break;
                }
                Decision d = solve_donkey_kong(room);
                if (d.solvable && !replay_donkey_kong(room, *d.witness)) {
                    ok = false;
                    why = "dk witness failed to replay at instance " + std::to_string(i);
                }
                replayed += d.solvable;
            }
            {
                SplitMix64 rng(instance_seed);
                const int pairs = 1 + int(rng.below(5));
                WarioLevel level =
                    reduce_hamcycle_to_wario(gen_random_skull_graph(rng.next(), pairs));
                Decision w = solve_wario(level);
                if (w.solvable && !replay_wario(level, *w.witness)) {
                    ok = false;
                    why = "wario witness failed to replay at instance " + std::to_string(i);
                }
                replayed += w.solvable;
            }
            {
                SplitMix64 rng(instance_seed);
                HarvestMoonInstance inst = reduce_knapsack_to_harvest(
                    gen_random_knapsack(rng.next(), KnapsackGenBounds{30, 6, 10, 20}));
                Decision h = solve_harvest(inst);
                if (h.solvable && !replay_harvest(inst, *h.witness)) {
                    ok = false;
                    why = "harvest witness failed to replay at instance " + std::to_string(i);
                }
                replayed += h.solvable;
            }
            {
                SplitMix64 rng(instance_seed);
                MoleManiaRoom mole = reduce_push1_to_mole(
                    gen_random_push1(rng.next(), Push1GenBounds{4, 3}));
                Decision m = solve_mole(mole);
                if (m.solvable && !replay_mole(mole, *m.witness)) {
                    ok = false;
                    why = "mole witness failed to replay at instance " + std::to_string(i);
                }
                replayed += m.solvable;
            }
        }

        if (ok && !cli_path.empty()) {
            const std::string cmd = cli_path +
                                    " verify --pair knap-harvest --count 50 --seed 42 "
                                    "2>/dev/null >/tmp/gbhard_acc_rerun";
            if (std::system((cmd + "_a").c_str()) != 0 ||
                std::system((cmd + "_b").c_str()) != 0 ||
                read_file("/tmp/gbhard_acc_rerun_a") != read_file("/tmp/gbhard_acc_rerun_b") ||
                read_file("/tmp/gbhard_acc_rerun_a").empty()) {
                ok = false;
                why = "cli verify rerun was not byte-identical";
            }
        }

        if (ok)
            why = "reruns byte-identical; " + std::to_string(replayed) +
                  " solvable witnesses replayed";
        report(8, ok, why);
    } catch (const std::exception& e) {
        report(8, false, std::string("threw: ") + e.what());
    }

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures;
}
