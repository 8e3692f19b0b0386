// Exhaustive small-instance sweeps: every source instance up to a fixed size
// is compiled and both sides are decided. Slower than the unit suites but
// still well under a minute; catches construction edge cases that random
// sampling can miss.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gbhard/problems.hpp"
#include "gbhard/reductions.hpp"
#include "gbhard/simulators.hpp"

using namespace gbhard;

TEST_CASE("every 3-CNF formula with n <= 2, m <= 2 translates faithfully") {
    const int n = 2;
    std::vector<Clause> all_clauses;
    for (int v1 = 1; v1 <= n; ++v1)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int v2 = 1; v2 <= n; ++v2)
                for (int s2 = 0; s2 < 2; ++s2)
                    for (int v3 = 1; v3 <= n; ++v3)
                        for (int s3 = 0; s3 < 2; ++s3)
                            all_clauses.push_back(Clause{Literal{v1, s1 == 1},
                                                         Literal{v2, s2 == 1},
                                                         Literal{v3, s3 == 1}});
    REQUIRE(all_clauses.size() == 64);

    int checked = 0, positives = 0;
    auto check_formula = [&](const CnfFormula& f) {
        const bool expected = sat_oracle(f);
        const DonkeyKongRoom room = reduce_3cnf_to_dk(f);
        REQUIRE(validate(room).empty());
        const Decision d = solve_donkey_kong(room);
        REQUIRE_MESSAGE(d.solvable == expected, serialize_dimacs(f));
        if (d.solvable) REQUIRE(replay_donkey_kong(room, *d.witness));
        ++checked;
        positives += expected;
    };

    check_formula(CnfFormula{n, {}});
    for (const Clause& c1 : all_clauses) check_formula(CnfFormula{n, {c1}});
    for (const Clause& c1 : all_clauses)
        for (const Clause& c2 : all_clauses) check_formula(CnfFormula{n, {c1, c2}});
    CHECK(checked == 1 + 64 + 64 * 64);
    CHECK(positives > 0);
    CHECK(positives < checked);
}

TEST_CASE("every one- and two-pair skull-door stub matching translates faithfully") {
    // All ways of wiring out-stubs to in-stubs, self-loop-free, for the
    // degree profile with `pairs` vertices of each kind.
    for (int pairs : {1, 2}) {
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
        std::sort(in_stubs.begin(), in_stubs.end());

        int graphs = 0, positives = 0;
        do {
            bool self_loop = false;
            for (std::size_t i = 0; i < out_stubs.size(); ++i)
                if (out_stubs[i] == in_stubs[i]) self_loop = true;
            if (self_loop) continue;
            DirectedGraph g;
            g.num_vertices = 2 * pairs;
            for (std::size_t i = 0; i < out_stubs.size(); ++i)
                g.edges.push_back(GraphEdge{out_stubs[i], in_stubs[i]});
            REQUIRE(validate_skull_door_graph(g).is_valid);

            const bool expected = ham_cycle_oracle(g);
            const WarioLevel level = reduce_hamcycle_to_wario(g);
            REQUIRE(validate(level).empty());
            const Decision d = solve_wario(level);
            REQUIRE_MESSAGE(d.solvable == expected, serialize_graph(g));
            if (d.solvable) REQUIRE(replay_wario(level, *d.witness));
            ++graphs;
            positives += expected;
        } while (std::next_permutation(in_stubs.begin(), in_stubs.end()));
        CHECK(graphs > 0);
        if (pairs == 2) {
            CHECK(positives > 0);
            CHECK(positives < graphs);
        }
    }
}

TEST_CASE("every tiny knapsack instance translates faithfully") {
    // All instances with capacity <= 5, one or two items, weights <= 3,
    // values <= 2, and every distinguishing target.
    int checked = 0, positives = 0;
    auto check_instance = [&](KnapsackInstance k) {
        for (long long target : {0LL, 1LL, 2LL, 3LL, 5LL, 8LL}) {
            k.target = target;
            const bool expected = knapsack_oracle(k);
            const HarvestMoonInstance inst = reduce_knapsack_to_harvest(k);
            REQUIRE(validate(inst).empty());
            const Decision d = solve_harvest(inst);
            REQUIRE_MESSAGE(d.solvable == expected, serialize_knapsack(k));
            if (d.solvable) REQUIRE(replay_harvest(inst, *d.witness));
            ++checked;
            positives += expected;
        }
    };
    for (long long capacity = 0; capacity <= 5; ++capacity)
        for (long long w1 = 1; w1 <= 3; ++w1)
            for (long long v1 = 0; v1 <= 2; ++v1) {
                check_instance(KnapsackInstance{capacity, 0, {{w1, v1}}});
                for (long long w2 = 1; w2 <= 3; ++w2)
                    for (long long v2 = 0; v2 <= 2; ++v2)
                        check_instance(
                            KnapsackInstance{capacity, 0, {{w1, v1}, {w2, v2}}});
            }
    CHECK(positives > 0);
    CHECK(positives < checked);
}

TEST_CASE("every push-1 grid up to 3x2 with up to 2 blocks translates faithfully") {
    int checked = 0, positives = 0;
    for (int width : {1, 2, 3})
        for (int height : {1, 2}) {
            const int cells = width * height;
            auto cell_of = [&](int idx) { return Cell{idx % width, idx / width}; };
            std::vector<std::vector<int>> block_sets{{}};
            for (int i = 0; i < cells; ++i) {
                block_sets.push_back({i});
                for (int j = i + 1; j < cells; ++j) block_sets.push_back({i, j});
            }
            for (int robot = 0; robot < cells; ++robot)
                for (int win = 0; win < cells; ++win)
                    for (const std::vector<int>& blocks : block_sets) {
                        Push1Instance p;
                        p.width = width;
                        p.height = height;
                        p.robot = cell_of(robot);
                        p.win = cell_of(win);
                        for (int b : blocks) p.blocks.push_back(cell_of(b));
                        if (!validate_push1(p).empty()) continue;  // block on robot

                        const bool expected = push1_oracle(p);
                        const MoleManiaRoom room = reduce_push1_to_mole(p);
                        REQUIRE(validate(room).empty());
                        const Decision d = solve_mole(room);
                        REQUIRE(d.solvable == expected);
                        if (d.solvable) REQUIRE(replay_mole(room, *d.witness));
                        ++checked;
                        positives += expected;
                    }
        }
    CHECK(checked > 500);
    CHECK(positives > 0);
    CHECK(positives < checked);
}
