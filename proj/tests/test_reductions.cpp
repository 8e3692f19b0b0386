#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gbhard/problems.hpp"
#include "gbhard/reductions.hpp"
#include "gbhard/simulators.hpp"
#include "gbhard/verify.hpp"

using namespace gbhard;

TEST_CASE("3cnf -> donkey kong: structure of a one-clause room") {
    CnfFormula f = parse_dimacs("p cnf 3 1\n1 2 3 0");
    ReductionStats stats;
    DonkeyKongRoom room = reduce_3cnf_to_dk(f, &stats);
    CHECK(validate(room).empty());
    CHECK(room.switches.size() == 3);
    REQUIRE(room.boards.size() == 3);
    for (const SlideBoard& b : room.boards) {
        CHECK(b.polarity == BoardPolarity::OpenWhenOn);
        REQUIRE(b.cells.size() == 2);
        CHECK(b.cells[0].col == b.cells[1].col);
        CHECK(b.cells[0].row + 1 == b.cells[1].row);
    }
    // Board t is wired to the t-th literal's variable.
    CHECK(room.boards[0].controlling_switch == 0);
    CHECK(room.boards[1].controlling_switch == 1);
    CHECK(room.boards[2].controlling_switch == 2);
    CHECK(stats.output_cells_or_rooms ==
          std::uint64_t(room.width) * std::uint64_t(room.height));
    CHECK(stats.source_size == 3 + 3);
}

TEST_CASE("3cnf -> donkey kong: mixed polarities and unsatisfiable input") {
    CnfFormula f = parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0");
    DonkeyKongRoom room = reduce_3cnf_to_dk(f);
    CHECK(room.switches.size() == 1);
    REQUIRE(room.boards.size() == 6);
    for (int t = 0; t < 3; ++t) {
        CHECK(room.boards[t].polarity == BoardPolarity::OpenWhenOn);
        CHECK(room.boards[3 + t].polarity == BoardPolarity::OpenWhenOff);
    }
    CHECK_FALSE(solve_donkey_kong(room).solvable);
}

TEST_CASE("3cnf -> donkey kong: empty formula is a stroll") {
    CnfFormula f{2, {}};
    DonkeyKongRoom room = reduce_3cnf_to_dk(f);
    CHECK(validate(room).empty());
    CHECK(room.boards.empty());
    CHECK(solve_donkey_kong(room).solvable);
}

TEST_CASE("3cnf -> donkey kong: rejects non-3-CNF input") {
    CHECK_THROWS_AS(reduce_3cnf_to_dk(parse_dimacs("p cnf 2 1\n1 2 0")),
                    std::invalid_argument);
    CnfFormula out_of_range{1, {{Literal{2, false}, Literal{1, false}, Literal{1, false}}}};
    CHECK_THROWS_AS(reduce_3cnf_to_dk(out_of_range), std::invalid_argument);
}

TEST_CASE("3cnf -> donkey kong: output stays within the cell bound") {
    SplitMix64 rng(61);
    for (int i = 0; i < 30; ++i) {
        const int n = 1 + int(rng.below(8));
        const int m = int(rng.below(11));
        ReductionStats stats;
        reduce_3cnf_to_dk(gen_random_3cnf(rng.next(), n, m), &stats);
        CHECK(stats.output_cells_or_rooms <= kDkCellBound * std::uint64_t(n + m));
    }
}

TEST_CASE("hamcycle -> wario: counts forced by the construction") {
    DirectedGraph g = parse_graph("2 3\n0 1\n0 1\n1 0\n");
    ReductionStats stats;
    WarioLevel level = reduce_hamcycle_to_wario(g, &stats);
    CHECK(validate(level).empty());
    REQUIRE(level.rooms.size() == 3);
    CHECK(level.doors.size() == 4);
    CHECK(level.start_room == 1);  // the pivot vertex
    // The single extra door is open and leads from the pivot to the new room.
    int open_doors = 0;
    for (const WarioDoor& d : level.doors)
        if (d.initial_state == DoorState::Open) {
            ++open_doors;
            CHECK(d.from_room == 1);
            CHECK(d.to_room == 2);
        }
    CHECK(open_doors == 1);
    // Every room has a treasure; every room but the terminal one has a key.
    for (const WarioRoom& r : level.rooms) CHECK(r.treasure);
    CHECK(level.rooms[0].key);
    CHECK(level.rooms[1].key);
    CHECK_FALSE(level.rooms[2].key);
    CHECK(stats.output_cells_or_rooms == 3);

    SplitMix64 rng(67);
    for (int i = 0; i < 30; ++i) {
        DirectedGraph random = gen_random_skull_graph(rng.next(), 1 + int(rng.below(5)));
        WarioLevel reduced = reduce_hamcycle_to_wario(random);
        CHECK(reduced.rooms.size() == std::size_t(random.num_vertices) + 1);
        CHECK(reduced.doors.size() == random.edges.size() + 1);
        std::size_t keys = 0;
        for (const WarioRoom& r : reduced.rooms) keys += r.key;
        CHECK(keys == std::size_t(random.num_vertices));
    }
}

TEST_CASE("hamcycle -> wario: rejects invalid inputs") {
    CHECK_THROWS_AS(reduce_hamcycle_to_wario(parse_graph("3 3\n0 1\n1 2\n2 0\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(reduce_hamcycle_to_wario(DirectedGraph{}), std::invalid_argument);
}

TEST_CASE("knapsack -> harvest moon: field-by-field translation") {
    KnapsackInstance k = parse_knapsack("10 10 2\n6 8\n5 5\n");
    ReductionStats stats;
    HarvestMoonInstance inst = reduce_knapsack_to_harvest(k, &stats);
    CHECK(inst.num_tiles == 1);
    CHECK(inst.days == 10);
    CHECK(inst.target_revenue == 10);
    REQUIRE(inst.crops.size() == 2);
    CHECK(inst.crops[0] == HarvestCrop{6, 8});
    CHECK(inst.crops[1] == HarvestCrop{5, 5});
    CHECK(stats.source_size == 2 + 4);

    HarvestMoonInstance empty = reduce_knapsack_to_harvest(KnapsackInstance{5, 0, {}});
    CHECK(validate(empty).empty());
    CHECK(solve_harvest(empty).solvable);

    CHECK_THROWS_AS(reduce_knapsack_to_harvest(KnapsackInstance{5, 0, {{0, 1}}}),
                    std::invalid_argument);
}

TEST_CASE("push1 -> mole mania: same grid, weights for blocks") {
    Push1Instance clear = parse_push1("R.W\n");
    MoleManiaRoom room = reduce_push1_to_mole(clear);
    CHECK(room.width == 3);
    CHECK(room.height == 1);
    CHECK(room.weights.empty());
    CHECK(room.start == Cell{0, 0});
    CHECK(room.win == Cell{2, 0});
    CHECK(std::all_of(room.floor.begin(), room.floor.end(),
                      [](MoleFloor f) { return f == MoleFloor::Hard; }));

    Push1Instance blocked = parse_push1("RBW\n");
    MoleManiaRoom reduced = reduce_push1_to_mole(blocked);
    CHECK(reduced.weights == std::vector<Cell>{{1, 0}});
    CHECK_FALSE(solve_mole(reduced).solvable);
    CHECK(solve_mole(reduced).solvable == push1_oracle(blocked));

    SplitMix64 rng(71);
    for (int i = 0; i < 30; ++i) {
        Push1Instance p = gen_random_push1(rng.next());
        MoleManiaRoom m = reduce_push1_to_mole(p);
        CHECK(m.width == p.width);
        CHECK(m.height == p.height);
        CHECK(m.weights.size() == p.blocks.size());
        CHECK(validate(m).empty());
    }
}

TEST_CASE("reductions are deterministic byte for byte") {
    CnfFormula f = gen_random_3cnf(97, 4, 5);
    CHECK(serialize(reduce_3cnf_to_dk(f)) == serialize(reduce_3cnf_to_dk(f)));

    DirectedGraph g = gen_random_skull_graph(97, 3);
    CHECK(serialize(reduce_hamcycle_to_wario(g)) == serialize(reduce_hamcycle_to_wario(g)));

    KnapsackInstance k = gen_random_knapsack(97);
    CHECK(serialize(reduce_knapsack_to_harvest(k)) ==
          serialize(reduce_knapsack_to_harvest(k)));

    Push1Instance p = gen_random_push1(97);
    CHECK(serialize(reduce_push1_to_mole(p)) == serialize(reduce_push1_to_mole(p)));
}

TEST_CASE("reduction outputs always validate") {
    SplitMix64 rng(79);
    for (int i = 0; i < 25; ++i) {
        CHECK(validate(reduce_3cnf_to_dk(
                           gen_random_3cnf(rng.next(), 1 + int(rng.below(6)),
                                           int(rng.below(8)))))
                  .empty());
        CHECK(validate(reduce_hamcycle_to_wario(
                           gen_random_skull_graph(rng.next(), 1 + int(rng.below(4)))))
                  .empty());
        CHECK(validate(reduce_knapsack_to_harvest(gen_random_knapsack(rng.next()))).empty());
        CHECK(validate(reduce_push1_to_mole(gen_random_push1(rng.next()))).empty());
    }
}

TEST_CASE("spec examples: solver verdict equals oracle verdict") {
    CnfFormula sat_f = parse_dimacs("p cnf 1 1\n1 1 1 0");
    CHECK(solve_donkey_kong(reduce_3cnf_to_dk(sat_f)).solvable == sat_oracle(sat_f));

    DirectedGraph g = parse_graph("2 3\n0 1\n0 1\n1 0\n");
    CHECK(solve_wario(reduce_hamcycle_to_wario(g)).solvable == ham_cycle_oracle(g));

    KnapsackInstance k = parse_knapsack("10 10 2\n6 8\n5 5\n");
    CHECK(solve_harvest(reduce_knapsack_to_harvest(k)).solvable == knapsack_oracle(k));
    k.target = 11;
    CHECK(solve_harvest(reduce_knapsack_to_harvest(k)).solvable == knapsack_oracle(k));

    Push1Instance p = parse_push1("RBW\n...\n");
    CHECK(solve_mole(reduce_push1_to_mole(p)).solvable == push1_oracle(p));
}
