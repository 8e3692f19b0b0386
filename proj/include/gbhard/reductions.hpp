#pragma once

#include <chrono>
#include <cstdint>

#include "gbhard/levels.hpp"
#include "gbhard/problems.hpp"

namespace gbhard {

struct ReductionStats {
    std::uint64_t source_size = 0;            // elements in the source instance
    std::uint64_t output_cells_or_rooms = 0;  // grid cells, rooms, or crops
    std::chrono::nanoseconds wall_clock{0};
};

// Donkey Kong rooms produced by reduce_3cnf_to_dk have at most
// kDkCellBound * (num_vars + num_clauses) cells.
inline constexpr std::uint64_t kDkCellBound = 400;

// 3-CNF formula -> switch bank, irreversible height-2 drop, and one
// three-board gadget per clause on a BrickFloor baseline. Solvable exactly
// when the formula is satisfiable. Requires is_three_cnf.
DonkeyKongRoom reduce_3cnf_to_dk(const CnfFormula& f, ReductionStats* stats = nullptr);

// Skull-door graph -> one treasure room per vertex plus a terminal room `u`
// reached from the pivot vertex through an initially-Open door; every other
// door is Closed and every room except u's holds a key. Requires a valid,
// non-empty skull-door graph.
WarioLevel reduce_hamcycle_to_wario(const DirectedGraph& g, ReductionStats* stats = nullptr);

// Unbounded knapsack -> single-tile farm: capacity becomes the season length,
// each item becomes a crop with grow_days = weight and sale_price = value.
HarvestMoonInstance reduce_knapsack_to_harvest(const KnapsackInstance& k,
                                               ReductionStats* stats = nullptr);

// Push-1 grid -> all-Hard room of the same dimensions; blocks become Weights,
// the robot cell becomes the start, the win cell carries over.
MoleManiaRoom reduce_push1_to_mole(const Push1Instance& p, ReductionStats* stats = nullptr);

}  // namespace gbhard
