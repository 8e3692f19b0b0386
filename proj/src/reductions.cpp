#include "gbhard/reductions.hpp"

#include <algorithm>
#include <chrono>

namespace gbhard {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t cnf_size(const CnfFormula& f) {
    std::uint64_t literals = 0;
    for (const Clause& c : f.clauses) literals += c.size();
    return static_cast<std::uint64_t>(f.num_vars) + literals;
}

}  // namespace

// The room is 12 rows tall. Row 11 is a BrickFloor baseline. Mario starts on
// an elevated platform holding the switch bank, drops two rows (one way,
// freezing the switches), and then crosses one gadget per clause. Each gadget
// is a 27-column block:
//
//   - a tower of six floating 3-cell Block steps (height-1 each) rising from
//     the baseline bump at columns 15..17 up to stand height 4,
//   - three terraces (Block slabs at rows 8, 6, 4, entered from the tower by
//     height-1 step-ups at stands 8, 6, 4 respectively),
//   - one slide board per literal, hanging as a two-cell trapdoor in its
//     terrace: top terrace = literal 1, middle = literal 2, bottom = literal
//     3. An open board is a hole: the walker falls through to the baseline
//     pocket right of the tower wall and drains rightward to the next gadget.
//     A closed board is solid floor leading to a sealed dead end.
//
// The pocket is reachable only through a board, so a gadget is passable
// exactly when at least one of its three boards is open under the frozen
// switch assignment.
DonkeyKongRoom reduce_3cnf_to_dk(const CnfFormula& f, ReductionStats* stats) {
    const auto started = Clock::now();
    if (!is_three_cnf(f))
        throw std::invalid_argument("reduce_3cnf_to_dk requires a 3-CNF formula");
    for (const Clause& clause : f.clauses)
        for (const Literal& lit : clause)
            if (lit.var < 1 || lit.var > f.num_vars)
                throw std::invalid_argument("reduce_3cnf_to_dk: literal variable " +
                                            std::to_string(lit.var) + " out of range");

    const int n = f.num_vars;
    const int m = static_cast<int>(f.clauses.size());
    constexpr int kHeight = 12;
    constexpr int kGadgetWidth = 27;
    const int width = (n + 3) + kGadgetWidth * m + 2;

    DonkeyKongRoom room;
    room.width = width;
    room.height = kHeight;
    room.tiles.assign(static_cast<std::size_t>(width) * kHeight, DkTile::Empty);

    // Baseline.
    for (int c = 0; c < width; ++c) room.set_tile({c, 11}, DkTile::BrickFloor);

    // Switch platform: BrickFloor surface over a Block body, two rows above
    // the baseline so leaving it is a height-2 drop that cannot be climbed
    // back.
    for (int c = 0; c <= n; ++c) {
        room.set_tile({c, 9}, DkTile::BrickFloor);
        room.set_tile({c, 10}, DkTile::Block);
    }
    room.start = Cell{0, 8};
    for (int i = 1; i <= n; ++i) {
        room.set_tile({i, 8}, DkTile::Switch);
        room.switches.push_back(Cell{i, 8});
    }

    for (int j = 0; j < m; ++j) {
        const int g = (n + 3) + kGadgetWidth * j;
        // Tower steps, highest first: step k has its riser at row 5+k,
        // columns g+3k .. g+3k+2.
        for (int k = 0; k < 6; ++k)
            for (int c = 0; c < 3; ++c) room.set_tile({g + 3 * k + c, 5 + k}, DkTile::Block);
        // Wall sealing the pocket from the entry side.
        room.set_tile({g + 18, 9}, DkTile::Block);
        room.set_tile({g + 18, 10}, DkTile::Block);
        // Terrace slabs with a one-column gap where the board hangs.
        for (int c = g + 15; c <= g + 21; ++c)
            if (c != g + 20) room.set_tile({c, 8}, DkTile::Block);
        for (int c = g + 9; c <= g + 23; ++c)
            if (c != g + 22) room.set_tile({c, 6}, DkTile::Block);
        for (int c = g + 3; c <= g + 25; ++c)
            if (c != g + 24) room.set_tile({c, 4}, DkTile::Block);
        // Dead-end walls sealing each terrace's far side.
        room.set_tile({g + 21, 7}, DkTile::Block);
        room.set_tile({g + 23, 5}, DkTile::Block);
        room.set_tile({g + 25, 3}, DkTile::Block);
        room.set_tile({g + 25, 2}, DkTile::Block);

        // Boards: literal 1 on the top terrace, 2 in the middle, 3 at the
        // bottom; a positive literal's board opens while its switch is on.
        const Cell tops[3] = {{g + 24, 4}, {g + 22, 6}, {g + 20, 8}};
        for (int t = 0; t < 3; ++t) {
            const Literal& lit = f.clauses[j][t];
            SlideBoard board;
            board.cells = {tops[t], Cell{tops[t].col, tops[t].row + 1}};
            board.controlling_switch = lit.var - 1;
            board.polarity =
                lit.negated ? BoardPolarity::OpenWhenOff : BoardPolarity::OpenWhenOn;
            room.set_tile(board.cells[0], DkTile::SlideBoardTop);
            room.set_tile(board.cells[1], DkTile::SlideBoardBody);
            room.boards.push_back(std::move(board));
        }
    }

    room.win = Cell{width - 1, 10};

    if (stats) {
        stats->source_size = cnf_size(f);
        stats->output_cells_or_rooms = static_cast<std::uint64_t>(width) * kHeight;
        stats->wall_clock = Clock::now() - started;
    }
    return room;
}

WarioLevel reduce_hamcycle_to_wario(const DirectedGraph& g, ReductionStats* stats) {
    const auto started = Clock::now();
    if (g.num_vertices < 1)
        throw std::invalid_argument("reduce_hamcycle_to_wario requires a non-empty graph");
    const int pivot = find_pivot_vertex(g);  // also rejects invalid skull-door graphs

    WarioLevel level;
    const int terminal = g.num_vertices;  // the new room reached last
    level.rooms.assign(g.num_vertices + 1, WarioRoom{/*treasure=*/true, /*key=*/true});
    level.rooms[terminal].key = false;
    for (const GraphEdge& e : g.edges)
        level.doors.push_back(WarioDoor{e.source, e.target, DoorState::Closed});
    level.doors.push_back(WarioDoor{pivot, terminal, DoorState::Open});
    level.start_room = pivot;

    if (stats) {
        stats->source_size = static_cast<std::uint64_t>(g.num_vertices) + g.edges.size();
        stats->output_cells_or_rooms = level.rooms.size();
        stats->wall_clock = Clock::now() - started;
    }
    return level;
}

HarvestMoonInstance reduce_knapsack_to_harvest(const KnapsackInstance& k,
                                               ReductionStats* stats) {
    const auto started = Clock::now();
    auto violations = validate_knapsack(k);
    if (!violations.empty())
        throw std::invalid_argument("reduce_knapsack_to_harvest: invalid instance: " +
                                    violations[0]);

    HarvestMoonInstance inst;
    inst.num_tiles = 1;
    inst.days = k.capacity;
    inst.target_revenue = k.target;
    for (const KnapsackItem& item : k.items)
        inst.crops.push_back(HarvestCrop{item.weight, item.value});

    if (stats) {
        stats->source_size = 2 + 2 * static_cast<std::uint64_t>(k.items.size());
        stats->output_cells_or_rooms = inst.crops.size();
        stats->wall_clock = Clock::now() - started;
    }
    return inst;
}

MoleManiaRoom reduce_push1_to_mole(const Push1Instance& p, ReductionStats* stats) {
    const auto started = Clock::now();
    auto violations = validate_push1(p);
    if (!violations.empty())
        throw std::invalid_argument("reduce_push1_to_mole: invalid instance: " + violations[0]);

    MoleManiaRoom room;
    room.width = p.width;
    room.height = p.height;
    // All-Hard floor keeps the game on the surface layer.
    room.floor.assign(static_cast<std::size_t>(p.width) * p.height, MoleFloor::Hard);
    room.weights = p.blocks;
    std::sort(room.weights.begin(), room.weights.end());
    room.start = p.robot;
    room.win = p.win;

    if (stats) {
        stats->source_size = static_cast<std::uint64_t>(p.width) * p.height;
        stats->output_cells_or_rooms = static_cast<std::uint64_t>(room.width) * room.height;
        stats->wall_clock = Clock::now() - started;
    }
    return room;
}

}  // namespace gbhard
