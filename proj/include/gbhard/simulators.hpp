#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbhard/levels.hpp"

namespace gbhard {

// One solver verdict. When solvable, `witness` holds an action sequence that
// replays from the start state to the winning condition.
struct Decision {
    bool solvable = false;
    std::uint64_t states_explored = 0;
    std::optional<std::vector<std::string>> witness;

    bool operator==(const Decision&) const = default;
};

// Mario's abstract kinematics. The constants are part of the level format
// version: changing any of them is a format bump.
struct DkMovementRules {
    static constexpr int step_up_max = 1;        // may ascend height-1 steps
    static constexpr bool safe_fall_unlimited = true;
    static constexpr int jump_gap = 0;           // no horizontal jumps
    static constexpr const char* toggle_reach = "own-cell";
    static constexpr const char* version = "dk-moves/1";
};

// BFS over (mario cell, switch state vector) settled states.
// Witness actions: "L", "R" (walk one cell, stepping up height-1 ledges and
// falling any distance), "T" (toggle the switch on Mario's cell).
Decision solve_donkey_kong(const DonkeyKongRoom& room, std::uint64_t state_cap = 1ull << 22);

// BFS over (room, keys still present, door states, treasures collected).
// Witness actions: "O<i>" (spend the current room's key opening closed door
// i), "D<i>" (traverse open door i).
Decision solve_wario(const WarioLevel& level, std::uint64_t state_cap = 1ull << 24);

// Depth-first search with memoization over a tile's remaining days; tiles are
// independent and identical. Witness actions: "<day>,<tile>,<crop>" planting
// triples. Refuses instances with num_tiles * days > kw_cap.
Decision solve_harvest(const HarvestMoonInstance& inst, long long kw_cap = 10'000'000);

struct MoleSearchStats {
    std::uint64_t above_states = 0;
    std::uint64_t below_states = 0;
};

// BFS over (muddy cell, layer, weight set).
// Witness actions: "U", "D", "L", "R" (move/push), "Dig" (descend through a
// Soft tile, or surface through a weight-free Soft tile).
Decision solve_mole(const MoleManiaRoom& room, std::uint64_t state_cap = 1ull << 23,
                    MoleSearchStats* stats = nullptr);

// Witness checkers: apply each action under the game rules, rejecting any
// illegal step, and report whether the winning condition holds at the end.
bool replay_donkey_kong(const DonkeyKongRoom& room, const std::vector<std::string>& actions);
bool replay_wario(const WarioLevel& level, const std::vector<std::string>& actions);
bool replay_harvest(const HarvestMoonInstance& inst, const std::vector<std::string>& actions);
bool replay_mole(const MoleManiaRoom& room, const std::vector<std::string>& actions);

Decision solve(const Level& level);
bool replay(const Level& level, const std::vector<std::string>& actions);

}  // namespace gbhard
