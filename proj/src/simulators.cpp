#include "gbhard/simulators.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "gbhard/errors.hpp"

namespace gbhard {

namespace {

void require_valid_level(const std::vector<std::string>& violations, const char* solver) {
    if (!violations.empty())
        throw std::invalid_argument(std::string(solver) + ": invalid level: " + violations[0]);
}

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
    return h;
}

}  // namespace

//// Donkey Kong //////////////////////////////////////////////////////////////

namespace {

// Static geometry shared by the solver and the witness replayer.
struct DkWorld {
    const DonkeyKongRoom& room;
    std::vector<int> board_at;   // cell -> board index or -1
    std::vector<int> switch_at;  // cell -> switch index or -1

    explicit DkWorld(const DonkeyKongRoom& r) : room(r) {
        const std::size_t cells = static_cast<std::size_t>(r.width) * r.height;
        board_at.assign(cells, -1);
        switch_at.assign(cells, -1);
        for (std::size_t i = 0; i < r.boards.size(); ++i)
            for (Cell c : r.boards[i].cells)
                board_at[static_cast<std::size_t>(c.row) * r.width + c.col] =
                    static_cast<int>(i);
        for (std::size_t i = 0; i < r.switches.size(); ++i) {
            Cell c = r.switches[i];
            switch_at[static_cast<std::size_t>(c.row) * r.width + c.col] =
                static_cast<int>(i);
        }
    }

    bool board_open(int board, std::uint32_t mask) const {
        const SlideBoard& b = room.boards[board];
        const bool on = (mask >> b.controlling_switch) & 1;
        return b.polarity == BoardPolarity::OpenWhenOn ? on : !on;
    }

    bool solid(Cell c, std::uint32_t mask) const {
        if (c.row >= room.height) return true;  // the map edge is ground
        if (!room.in_bounds(c)) return false;
        switch (room.tile_at(c)) {
            case DkTile::BrickFloor:
            case DkTile::Block:
                return true;
            case DkTile::SlideBoardTop:
            case DkTile::SlideBoardBody: {
                int b = board_at[static_cast<std::size_t>(c.row) * room.width + c.col];
                return b >= 0 && !board_open(b, mask);
            }
            default:
                return false;
        }
    }

    bool enterable(Cell c, std::uint32_t mask) const {
        return room.in_bounds(c) && !solid(c, mask);
    }

    Cell settle(Cell c, std::uint32_t mask) const {
        while (!solid(Cell{c.col, c.row + 1}, mask)) ++c.row;
        return c;
    }

    int switch_index(Cell c) const {
        return switch_at[static_cast<std::size_t>(c.row) * room.width + c.col];
    }

    // Applies one action to a settled state; returns false if it is illegal.
    bool step(Cell& mario, std::uint32_t& mask, const std::string& action) const {
        if (action == "T") {
            int sw = switch_index(mario);
            if (sw < 0) return false;
            mask ^= 1u << sw;
            mario = settle(mario, mask);
            return true;
        }
        if (action != "L" && action != "R") return false;
        const int dx = action == "L" ? -1 : 1;
        Cell target{mario.col + dx, mario.row};
        if (enterable(target, mask)) {
            mario = settle(target, mask);
            return true;
        }
        Cell up{target.col, target.row - 1};
        if (room.in_bounds(target) && solid(target, mask) && enterable(up, mask)) {
            mario = up;  // stands on the height-1 step, already settled
            return true;
        }
        return false;
    }
};

const char* kDkActions[3] = {"L", "R", "T"};

}  // namespace

Decision solve_donkey_kong(const DonkeyKongRoom& room, std::uint64_t state_cap) {
    require_valid_level(validate(room), "solve_donkey_kong");
    if (room.switches.size() > 32)
        throw CapExceeded("solve_donkey_kong: more than 32 switches");
    DkWorld world(room);

    auto pack = [&](Cell c, std::uint32_t mask) {
        return (static_cast<std::uint64_t>(mask) << 32) |
               static_cast<std::uint32_t>(c.row * room.width + c.col);
    };
    auto unpack_cell = [&](std::uint64_t key) {
        const int idx = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
        return Cell{idx % room.width, idx / room.width};
    };
    auto unpack_mask = [](std::uint64_t key) { return static_cast<std::uint32_t>(key >> 32); };

    const Cell start = world.settle(room.start, 0);
    const std::uint64_t start_key = pack(start, 0);
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, const char*>> parent;
    parent.emplace(start_key, std::make_pair(start_key, nullptr));

    Decision decision;
    std::uint64_t win_key = 0;
    bool found = start == room.win;
    if (!found) {
        std::queue<std::uint64_t> frontier;
        frontier.push(start_key);
        while (!frontier.empty() && !found) {
            const std::uint64_t key = frontier.front();
            frontier.pop();
            const Cell mario = unpack_cell(key);
            const std::uint32_t mask = unpack_mask(key);
            for (const char* action : kDkActions) {
                Cell next = mario;
                std::uint32_t next_mask = mask;
                if (!world.step(next, next_mask, action)) continue;
                const std::uint64_t next_key = pack(next, next_mask);
                if (!parent.emplace(next_key, std::make_pair(key, action)).second) continue;
                if (parent.size() > state_cap)
                    throw CapExceeded("solve_donkey_kong: state cap " +
                                      std::to_string(state_cap) + " exceeded");
                if (next == room.win) {
                    win_key = next_key;
                    found = true;
                    break;
                }
                frontier.push(next_key);
            }
        }
    } else {
        win_key = start_key;
    }

    decision.states_explored = parent.size();
    decision.solvable = found;
    if (found) {
        std::vector<std::string> actions;
        for (std::uint64_t key = win_key; key != start_key;) {
            const auto& [prev, action] = parent.at(key);
            actions.push_back(action);
            key = prev;
        }
        std::reverse(actions.begin(), actions.end());
        decision.witness = std::move(actions);
    }
    return decision;
}

bool replay_donkey_kong(const DonkeyKongRoom& room, const std::vector<std::string>& actions) {
    if (!validate(room).empty()) return false;
    DkWorld world(room);
    Cell mario = world.settle(room.start, 0);
    std::uint32_t mask = 0;
    for (const std::string& action : actions)
        if (!world.step(mario, mask, action)) return false;
    return mario == room.win;
}

//// Wario Land ///////////////////////////////////////////////////////////////

namespace {

struct WarioState {
    std::uint32_t room = 0;
    std::uint64_t keys = 0;       // bit r set: room r's key is still present
    std::uint64_t doors = 0;      // bit d set: door d is open
    std::uint64_t treasures = 0;  // bit r set: room r's treasure collected

    bool operator==(const WarioState&) const = default;
};

struct WarioStateHash {
    std::size_t operator()(const WarioState& s) const {
        std::uint64_t h = 1469598103934665603ull;
        h = fnv_mix(h, s.room);
        h = fnv_mix(h, s.keys);
        h = fnv_mix(h, s.doors);
        h = fnv_mix(h, s.treasures);
        return static_cast<std::size_t>(h);
    }
};

struct WarioWorld {
    const WarioLevel& level;
    std::uint64_t treasure_mask = 0;

    explicit WarioWorld(const WarioLevel& l) : level(l) {
        for (std::size_t r = 0; r < l.rooms.size(); ++r)
            if (l.rooms[r].treasure) treasure_mask |= 1ull << r;
    }

    WarioState initial() const {
        WarioState s;
        s.room = static_cast<std::uint32_t>(level.start_room);
        for (std::size_t r = 0; r < level.rooms.size(); ++r)
            if (level.rooms[r].key) s.keys |= 1ull << r;
        for (std::size_t d = 0; d < level.doors.size(); ++d)
            if (level.doors[d].initial_state == DoorState::Open) s.doors |= 1ull << d;
        s.treasures = (1ull << s.room) & treasure_mask;
        return s;
    }

    bool won(const WarioState& s) const { return s.treasures == treasure_mask; }

    // "O<d>": spend the current room's key to open closed door d.
    // "D<d>": traverse open door d; entering a room collects its treasure.
    bool step(WarioState& s, const std::string& action) const {
        if (action.size() < 2 || (action[0] != 'O' && action[0] != 'D')) return false;
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(action.substr(1), &used);
            if (used + 1 != action.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
        if (d < 0 || d >= static_cast<int>(level.doors.size())) return false;
        const WarioDoor& door = level.doors[d];
        if (door.from_room != static_cast<int>(s.room)) return false;
        if (action[0] == 'O') {
            if (s.doors & (1ull << d)) return false;          // already open
            if (!(s.keys & (1ull << s.room))) return false;   // no key left here
            s.keys &= ~(1ull << s.room);
            s.doors |= 1ull << d;
            return true;
        }
        if (!(s.doors & (1ull << d))) return false;
        s.room = static_cast<std::uint32_t>(door.to_room);
        s.treasures |= (1ull << s.room) & treasure_mask;
        return true;
    }
};

}  // namespace

Decision solve_wario(const WarioLevel& level, std::uint64_t state_cap) {
    require_valid_level(validate(level), "solve_wario");
    if (level.rooms.size() > 64 || level.doors.size() > 64)
        throw CapExceeded("solve_wario: more than 64 rooms or doors");
    WarioWorld world(level);

    const WarioState start = world.initial();
    std::unordered_map<WarioState, std::pair<WarioState, std::string>, WarioStateHash> parent;
    parent.emplace(start, std::make_pair(start, std::string()));

    Decision decision;
    bool found = world.won(start);
    WarioState win_state = start;
    if (!found) {
        std::queue<WarioState> frontier;
        frontier.push(start);
        while (!frontier.empty() && !found) {
            const WarioState state = frontier.front();
            frontier.pop();
            for (std::size_t d = 0; d < level.doors.size() && !found; ++d) {
                for (char op : {'O', 'D'}) {
                    WarioState next = state;
                    const std::string action = op + std::to_string(d);
                    if (!world.step(next, action)) continue;
                    if (!parent.emplace(next, std::make_pair(state, action)).second) continue;
                    if (parent.size() > state_cap)
                        throw CapExceeded("solve_wario: state cap " +
                                          std::to_string(state_cap) + " exceeded");
                    if (world.won(next)) {
                        win_state = next;
                        found = true;
                        break;
                    }
                    frontier.push(next);
                }
            }
        }
    }

    decision.states_explored = parent.size();
    decision.solvable = found;
    if (found) {
        std::vector<std::string> actions;
        for (WarioState s = win_state; !(s == start);) {
            const auto& [prev, action] = parent.at(s);
            actions.push_back(action);
            s = prev;
        }
        std::reverse(actions.begin(), actions.end());
        decision.witness = std::move(actions);
    }
    return decision;
}

bool replay_wario(const WarioLevel& level, const std::vector<std::string>& actions) {
    if (!validate(level).empty()) return false;
    if (level.rooms.size() > 64 || level.doors.size() > 64) return false;
    WarioWorld world(level);
    WarioState s = world.initial();
    for (const std::string& action : actions)
        if (!world.step(s, action)) return false;
    return world.won(s);
}

//// Harvest Moon /////////////////////////////////////////////////////////////

namespace {

// Memoized depth-first evaluation of the best revenue from one tile with d
// days remaining. Evaluated iteratively so long seasons do not recurse.
struct HarvestMemo {
    const HarvestMoonInstance& inst;
    std::vector<long long> best;  // -1 = unknown
    std::uint64_t evaluated = 0;

    explicit HarvestMemo(const HarvestMoonInstance& i)
        : inst(i), best(static_cast<std::size_t>(i.days) + 1, -1) {}

    long long eval(long long days) {
        std::vector<long long> stack{days};
        while (!stack.empty()) {
            const long long d = stack.back();
            if (best[d] >= 0) {
                stack.pop_back();
                continue;
            }
            bool ready = true;
            long long value = 0;
            for (const HarvestCrop& crop : inst.crops) {
                if (crop.grow_days > d) continue;
                const long long rest = d - crop.grow_days;
                if (best[rest] < 0) {
                    stack.push_back(rest);
                    ready = false;
                } else {
                    value = std::max(value, crop.sale_price + best[rest]);
                }
            }
            if (ready) {
                best[d] = value;
                ++evaluated;
                stack.pop_back();
            }
        }
        return best[days];
    }
};

}  // namespace

Decision solve_harvest(const HarvestMoonInstance& inst, long long kw_cap) {
    require_valid_level(validate(inst), "solve_harvest");
    if (inst.num_tiles > 0 && inst.days > kw_cap / inst.num_tiles)
        throw CapExceeded("solve_harvest: tiles * days exceeds cap of " +
                          std::to_string(kw_cap));

    HarvestMemo memo(inst);
    const long long per_tile = memo.eval(inst.days);

    Decision decision;
    decision.states_explored = memo.evaluated;
    const __int128 total = static_cast<__int128>(per_tile) * inst.num_tiles;
    decision.solvable = total >= inst.target_revenue;
    if (!decision.solvable) return decision;

    // Planting schedule: every tile follows the same optimal plan; emit
    // plantings until the target revenue is covered.
    std::vector<std::string> actions;
    __int128 revenue = 0;
    for (long long tile = 0; tile < inst.num_tiles && revenue < inst.target_revenue; ++tile) {
        long long remaining = inst.days;
        while (remaining > 0 && memo.best[remaining] > 0 &&
               revenue < inst.target_revenue) {
            for (std::size_t i = 0; i < inst.crops.size(); ++i) {
                const HarvestCrop& crop = inst.crops[i];
                if (crop.grow_days > remaining) continue;
                if (crop.sale_price + memo.best[remaining - crop.grow_days] !=
                    memo.best[remaining])
                    continue;
                actions.push_back(std::to_string(inst.days - remaining) + "," +
                                  std::to_string(tile) + "," + std::to_string(i));
                revenue += crop.sale_price;
                remaining -= crop.grow_days;
                break;
            }
        }
    }
    decision.witness = std::move(actions);
    return decision;
}

bool replay_harvest(const HarvestMoonInstance& inst, const std::vector<std::string>& actions) {
    if (!validate(inst).empty()) return false;
    std::vector<std::pair<long long, long long>> tile_busy_until;  // (tile, next free day)
    __int128 revenue = 0;
    for (const std::string& action : actions) {
        long long day = 0, tile = 0, crop = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(action);
        if (!(in >> day >> c1 >> tile >> c2 >> crop) || c1 != ',' || c2 != ',') return false;
        if (in.rdbuf()->in_avail() != 0) return false;
        if (tile < 0 || tile >= inst.num_tiles) return false;
        if (crop < 0 || crop >= static_cast<long long>(inst.crops.size())) return false;
        const HarvestCrop& chosen = inst.crops[crop];
        if (day < 0 || day + chosen.grow_days > inst.days) return false;
        auto it = std::find_if(tile_busy_until.begin(), tile_busy_until.end(),
                               [&](const auto& p) { return p.first == tile; });
        if (it == tile_busy_until.end()) {
            tile_busy_until.emplace_back(tile, 0);
            it = std::prev(tile_busy_until.end());
        }
        if (day < it->second) return false;  // tile still growing a crop
        it->second = day + chosen.grow_days;
        revenue += chosen.sale_price;
    }
    return revenue >= inst.target_revenue;
}

//// Mole Mania ///////////////////////////////////////////////////////////////

namespace {

enum class MoleLayer : std::uint8_t { Above, Below };

struct MoleState {
    std::uint16_t muddy = 0;
    MoleLayer layer = MoleLayer::Above;
    std::vector<std::uint16_t> weights;  // sorted

    bool operator==(const MoleState&) const = default;
};

struct MoleStateHash {
    std::size_t operator()(const MoleState& s) const {
        std::uint64_t h = 1469598103934665603ull;
        h = fnv_mix(h, s.muddy);
        h = fnv_mix(h, s.layer == MoleLayer::Below ? 2 : 1);
        for (std::uint16_t w : s.weights) h = fnv_mix(h, w + 1);
        return static_cast<std::size_t>(h);
    }
};

struct MoleWorld {
    const MoleManiaRoom& room;

    explicit MoleWorld(const MoleManiaRoom& r) : room(r) {}

    MoleState initial() const {
        MoleState s;
        s.muddy = index(room.start);
        for (Cell w : room.weights) s.weights.push_back(index(w));
        std::sort(s.weights.begin(), s.weights.end());
        return s;
    }

    std::uint16_t index(Cell c) const {
        return static_cast<std::uint16_t>(c.row * room.width + c.col);
    }

    bool soft(std::uint16_t cell) const { return room.floor[cell] == MoleFloor::Soft; }

    static bool has_weight(const std::vector<std::uint16_t>& weights, std::uint16_t cell) {
        return std::binary_search(weights.begin(), weights.end(), cell);
    }

    bool won(const MoleState& s) const {
        return s.layer == MoleLayer::Above && s.muddy == index(room.win);
    }

    bool step(MoleState& s, const std::string& action) const {
        if (action == "Dig") {
            if (!soft(s.muddy)) return false;
            if (s.layer == MoleLayer::Above) {
                s.layer = MoleLayer::Below;
                return true;
            }
            if (has_weight(s.weights, s.muddy)) return false;  // cannot surface under a weight
            s.layer = MoleLayer::Above;
            return true;
        }
        int dcol = 0, drow = 0;
        if (action == "U") {
            drow = -1;
        } else if (action == "D") {
            drow = 1;
        } else if (action == "L") {
            dcol = -1;
        } else if (action == "R") {
            dcol = 1;
        } else {
            return false;
        }
        const int tc = s.muddy % room.width + dcol;
        const int tr = s.muddy / room.width + drow;
        if (tc < 0 || tc >= room.width || tr < 0 || tr >= room.height) return false;
        const std::uint16_t target = static_cast<std::uint16_t>(tr * room.width + tc);
        if (s.layer == MoleLayer::Below) {
            s.muddy = target;  // weights exist only above ground
            return true;
        }
        if (has_weight(s.weights, target)) {
            const int bc = tc + dcol;
            const int br = tr + drow;
            if (bc < 0 || bc >= room.width || br < 0 || br >= room.height) return false;
            const std::uint16_t beyond = static_cast<std::uint16_t>(br * room.width + bc);
            if (has_weight(s.weights, beyond)) return false;
            auto it = std::lower_bound(s.weights.begin(), s.weights.end(), target);
            s.weights.erase(it);
            s.weights.insert(std::lower_bound(s.weights.begin(), s.weights.end(), beyond),
                             beyond);
        }
        s.muddy = target;
        return true;
    }
};

const char* kMoleActions[5] = {"U", "D", "L", "R", "Dig"};

std::uint64_t mole_state_bound(std::uint64_t cells, std::uint64_t weights,
                               std::uint64_t limit) {
    std::uint64_t bound = 1;
    for (std::uint64_t i = 0; i < weights; ++i) {
        if (bound > limit) return limit + 1;
        bound = bound * (cells - i) / (i + 1);
    }
    if (bound > limit / std::max<std::uint64_t>(2 * cells, 1)) return limit + 1;
    return bound * cells * 2;
}

}  // namespace

Decision solve_mole(const MoleManiaRoom& room, std::uint64_t state_cap,
                    MoleSearchStats* stats) {
    require_valid_level(validate(room), "solve_mole");
    const std::uint64_t cells = static_cast<std::uint64_t>(room.width) * room.height;
    if (cells > 0xFFFF) throw CapExceeded("solve_mole: more than 65535 cells");
    if (mole_state_bound(cells, room.weights.size(), state_cap) > state_cap)
        throw CapExceeded("solve_mole: state bound exceeds cap of " +
                          std::to_string(state_cap));
    MoleWorld world(room);

    MoleSearchStats local_stats;
    MoleSearchStats& st = stats ? *stats : local_stats;
    st = MoleSearchStats{};
    auto count_state = [&st](const MoleState& s) {
        if (s.layer == MoleLayer::Above) {
            ++st.above_states;
        } else {
            ++st.below_states;
        }
    };

    const MoleState start = world.initial();
    std::unordered_map<MoleState, std::pair<MoleState, const char*>, MoleStateHash> parent;
    parent.emplace(start, std::make_pair(start, nullptr));
    count_state(start);

    Decision decision;
    bool found = world.won(start);
    MoleState win_state = start;
    if (!found) {
        std::queue<MoleState> frontier;
        frontier.push(start);
        while (!frontier.empty() && !found) {
            const MoleState state = frontier.front();
            frontier.pop();
            for (const char* action : kMoleActions) {
                MoleState next = state;
                if (!world.step(next, action)) continue;
                if (!parent.emplace(next, std::make_pair(state, action)).second) continue;
                count_state(next);
                if (parent.size() > state_cap)
                    throw CapExceeded("solve_mole: state cap " + std::to_string(state_cap) +
                                      " exceeded");
                if (world.won(next)) {
                    win_state = next;
                    found = true;
                    break;
                }
                frontier.push(next);
            }
        }
    }

    decision.states_explored = parent.size();
    decision.solvable = found;
    if (found) {
        std::vector<std::string> actions;
        for (MoleState s = win_state; !(s == start);) {
            const auto& [prev, action] = parent.at(s);
            actions.push_back(action);
            s = prev;
        }
        std::reverse(actions.begin(), actions.end());
        decision.witness = std::move(actions);
    }
    return decision;
}

bool replay_mole(const MoleManiaRoom& room, const std::vector<std::string>& actions) {
    if (!validate(room).empty()) return false;
    MoleWorld world(room);
    MoleState s = world.initial();
    for (const std::string& action : actions)
        if (!world.step(s, action)) return false;
    return world.won(s);
}

//// Dispatch /////////////////////////////////////////////////////////////////

Decision solve(const Level& level) {
    struct Solver {
        Decision operator()(const DonkeyKongRoom& r) const { return solve_donkey_kong(r); }
        Decision operator()(const WarioLevel& l) const { return solve_wario(l); }
        Decision operator()(const HarvestMoonInstance& i) const { return solve_harvest(i); }
        Decision operator()(const MoleManiaRoom& r) const { return solve_mole(r); }
    };
    return std::visit(Solver{}, level);
}

bool replay(const Level& level, const std::vector<std::string>& actions) {
    struct Replayer {
        const std::vector<std::string>& actions;
        bool operator()(const DonkeyKongRoom& r) const { return replay_donkey_kong(r, actions); }
        bool operator()(const WarioLevel& l) const { return replay_wario(l, actions); }
        bool operator()(const HarvestMoonInstance& i) const { return replay_harvest(i, actions); }
        bool operator()(const MoleManiaRoom& r) const { return replay_mole(r, actions); }
    };
    return std::visit(Replayer{actions}, level);
}

}  // namespace gbhard
