#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gbhard/cell.hpp"
#include "gbhard/errors.hpp"

namespace gbhard {

//// Donkey Kong //////////////////////////////////////////////////////////////

enum class DkTile : std::uint8_t {
    Empty,
    Switch,
    SlideBoardTop,
    SlideBoardBody,
    BrickFloor,
    Block,
};

enum class BoardPolarity : std::uint8_t {
    OpenWhenOn,   // board retracts (is passable) while its switch is on
    OpenWhenOff,  // board retracts while its switch is off
};

// A vertical run of cells, topmost of kind SlideBoardTop and the rest
// SlideBoardBody, solid exactly while its switch state mismatches the
// polarity.
struct SlideBoard {
    std::vector<Cell> cells;
    int controlling_switch = 0;
    BoardPolarity polarity = BoardPolarity::OpenWhenOn;

    bool operator==(const SlideBoard&) const = default;
};

// Tile grid with switch-wired slide boards. Mario is not a tile: he is placed
// at `start` and must reach `win`. Both rest on Empty cells directly above a
// BrickFloor tile (the map's bottom edge also counts as ground).
struct DonkeyKongRoom {
    int width = 0;
    int height = 0;
    std::vector<DkTile> tiles;  // row-major, row 0 at the top
    std::vector<Cell> switches;
    std::vector<SlideBoard> boards;
    Cell start{};
    Cell win{};

    bool in_bounds(Cell c) const {
        return c.col >= 0 && c.col < width && c.row >= 0 && c.row < height;
    }
    DkTile tile_at(Cell c) const {
        return tiles[static_cast<std::size_t>(c.row) * width + c.col];
    }
    void set_tile(Cell c, DkTile t) {
        tiles[static_cast<std::size_t>(c.row) * width + c.col] = t;
    }

    bool operator==(const DonkeyKongRoom&) const = default;
};

//// Wario Land ///////////////////////////////////////////////////////////////

enum class DoorState : std::uint8_t { Open, Closed };

struct WarioRoom {
    bool treasure = false;
    bool key = false;

    bool operator==(const WarioRoom&) const = default;
};

// One-way passage from_room -> to_room. A Closed door can be opened (once,
// permanently) by consuming the key of the room it leaves.
struct WarioDoor {
    int from_room = 0;
    int to_room = 0;
    DoorState initial_state = DoorState::Closed;

    bool operator==(const WarioDoor&) const = default;
};

struct WarioLevel {
    std::vector<WarioRoom> rooms;
    std::vector<WarioDoor> doors;
    int start_room = 0;

    bool operator==(const WarioLevel&) const = default;
};

//// Harvest Moon /////////////////////////////////////////////////////////////

struct HarvestCrop {
    long long grow_days = 1;  // >= 1
    long long sale_price = 0;

    bool operator==(const HarvestCrop&) const = default;
};

// k identical tiles, W days of season, single-use crops replantable without
// limit; the goal is revenue >= target_revenue.
struct HarvestMoonInstance {
    long long num_tiles = 1;
    long long days = 0;
    long long target_revenue = 0;
    std::vector<HarvestCrop> crops;

    bool operator==(const HarvestMoonInstance&) const = default;
};

//// Mole Mania ///////////////////////////////////////////////////////////////

enum class MoleFloor : std::uint8_t { Soft, Hard };

// Dual-layer grid: Muddy digs through Soft tiles between the surface and the
// underground; Weights can be pushed but never pulled and exist only above
// ground.
struct MoleManiaRoom {
    int width = 0;
    int height = 0;
    std::vector<MoleFloor> floor;  // row-major
    std::vector<Cell> weights;     // kept sorted, pairwise distinct
    Cell start{};
    Cell win{};

    bool in_bounds(Cell c) const {
        return c.col >= 0 && c.col < width && c.row >= 0 && c.row < height;
    }
    MoleFloor floor_at(Cell c) const {
        return floor[static_cast<std::size_t>(c.row) * width + c.col];
    }

    bool operator==(const MoleManiaRoom&) const = default;
};

//// Operations ///////////////////////////////////////////////////////////////

using Level =
    std::variant<DonkeyKongRoom, WarioLevel, HarvestMoonInstance, MoleManiaRoom>;

// Each violation names the offending field or cell; empty means valid.
std::vector<std::string> validate(const DonkeyKongRoom& room);
std::vector<std::string> validate(const WarioLevel& level);
std::vector<std::string> validate(const HarvestMoonInstance& inst);
std::vector<std::string> validate(const MoleManiaRoom& room);
std::vector<std::string> validate(const Level& level);

// Canonical JSON with the fixed header {"format": "gbhard-level/1", "game":
// ...}. Equal values serialize to byte-identical text; deserialize(serialize)
// is the identity. Serialization neither checks nor repairs semantic
// validity.
std::string serialize(const DonkeyKongRoom& room);
std::string serialize(const WarioLevel& level);
std::string serialize(const HarvestMoonInstance& inst);
std::string serialize(const MoleManiaRoom& room);
std::string serialize(const Level& level);

// Throws SchemaError naming the offending field path.
Level deserialize(std::string_view text);

// Fixed-legend ASCII diagram (grid plus legend footer for grid games, a
// structured listing for the others). Requires a valid level.
std::string render_ascii(const DonkeyKongRoom& room);
std::string render_ascii(const WarioLevel& level);
std::string render_ascii(const HarvestMoonInstance& inst);
std::string render_ascii(const MoleManiaRoom& room);
std::string render_ascii(const Level& level);

const char* game_name(const Level& level);

}  // namespace gbhard
