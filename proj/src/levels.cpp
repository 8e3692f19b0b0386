#include "gbhard/levels.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gbhard {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "gbhard-level/1";

std::string cell_str(Cell c) {
    return "[" + std::to_string(c.col) + "," + std::to_string(c.row) + "]";
}

char dk_tile_char(DkTile t) {
    switch (t) {
        case DkTile::Empty: return '.';
        case DkTile::Switch: return 'S';
        case DkTile::SlideBoardTop: return 'T';
        case DkTile::SlideBoardBody: return '|';
        case DkTile::BrickFloor: return '=';
        case DkTile::Block: return '#';
    }
    return '?';
}

std::optional<DkTile> dk_tile_from_char(char c) {
    switch (c) {
        case '.': return DkTile::Empty;
        case 'S': return DkTile::Switch;
        case 'T': return DkTile::SlideBoardTop;
        case '|': return DkTile::SlideBoardBody;
        case '=': return DkTile::BrickFloor;
        case '#': return DkTile::Block;
        default: return std::nullopt;
    }
}

}  // namespace

//// validate /////////////////////////////////////////////////////////////////

std::vector<std::string> validate(const DonkeyKongRoom& room) {
    std::vector<std::string> v;
    if (room.width < 1 || room.height < 1) {
        v.push_back("dimensions: must be positive");
        return v;
    }
    if (room.tiles.size() != static_cast<std::size_t>(room.width) * room.height) {
        v.push_back("tiles: expected " + std::to_string(room.width * room.height) +
                    " entries, got " + std::to_string(room.tiles.size()));
        return v;
    }

    // The bottom edge of the map counts as ground, so a start/win cell on the
    // last row needs no tile beneath it.
    auto grounded = [&](Cell c) {
        if (c.row + 1 >= room.height) return true;
        return room.tile_at(Cell{c.col, c.row + 1}) == DkTile::BrickFloor;
    };
    auto check_actor_cell = [&](Cell c, const char* name) {
        if (!room.in_bounds(c)) {
            v.push_back(std::string(name) + ": out of bounds " + cell_str(c));
            return;
        }
        if (room.tile_at(c) != DkTile::Empty)
            v.push_back(std::string(name) + ": cell " + cell_str(c) + " is not Empty");
        if (!grounded(c))
            v.push_back(std::string(name) + ": cell below " + cell_str(c) +
                        " is not BrickFloor");
    };
    check_actor_cell(room.start, "start");
    check_actor_cell(room.win, "win");

    for (std::size_t i = 0; i < room.switches.size(); ++i) {
        Cell c = room.switches[i];
        if (!room.in_bounds(c)) {
            v.push_back("switches[" + std::to_string(i) + "]: out of bounds " + cell_str(c));
        } else if (room.tile_at(c) != DkTile::Switch) {
            v.push_back("switches[" + std::to_string(i) + "]: cell " + cell_str(c) +
                        " does not carry a Switch tile");
        }
    }

    for (std::size_t i = 0; i < room.boards.size(); ++i) {
        const SlideBoard& b = room.boards[i];
        const std::string tag = "boards[" + std::to_string(i) + "]";
        if (b.cells.empty()) {
            v.push_back(tag + ".cells: empty");
            continue;
        }
        if (b.controlling_switch < 0 ||
            b.controlling_switch >= static_cast<int>(room.switches.size()))
            v.push_back(tag + ".switch: index " + std::to_string(b.controlling_switch) +
                        " out of range");
        bool cells_ok = true;
        for (std::size_t j = 0; j < b.cells.size(); ++j) {
            Cell c = b.cells[j];
            if (!room.in_bounds(c)) {
                v.push_back(tag + ".cells[" + std::to_string(j) + "]: out of bounds " +
                            cell_str(c));
                cells_ok = false;
                continue;
            }
            if (j > 0 && (c.col != b.cells[0].col || c.row != b.cells[j - 1].row + 1)) {
                v.push_back(tag + ".cells: run is not vertically contiguous at " + cell_str(c));
                cells_ok = false;
            }
        }
        if (!cells_ok) continue;
        if (room.tile_at(b.cells[0]) != DkTile::SlideBoardTop)
            v.push_back(tag + ".cells[0]: topmost cell " + cell_str(b.cells[0]) +
                        " is not SlideBoardTop");
        for (std::size_t j = 1; j < b.cells.size(); ++j)
            if (room.tile_at(b.cells[j]) != DkTile::SlideBoardBody)
                v.push_back(tag + ".cells[" + std::to_string(j) + "]: cell " +
                            cell_str(b.cells[j]) + " is not SlideBoardBody");
    }
    return v;
}

std::vector<std::string> validate(const WarioLevel& level) {
    std::vector<std::string> v;
    const int n = static_cast<int>(level.rooms.size());
    if (n == 0) v.push_back("rooms: must not be empty");
    if (level.start_room < 0 || level.start_room >= n)
        v.push_back("start_room: index " + std::to_string(level.start_room) + " out of range");
    for (std::size_t i = 0; i < level.doors.size(); ++i) {
        const WarioDoor& d = level.doors[i];
        const std::string tag = "doors[" + std::to_string(i) + "]";
        if (d.from_room < 0 || d.from_room >= n)
            v.push_back(tag + ".from: index " + std::to_string(d.from_room) + " out of range");
        if (d.to_room < 0 || d.to_room >= n)
            v.push_back(tag + ".to: index " + std::to_string(d.to_room) + " out of range");
        if (d.from_room == d.to_room)
            v.push_back(tag + ": from_room equals to_room (" + std::to_string(d.from_room) + ")");
    }
    return v;
}

std::vector<std::string> validate(const HarvestMoonInstance& inst) {
    std::vector<std::string> v;
    if (inst.num_tiles < 1) v.push_back("tiles: must be positive");
    if (inst.days < 0) v.push_back("days: must be nonnegative");
    if (inst.target_revenue < 0) v.push_back("target_revenue: must be nonnegative");
    for (std::size_t i = 0; i < inst.crops.size(); ++i) {
        if (inst.crops[i].grow_days < 1)
            v.push_back("crops[" + std::to_string(i) + "].grow_days: must be at least 1");
        if (inst.crops[i].sale_price < 0)
            v.push_back("crops[" + std::to_string(i) + "].sale_price: must be nonnegative");
    }
    return v;
}

std::vector<std::string> validate(const MoleManiaRoom& room) {
    std::vector<std::string> v;
    if (room.width < 1 || room.height < 1) {
        v.push_back("dimensions: must be positive");
        return v;
    }
    if (room.floor.size() != static_cast<std::size_t>(room.width) * room.height) {
        v.push_back("floor: expected " + std::to_string(room.width * room.height) +
                    " entries, got " + std::to_string(room.floor.size()));
        return v;
    }
    if (!room.in_bounds(room.start)) v.push_back("start: out of bounds " + cell_str(room.start));
    if (!room.in_bounds(room.win)) v.push_back("win: out of bounds " + cell_str(room.win));
    for (std::size_t i = 0; i < room.weights.size(); ++i) {
        Cell c = room.weights[i];
        if (!room.in_bounds(c))
            v.push_back("weights[" + std::to_string(i) + "]: out of bounds " + cell_str(c));
        if (c == room.start)
            v.push_back("weights[" + std::to_string(i) + "]: overlaps the start cell");
        if (i > 0 && c == room.weights[i - 1])
            v.push_back("weights[" + std::to_string(i) + "]: duplicate weight " + cell_str(c));
    }
    return v;
}

std::vector<std::string> validate(const Level& level) {
    return std::visit([](const auto& l) { return validate(l); }, level);
}

//// serialize ////////////////////////////////////////////////////////////////

namespace {

ordered_json cell_to_json(Cell c) { return ordered_json::array({c.col, c.row}); }

std::string dump_canonical(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize(const DonkeyKongRoom& room) {
    ordered_json j;
    j["format"] = kFormatTag;
    j["game"] = "donkey_kong";
    j["width"] = room.width;
    j["height"] = room.height;
    ordered_json tiles = ordered_json::array();
    for (int r = 0; r < room.height; ++r) {
        std::string row;
        for (int c = 0; c < room.width; ++c) row.push_back(dk_tile_char(room.tile_at({c, r})));
        tiles.push_back(row);
    }
    j["tiles"] = std::move(tiles);
    ordered_json switches = ordered_json::array();
    for (Cell c : room.switches) switches.push_back(cell_to_json(c));
    j["switches"] = std::move(switches);
    ordered_json boards = ordered_json::array();
    for (const SlideBoard& b : room.boards) {
        ordered_json board;
        ordered_json cells = ordered_json::array();
        for (Cell c : b.cells) cells.push_back(cell_to_json(c));
        board["cells"] = std::move(cells);
        board["switch"] = b.controlling_switch;
        board["polarity"] =
            b.polarity == BoardPolarity::OpenWhenOn ? "open_when_on" : "open_when_off";
        boards.push_back(std::move(board));
    }
    j["boards"] = std::move(boards);
    j["start"] = cell_to_json(room.start);
    j["win"] = cell_to_json(room.win);
    return dump_canonical(j);
}

std::string serialize(const WarioLevel& level) {
    ordered_json j;
    j["format"] = kFormatTag;
    j["game"] = "wario_land";
    ordered_json rooms = ordered_json::array();
    for (const WarioRoom& r : level.rooms) {
        ordered_json room;
        room["treasure"] = r.treasure;
        room["key"] = r.key;
        rooms.push_back(std::move(room));
    }
    j["rooms"] = std::move(rooms);
    ordered_json doors = ordered_json::array();
    for (const WarioDoor& d : level.doors) {
        ordered_json door;
        door["from"] = d.from_room;
        door["to"] = d.to_room;
        door["state"] = d.initial_state == DoorState::Open ? "open" : "closed";
        doors.push_back(std::move(door));
    }
    j["doors"] = std::move(doors);
    j["start_room"] = level.start_room;
    return dump_canonical(j);
}

std::string serialize(const HarvestMoonInstance& inst) {
    ordered_json j;
    j["format"] = kFormatTag;
    j["game"] = "harvest_moon";
    j["tiles"] = inst.num_tiles;
    j["days"] = inst.days;
    j["target_revenue"] = inst.target_revenue;
    ordered_json crops = ordered_json::array();
    for (const HarvestCrop& c : inst.crops) {
        ordered_json crop;
        crop["grow_days"] = c.grow_days;
        crop["sale_price"] = c.sale_price;
        crops.push_back(std::move(crop));
    }
    j["crops"] = std::move(crops);
    return dump_canonical(j);
}

std::string serialize(const MoleManiaRoom& room) {
    ordered_json j;
    j["format"] = kFormatTag;
    j["game"] = "mole_mania";
    j["width"] = room.width;
    j["height"] = room.height;
    ordered_json floor = ordered_json::array();
    for (int r = 0; r < room.height; ++r) {
        std::string row;
        for (int c = 0; c < room.width; ++c)
            row.push_back(room.floor_at({c, r}) == MoleFloor::Hard ? 'H' : 'S');
        floor.push_back(row);
    }
    j["floor"] = std::move(floor);
    std::vector<Cell> weights = room.weights;
    std::sort(weights.begin(), weights.end());
    ordered_json w = ordered_json::array();
    for (Cell c : weights) w.push_back(cell_to_json(c));
    j["weights"] = std::move(w);
    j["start"] = cell_to_json(room.start);
    j["win"] = cell_to_json(room.win);
    return dump_canonical(j);
}

std::string serialize(const Level& level) {
    return std::visit([](const auto& l) { return serialize(l); }, level);
}

//// deserialize //////////////////////////////////////////////////////////////

namespace {

const ordered_json& require_field(const ordered_json& j, const std::string& path,
                                  const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw SchemaError(path + name, "missing field");
    return *it;
}

long long require_int(const ordered_json& j, const std::string& path, const char* name) {
    const ordered_json& f = require_field(j, path, name);
    if (!f.is_number_integer()) throw SchemaError(path + name, "expected an integer");
    return f.get<long long>();
}

bool require_bool(const ordered_json& j, const std::string& path, const char* name) {
    const ordered_json& f = require_field(j, path, name);
    if (!f.is_boolean()) throw SchemaError(path + name, "expected a boolean");
    return f.get<bool>();
}

std::string require_string(const ordered_json& j, const std::string& path, const char* name) {
    const ordered_json& f = require_field(j, path, name);
    if (!f.is_string()) throw SchemaError(path + name, "expected a string");
    return f.get<std::string>();
}

Cell cell_from_json(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw SchemaError(path, "expected a [col,row] pair");
    return Cell{j[0].get<int>(), j[1].get<int>()};
}

std::vector<std::string> string_rows(const ordered_json& j, const std::string& path, int width,
                                     int height) {
    if (!j.is_array() || static_cast<int>(j.size()) != height)
        throw SchemaError(path, "expected " + std::to_string(height) + " row strings");
    std::vector<std::string> rows;
    for (int r = 0; r < height; ++r) {
        const ordered_json& row = j[r];
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!row.is_string()) throw SchemaError(row_path, "expected a string");
        std::string s = row.get<std::string>();
        if (static_cast<int>(s.size()) != width)
            throw SchemaError(row_path, "expected width " + std::to_string(width) + ", got " +
                                            std::to_string(s.size()));
        rows.push_back(std::move(s));
    }
    return rows;
}

DonkeyKongRoom dk_from_json(const ordered_json& j) {
    DonkeyKongRoom room;
    room.width = static_cast<int>(require_int(j, "", "width"));
    room.height = static_cast<int>(require_int(j, "", "height"));
    if (room.width < 1 || room.height < 1) throw SchemaError("width", "must be positive");
    auto rows = string_rows(require_field(j, "", "tiles"), "tiles", room.width, room.height);
    room.tiles.resize(static_cast<std::size_t>(room.width) * room.height);
    for (int r = 0; r < room.height; ++r)
        for (int c = 0; c < room.width; ++c) {
            auto tile = dk_tile_from_char(rows[r][c]);
            if (!tile)
                throw SchemaError("tiles[" + std::to_string(r) + "]",
                                  std::string("unknown tile kind '") + rows[r][c] + "'");
            room.set_tile({c, r}, *tile);
        }
    const ordered_json& switches = require_field(j, "", "switches");
    if (!switches.is_array()) throw SchemaError("switches", "expected an array");
    for (std::size_t i = 0; i < switches.size(); ++i)
        room.switches.push_back(
            cell_from_json(switches[i], "switches[" + std::to_string(i) + "]"));
    const ordered_json& boards = require_field(j, "", "boards");
    if (!boards.is_array()) throw SchemaError("boards", "expected an array");
    for (std::size_t i = 0; i < boards.size(); ++i) {
        const std::string path = "boards[" + std::to_string(i) + "].";
        const ordered_json& bj = boards[i];
        SlideBoard b;
        const ordered_json& cells = require_field(bj, path, "cells");
        if (!cells.is_array()) throw SchemaError(path + "cells", "expected an array");
        for (std::size_t k = 0; k < cells.size(); ++k)
            b.cells.push_back(
                cell_from_json(cells[k], path + "cells[" + std::to_string(k) + "]"));
        b.controlling_switch = static_cast<int>(require_int(bj, path, "switch"));
        std::string pol = require_string(bj, path, "polarity");
        if (pol == "open_when_on") {
            b.polarity = BoardPolarity::OpenWhenOn;
        } else if (pol == "open_when_off") {
            b.polarity = BoardPolarity::OpenWhenOff;
        } else {
            throw SchemaError(path + "polarity", "unknown polarity '" + pol + "'");
        }
        room.boards.push_back(std::move(b));
    }
    room.start = cell_from_json(require_field(j, "", "start"), "start");
    room.win = cell_from_json(require_field(j, "", "win"), "win");
    return room;
}

WarioLevel wario_from_json(const ordered_json& j) {
    WarioLevel level;
    const ordered_json& rooms = require_field(j, "", "rooms");
    if (!rooms.is_array()) throw SchemaError("rooms", "expected an array");
    for (std::size_t i = 0; i < rooms.size(); ++i) {
        const std::string path = "rooms[" + std::to_string(i) + "].";
        WarioRoom r;
        r.treasure = require_bool(rooms[i], path, "treasure");
        r.key = require_bool(rooms[i], path, "key");
        level.rooms.push_back(r);
    }
    const ordered_json& doors = require_field(j, "", "doors");
    if (!doors.is_array()) throw SchemaError("doors", "expected an array");
    for (std::size_t i = 0; i < doors.size(); ++i) {
        const std::string path = "doors[" + std::to_string(i) + "].";
        WarioDoor d;
        d.from_room = static_cast<int>(require_int(doors[i], path, "from"));
        d.to_room = static_cast<int>(require_int(doors[i], path, "to"));
        std::string state = require_string(doors[i], path, "state");
        if (state == "open") {
            d.initial_state = DoorState::Open;
        } else if (state == "closed") {
            d.initial_state = DoorState::Closed;
        } else {
            throw SchemaError(path + "state", "unknown door state '" + state + "'");
        }
        level.doors.push_back(d);
    }
    level.start_room = static_cast<int>(require_int(j, "", "start_room"));
    return level;
}

HarvestMoonInstance harvest_from_json(const ordered_json& j) {
    HarvestMoonInstance inst;
    inst.num_tiles = require_int(j, "", "tiles");
    inst.days = require_int(j, "", "days");
    inst.target_revenue = require_int(j, "", "target_revenue");
    const ordered_json& crops = require_field(j, "", "crops");
    if (!crops.is_array()) throw SchemaError("crops", "expected an array");
    for (std::size_t i = 0; i < crops.size(); ++i) {
        const std::string path = "crops[" + std::to_string(i) + "].";
        HarvestCrop c;
        c.grow_days = require_int(crops[i], path, "grow_days");
        c.sale_price = require_int(crops[i], path, "sale_price");
        inst.crops.push_back(c);
    }
    return inst;
}

MoleManiaRoom mole_from_json(const ordered_json& j) {
    MoleManiaRoom room;
    room.width = static_cast<int>(require_int(j, "", "width"));
    room.height = static_cast<int>(require_int(j, "", "height"));
    if (room.width < 1 || room.height < 1) throw SchemaError("width", "must be positive");
    auto rows = string_rows(require_field(j, "", "floor"), "floor", room.width, room.height);
    room.floor.resize(static_cast<std::size_t>(room.width) * room.height);
    for (int r = 0; r < room.height; ++r)
        for (int c = 0; c < room.width; ++c) {
            char ch = rows[r][c];
            if (ch == 'H') {
                room.floor[static_cast<std::size_t>(r) * room.width + c] = MoleFloor::Hard;
            } else if (ch == 'S') {
                room.floor[static_cast<std::size_t>(r) * room.width + c] = MoleFloor::Soft;
            } else {
                throw SchemaError("floor[" + std::to_string(r) + "]",
                                  std::string("unknown tile kind '") + ch + "'");
            }
        }
    const ordered_json& weights = require_field(j, "", "weights");
    if (!weights.is_array()) throw SchemaError("weights", "expected an array");
    for (std::size_t i = 0; i < weights.size(); ++i)
        room.weights.push_back(cell_from_json(weights[i], "weights[" + std::to_string(i) + "]"));
    std::sort(room.weights.begin(), room.weights.end());
    room.start = cell_from_json(require_field(j, "", "start"), "start");
    room.win = cell_from_json(require_field(j, "", "win"), "win");
    return room;
}

}  // namespace

Level deserialize(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("", "expected a JSON object");
    std::string format = require_string(j, "", "format");
    if (format != kFormatTag)
        throw SchemaError("format", "unsupported format '" + format + "'");
    std::string game = require_string(j, "", "game");
    if (game == "donkey_kong") return dk_from_json(j);
    if (game == "wario_land") return wario_from_json(j);
    if (game == "harvest_moon") return harvest_from_json(j);
    if (game == "mole_mania") return mole_from_json(j);
    throw SchemaError("game", "unknown game '" + game + "'");
}

//// render ///////////////////////////////////////////////////////////////////

namespace {

void require_valid(const std::vector<std::string>& violations) {
    if (!violations.empty())
        throw std::invalid_argument("render_ascii requires a valid level: " + violations[0]);
}

}  // namespace

std::string render_ascii(const DonkeyKongRoom& room) {
    require_valid(validate(room));
    std::vector<std::string> rows(room.height, std::string(room.width, '.'));
    for (int r = 0; r < room.height; ++r)
        for (int c = 0; c < room.width; ++c) rows[r][c] = dk_tile_char(room.tile_at({c, r}));
    rows[room.win.row][room.win.col] = '*';
    rows[room.start.row][room.start.col] = 'M';
    std::string out;
    for (const std::string& r : rows) {
        out += r;
        out += '\n';
    }
    out += "legend: .=empty S=switch T=board-top |=board-body ==brick-floor #=block "
           "M=start *=win\n";
    return out;
}

std::string render_ascii(const WarioLevel& level) {
    require_valid(validate(level));
    std::ostringstream out;
    for (std::size_t i = 0; i < level.rooms.size(); ++i) {
        out << "room " << i << " [" << (level.rooms[i].treasure ? 'T' : '-')
            << (level.rooms[i].key ? 'K' : '-') << ']';
        if (static_cast<int>(i) == level.start_room) out << " <- start";
        out << '\n';
    }
    for (std::size_t i = 0; i < level.doors.size(); ++i) {
        const WarioDoor& d = level.doors[i];
        out << "door " << i << ": " << d.from_room << " -> " << d.to_room << " "
            << (d.initial_state == DoorState::Open ? "open" : "closed") << '\n';
    }
    out << "legend: T=treasure K=key, doors are one-way\n";
    return out.str();
}

std::string render_ascii(const HarvestMoonInstance& inst) {
    require_valid(validate(inst));
    std::ostringstream out;
    out << "tiles " << inst.num_tiles << ", days " << inst.days << ", target revenue "
        << inst.target_revenue << '\n';
    for (std::size_t i = 0; i < inst.crops.size(); ++i)
        out << "crop " << i << ": grows in " << inst.crops[i].grow_days << "d, sells for "
            << inst.crops[i].sale_price << '\n';
    out << "legend: single-use crops, replantable without limit\n";
    return out.str();
}

std::string render_ascii(const MoleManiaRoom& room) {
    require_valid(validate(room));
    std::vector<std::string> rows(room.height, std::string(room.width, '.'));
    for (int r = 0; r < room.height; ++r)
        for (int c = 0; c < room.width; ++c)
            rows[r][c] = room.floor_at({c, r}) == MoleFloor::Hard ? '.' : '~';
    rows[room.win.row][room.win.col] = '*';
    for (Cell w : room.weights) rows[w.row][w.col] = '#';
    rows[room.start.row][room.start.col] = 'M';
    std::string out;
    for (const std::string& r : rows) {
        out += r;
        out += '\n';
    }
    out += "legend: .=hard ~=soft #=weight M=start *=win\n";
    return out;
}

std::string render_ascii(const Level& level) {
    return std::visit([](const auto& l) { return render_ascii(l); }, level);
}

const char* game_name(const Level& level) {
    struct Namer {
        const char* operator()(const DonkeyKongRoom&) const { return "donkey_kong"; }
        const char* operator()(const WarioLevel&) const { return "wario_land"; }
        const char* operator()(const HarvestMoonInstance&) const { return "harvest_moon"; }
        const char* operator()(const MoleManiaRoom&) const { return "mole_mania"; }
    };
    return std::visit(Namer{}, level);
}

}  // namespace gbhard
