#include <algorithm>
#include <map>
#include <numeric>

#include "sasm/constructions.hpp"

namespace sasm {

namespace {

[[noreturn]] void malformed(const std::string& why) {
    throw ConstructionError(ConstructionErrorKind::NotAStringSupertile, why);
}

// Teeth of a face laid out as corner, two cap cells, two cells per bit, two cap cells, corner.
// `out` holds how far each column's outermost cell sticks out past the corner.
std::string decode_teeth(const std::map<int, Cell>& outer, Side side) {
    const int w = static_cast<int>(outer.size());
    if (w < 8 || w % 2 != 0 || outer.begin()->first != 0 || outer.rbegin()->first != w - 1)
        malformed("face is not a tooth row");
    auto level = [&](int x) { return side == Side::North ? outer.at(x).pos.y : -outer.at(x).pos.y; };
    const int ref = level(0);
    if (level(w - 1) != ref) malformed("corners at different levels");
    std::string bits;
    for (int t = 3; t + 1 < w - 3; t += 2) {
        const int a = level(t) - ref, b = level(t + 1) - ref;
        // A north bit b has its tab at slot b; a south bit s has its pocket at slot s.
        char bit;
        if (a == 1 && b == -1) bit = '0';
        else if (a == -1 && b == 1) bit = '1';
        else malformed("columns " + std::to_string(t) + " and " + std::to_string(t + 1) + " hold no bit");
        if (side == Side::South) bit = bit == '0' ? '1' : '0';
        bits += bit;
    }
    return bits;
}

}  // namespace

std::string decode_bits(const Supertile& s, const TileSet& tiles, Face face) {
    const Side side = face == Face::North ? Side::North : Side::South;
    // Outermost cell of each column on the requested face.
    std::map<int, Cell> outer;
    for (const auto& c : s.cells()) {
        auto [it, fresh] = outer.emplace(c.pos.x, c);
        if (!fresh && (side == Side::North ? c.pos.y > it->second.pos.y : c.pos.y < it->second.pos.y)) it->second = c;
    }
    bool marked = false;
    for (const auto& [x, c] : outer) {
        const std::string& g = tiles.tile(c.tile).glue(side);
        marked = marked || g == "b0" || g == "b1" || g == "bn";
    }
    if (!marked) return decode_teeth(outer, side);

    std::string bits;
    for (const auto& [x, c] : outer) {
        const std::string& g = tiles.tile(c.tile).glue(side);
        if (g == "b0" || g == "b1") bits += g[1];
        else if (g != kNullGlue && g != "bn") malformed("column " + std::to_string(x) + " shows glue " + g);
    }
    if (bits.empty()) malformed("no bit marks on the face");
    return bits;
}

std::vector<std::string> counter_values(const Supertile& chain, const TileSet& tiles) {
    // Rows are the pieces left after cutting the lock bonds between them.
    const auto cells = chain.cells();
    std::map<Coord, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i].pos] = i;
    std::vector<std::size_t> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (Side s : {Side::East, Side::North}) {
            auto it = index.find(cells[i].pos + step(s));
            if (it == index.end()) continue;
            const std::string& g = tiles.tile(cells[i].tile).glue(s);
            if (g == kNullGlue || g != tiles.tile(cells[it->second].tile).glue(opposite(s)) || g == "k1" || g == "k2")
                continue;
            parent[root(i)] = root(it->second);
        }
    std::map<std::size_t, std::vector<Cell>> rows;
    for (std::size_t i = 0; i < cells.size(); ++i) rows[root(i)].push_back(cells[i]);
    std::vector<std::pair<int, Supertile>> ordered;
    for (auto& [r, row] : rows) {
        int lo = row.front().pos.y;
        for (const auto& c : row) lo = std::min(lo, c.pos.y);
        ordered.emplace_back(lo, Supertile::canonicalize(row));
    }
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> values;
    for (const auto& [y, row] : ordered) {
        const auto south = decode_bits(row, tiles, Face::South);
        if (south == decode_bits(row, tiles, Face::North)) values.push_back(south);
    }
    return values;
}

}  // namespace sasm
