#include "sasm/core.hpp"

#include <algorithm>
#include <unordered_map>

namespace sasm {

namespace {

std::size_t hash_cells(std::span<const Cell> cells) {
    std::size_t h = 1469598103934665603ull;
    for (const auto& c : cells) {
        for (std::uint64_t v : {static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.pos.x)),
                                static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.pos.y)),
                                static_cast<std::uint64_t>(c.tile)}) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
    }
    return h;
}

// Dense occupancy lookup over a canonical supertile's bounding box.
class Grid {
public:
    explicit Grid(const Supertile& s) : w_(s.width()), h_(s.height()), slots_(w_ * h_, -1) {
        for (const auto& c : s.cells()) slots_[c.pos.y * w_ + c.pos.x] = static_cast<int>(c.tile);
    }
    int at(Coord c) const {
        if (c.x < 0 || c.y < 0 || c.x >= w_ || c.y >= h_) return -1;
        return slots_[c.y * w_ + c.x];
    }

private:
    int w_;
    int h_;
    std::vector<int> slots_;
};

// Strength of placing y at offset against x; -1 on overlap.
int placement_strength(const Grid& gx, const Supertile& y, Coord offset, const TileSet& tiles) {
    int total = 0;
    for (const auto& c : y.cells()) {
        const Coord p = c.pos + offset;
        if (gx.at(p) >= 0) return -1;
        for (Side s : kSides) {
            const int other = gx.at(p + step(s));
            if (other < 0) continue;
            total += tiles.bond(tiles.side_glue(c.tile, s),
                                tiles.side_glue(static_cast<TileIndex>(other), opposite(s)));
        }
    }
    return total;
}

}  // namespace

GlueTable::GlueTable() { strengths_.emplace(std::string(kNullGlue), 0); }

void GlueTable::declare(const std::string& label, int strength) {
    if (label == kNullGlue) {
        if (strength != 0)
            throw AssemblyError(AssemblyErrorKind::InvalidStrength, "null glue must have strength 0");
        return;
    }
    if (strength < 1)
        throw AssemblyError(AssemblyErrorKind::InvalidStrength,
                            "glue '" + label + "' must have positive strength");
    strengths_[label] = strength;
}

bool GlueTable::contains(std::string_view label) const { return strengths_.find(label) != strengths_.end(); }

int GlueTable::strength(std::string_view label) const {
    auto it = strengths_.find(label);
    if (it == strengths_.end())
        throw AssemblyError(AssemblyErrorKind::UnknownGlue, "unknown glue '" + std::string(label) + "'");
    return it->second;
}

std::vector<std::string> GlueTable::labels() const {
    std::vector<std::string> out;
    for (const auto& [label, strength] : strengths_)
        if (label != kNullGlue) out.push_back(label);
    return out;
}

TileSet::TileSet(const GlueTable& glues, std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
    std::map<std::string, GlueId, std::less<>> ids;
    labels_.emplace_back(kNullGlue);
    strengths_.push_back(0);
    ids.emplace(std::string(kNullGlue), kNullGlueId);
    for (const auto& label : glues.labels()) {
        ids.emplace(label, static_cast<GlueId>(labels_.size()));
        labels_.push_back(label);
        strengths_.push_back(glues.strength(label));
    }
    sides_.reserve(tiles_.size());
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
        const Tile& t = tiles_[i];
        if (!by_id_.emplace(t.id, static_cast<TileIndex>(i)).second)
            throw AssemblyError(AssemblyErrorKind::DuplicateTile, "duplicate tile '" + t.id + "'");
        std::array<GlueId, 4> resolved{};
        for (Side s : kSides) {
            auto it = ids.find(t.glue(s));
            if (it == ids.end())
                throw AssemblyError(AssemblyErrorKind::UnknownGlue,
                                    "tile '" + t.id + "' uses unknown glue '" + t.glue(s) + "'");
            resolved[static_cast<int>(s)] = it->second;
        }
        sides_.push_back(resolved);
    }
}

std::optional<TileIndex> TileSet::find(std::string_view id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

bool is_connected(std::span<const Coord> coords) {
    if (coords.empty()) return false;
    std::vector<Coord> sorted(coords.begin(), coords.end());
    std::sort(sorted.begin(), sorted.end());
    auto index_of = [&](Coord c) -> long {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        return (it != sorted.end() && *it == c) ? it - sorted.begin() : -1;
    };
    std::vector<char> seen(sorted.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Coord c = sorted[stack.back()];
        stack.pop_back();
        for (Side s : kSides) {
            const long j = index_of(c + step(s));
            if (j >= 0 && !seen[j]) {
                seen[j] = 1;
                ++reached;
                stack.push_back(static_cast<std::size_t>(j));
            }
        }
    }
    return reached == sorted.size();
}

Supertile Supertile::canonicalize(std::vector<Cell> cells) {
    if (cells.empty()) throw AssemblyError(AssemblyErrorKind::EmptyInput, "supertile has no cells");
    int min_x = cells.front().pos.x, min_y = cells.front().pos.y;
    int max_x = min_x, max_y = min_y;
    for (const auto& c : cells) {
        min_x = std::min(min_x, c.pos.x);
        min_y = std::min(min_y, c.pos.y);
        max_x = std::max(max_x, c.pos.x);
        max_y = std::max(max_y, c.pos.y);
    }
    for (auto& c : cells) c.pos = c.pos - Coord{min_x, min_y};
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i].pos == cells[i - 1].pos)
            throw AssemblyError(AssemblyErrorKind::Overlap, "two tiles share one coordinate");
    std::vector<Coord> coords;
    coords.reserve(cells.size());
    for (const auto& c : cells) coords.push_back(c.pos);
    if (!is_connected(coords))
        throw AssemblyError(AssemblyErrorKind::DisconnectedCells, "cells are not 4-connected");

    Supertile s;
    s.width_ = max_x - min_x + 1;
    s.height_ = max_y - min_y + 1;
    s.hash_ = hash_cells(cells);
    s.cells_ = std::move(cells);
    return s;
}

Supertile Supertile::single(TileIndex tile) { return canonicalize({Cell{{0, 0}, tile}}); }

std::optional<TileIndex> Supertile::at(Coord c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c,
                               [](const Cell& cell, Coord key) { return cell.pos < key; });
    if (it == cells_.end() || it->pos != c) return std::nullopt;
    return it->tile;
}

int attachment_strength(const Supertile& x, const Supertile& y, Coord offset, const TileSet& tiles) {
    const int s = placement_strength(Grid(x), y, offset, tiles);
    if (s < 0) throw AssemblyError(AssemblyErrorKind::Overlap, "placement overlaps");
    return s;
}

Supertile merge(const Supertile& x, const Supertile& y, Coord offset) {
    std::vector<Cell> cells(x.cells().begin(), x.cells().end());
    cells.reserve(x.size() + y.size());
    for (const auto& c : y.cells()) cells.push_back(Cell{c.pos + offset, c.tile});
    return Supertile::canonicalize(std::move(cells));
}

std::vector<Combination> combine_with_placements(const Supertile& x, const Supertile& y,
                                                 int temperature, const TileSet& tiles) {
    const Grid gx(x);

    // Y's positive glues keyed by (glue, side facing out of Y).
    std::unordered_map<std::uint64_t, std::vector<Coord>> y_faces;
    for (const auto& c : y.cells()) {
        for (Side s : kSides) {
            const GlueId g = tiles.side_glue(c.tile, s);
            if (tiles.glue_strength(g) <= 0) continue;
            y_faces[(static_cast<std::uint64_t>(g) << 2) | static_cast<int>(s)].push_back(c.pos);
        }
    }

    std::vector<Coord> offsets;
    for (const auto& c : x.cells()) {
        for (Side s : kSides) {
            const GlueId g = tiles.side_glue(c.tile, s);
            if (tiles.glue_strength(g) <= 0) continue;
            const Coord target = c.pos + step(s);
            if (gx.at(target) >= 0) continue;
            auto it = y_faces.find((static_cast<std::uint64_t>(g) << 2) | static_cast<int>(opposite(s)));
            if (it == y_faces.end()) continue;
            for (Coord d : it->second) offsets.push_back(target - d);
        }
    }
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());

    std::vector<Combination> out;
    for (Coord off : offsets) {
        if (placement_strength(gx, y, off, tiles) < temperature) continue;
        out.push_back(Combination{merge(x, y, off), off});
    }
    std::sort(out.begin(), out.end(),
              [](const Combination& a, const Combination& b) { return a.result < b.result; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Combination& a, const Combination& b) { return a.result == b.result; }),
              out.end());
    return out;
}

std::vector<Supertile> combine(const Supertile& x, const Supertile& y, int temperature,
                               const TileSet& tiles) {
    std::vector<Supertile> out;
    for (auto& c : combine_with_placements(x, y, temperature, tiles)) out.push_back(std::move(c.result));
    return out;
}

}  // namespace sasm
