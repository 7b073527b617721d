#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sasm {

inline constexpr std::string_view kNullGlue = "null";

struct Coord {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
    constexpr Coord operator+(Coord o) const { return {x + o.x, y + o.y}; }
    constexpr Coord operator-(Coord o) const { return {x - o.x, y - o.y}; }
};

enum class Side : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Side, 4> kSides{Side::North, Side::East, Side::South, Side::West};

constexpr Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }

constexpr Coord step(Side s) {
    switch (s) {
    case Side::North: return {0, 1};
    case Side::East: return {1, 0};
    case Side::South: return {0, -1};
    case Side::West: return {-1, 0};
    }
    return {0, 0};
}

enum class AssemblyErrorKind {
    EmptyInput,
    DisconnectedCells,
    Overlap,
    UnknownGlue,
    InvalidStrength,
    DuplicateTile,
};

class AssemblyError : public std::runtime_error {
public:
    AssemblyError(AssemblyErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    AssemblyErrorKind kind() const noexcept { return kind_; }

private:
    AssemblyErrorKind kind_;
};

/// Bond labels and their strengths. The null label is always present with strength 0.
class GlueTable {
public:
    GlueTable();

    /// Declares (or redeclares) a label. Non-null labels need strength >= 1.
    void declare(const std::string& label, int strength);

    bool contains(std::string_view label) const;
    int strength(std::string_view label) const;

    /// All non-null labels in lexicographic order.
    std::vector<std::string> labels() const;

    friend bool operator==(const GlueTable&, const GlueTable&) = default;

private:
    std::map<std::string, int, std::less<>> strengths_;
};

struct Tile {
    std::string id;
    /// Indexed by Side: north, east, south, west.
    std::array<std::string, 4> glues{std::string(kNullGlue), std::string(kNullGlue),
                                     std::string(kNullGlue), std::string(kNullGlue)};

    const std::string& glue(Side s) const { return glues[static_cast<int>(s)]; }

    friend bool operator==(const Tile&, const Tile&) = default;
};

using TileIndex = std::uint32_t;
using GlueId = std::uint32_t;
inline constexpr GlueId kNullGlueId = 0;

/// Interned tile types with glue ids resolved; supertiles refer to tiles by index into one TileSet.
class TileSet {
public:
    TileSet() = default;
    TileSet(const GlueTable& glues, std::vector<Tile> tiles);

    std::size_t size() const { return tiles_.size(); }
    const Tile& tile(TileIndex i) const { return tiles_.at(i); }
    GlueId side_glue(TileIndex i, Side s) const { return sides_[i][static_cast<int>(s)]; }
    int glue_strength(GlueId g) const { return strengths_[g]; }
    const std::string& glue_label(GlueId g) const { return labels_[g]; }
    std::optional<TileIndex> find(std::string_view id) const;

    /// Strength of the bond between facing glues under the diagonal glue function.
    int bond(GlueId a, GlueId b) const { return (a == b && a != kNullGlueId) ? strengths_[a] : 0; }

private:
    std::vector<Tile> tiles_;
    std::vector<std::array<GlueId, 4>> sides_;
    std::vector<int> strengths_;
    std::vector<std::string> labels_;
    std::map<std::string, TileIndex, std::less<>> by_id_;
};

struct Cell {
    Coord pos;
    TileIndex tile = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// A connected polyomino of placed tiles, translated so its minimum x and y are 0.
/// Cells are kept sorted by (x, y), which doubles as the identity used for hashing.
class Supertile {
public:
    /// Translates to canonical position. Throws EmptyInput / DisconnectedCells / Overlap
    /// (two tiles at one coordinate).
    static Supertile canonicalize(std::vector<Cell> cells);
    static Supertile single(TileIndex tile);

    std::span<const Cell> cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t hash() const { return hash_; }
    std::optional<TileIndex> at(Coord c) const;

    friend bool operator==(const Supertile& a, const Supertile& b) {
        return a.hash_ == b.hash_ && a.cells_ == b.cells_;
    }
    friend bool operator<(const Supertile& a, const Supertile& b) {
        if (a.cells_.size() != b.cells_.size()) return a.cells_.size() < b.cells_.size();
        return a.cells_ < b.cells_;
    }

private:
    Supertile() = default;
    std::vector<Cell> cells_;
    int width_ = 0;
    int height_ = 0;
    std::size_t hash_ = 0;
};

struct SupertileHash {
    std::size_t operator()(const Supertile& s) const noexcept { return s.hash(); }
};

/// True iff the coordinates form one 4-connected component.
bool is_connected(std::span<const Coord> coords);

/// Sum of bond strengths across edges that become coincident when `y` is placed at `offset`
/// relative to `x`. Throws Overlap if the cells collide.
int attachment_strength(const Supertile& x, const Supertile& y, Coord offset, const TileSet& tiles);

struct Combination {
    Supertile result;
    /// Placement of the second operand relative to the first.
    Coord offset;
};

/// Every distinct supertile formed by attaching `y` to `x` with strength >= temperature,
/// sorted, with one witnessing placement each.
std::vector<Combination> combine_with_placements(const Supertile& x, const Supertile& y,
                                                 int temperature, const TileSet& tiles);

std::vector<Supertile> combine(const Supertile& x, const Supertile& y, int temperature,
                               const TileSet& tiles);

/// Union of `x` and `y` placed at `offset`, canonicalized.
Supertile merge(const Supertile& x, const Supertile& y, Coord offset);

}  // namespace sasm
