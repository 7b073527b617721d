#include <gtest/gtest.h>

#include "sasm/verify.hpp"

using namespace sasm;

namespace {

Supertile block(std::vector<Coord> cs, TileIndex t = 0) {
    std::vector<Cell> cells;
    for (auto c : cs) cells.push_back({c, t});
    return Supertile::canonicalize(cells);
}

AttachmentEvent event(const Supertile& l, const Supertile& r, Coord off) {
    return {l, r, off, merge(l, r, off)};
}

}  // namespace

TEST(Connectivity, FullVersusPartial) {
    GlueTable g;
    g.declare("a", 1);
    TileSet tiles(g, {Tile{"all", {"a", "a", "a", "a"}}, Tile{"ew", {"null", "a", "null", "a"}}});
    auto square = block({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 0);
    EXPECT_TRUE(is_fully_connected(square, tiles));
    auto rows = block({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 1);
    EXPECT_FALSE(is_fully_connected(rows, tiles));
    EXPECT_TRUE(is_fully_connected(Supertile::single(1), tiles));
}

TEST(Planarity, SideBySideIsPlanar) {
    auto a = block({{0, 0}, {0, 1}});
    EXPECT_TRUE(is_planar_attachment(event(a, a, {1, 0})));
}

TEST(Planarity, PegIntoClosedSlotFromOpenSideIsPlanar) {
    // U shape open at the top; a vertical domino drops into the slot.
    auto u = block({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {2, 2}});
    auto peg = block({{0, 0}, {0, 1}});
    EXPECT_TRUE(is_planar_attachment(event(u, peg, {1, 1})));
}

TEST(Planarity, CellInsideClosedPocketIsNot) {
    // Ring with a single interior hole: nothing can slide in.
    std::vector<Coord> ring;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != 1 || y != 1) ring.push_back({x, y});
    EXPECT_FALSE(is_planar_attachment(event(block(ring), block({{0, 0}}), {1, 1})));
}

TEST(Planarity, CrossbarBehindNarrowMouthIsNot) {
    // Pocket with a one-cell mouth; the T's crossbar is wider than the mouth.
    auto pocket = block({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 1}, {4, 1}, {0, 2}, {1, 2}, {3, 2}, {4, 2}});
    auto tee = block({{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 2}});
    EXPECT_FALSE(is_planar_attachment(event(pocket, tee, {1, 1})));
    // Same T entering stem-first from above is fine once the mouth is wide.
    auto open = block({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 1}, {4, 1}, {0, 2}, {4, 2}});
    EXPECT_TRUE(is_planar_attachment(event(open, tee, {1, 1})));
}

TEST(ShapeEquals, Scaling) {
    auto l = Shape::from_cells({{0, 0}, {1, 0}, {0, 1}});
    EXPECT_TRUE(shape_equals(l, l));
    EXPECT_TRUE(shape_equals(l, l.scaled(3), 3));
    EXPECT_FALSE(shape_equals(l, l.scaled(2), 3));
    EXPECT_FALSE(shape_equals(l, Shape::rectangle(2, 2)));
}
