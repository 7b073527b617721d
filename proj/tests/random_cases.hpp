#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sasm/core.hpp"
#include "sasm/shape.hpp"

namespace cases {

struct RandomBin {
    sasm::TileSet tiles;
    std::vector<sasm::Supertile> seeds;
    int temperature = 1;
};

inline sasm::TileSet random_tileset(std::mt19937& rng, int tile_count, int glue_count, int temperature) {
    sasm::GlueTable g;
    for (int i = 0; i < glue_count; ++i)
        g.declare("g" + std::to_string(i), std::uniform_int_distribution<int>(1, temperature)(rng));
    std::vector<sasm::Tile> tiles;
    std::uniform_int_distribution<int> side(-glue_count, glue_count - 1);  // negative = null, ~half
    for (int i = 0; i < tile_count; ++i) {
        sasm::Tile t;
        t.id = "t" + std::to_string(i);
        for (auto& s : t.glues) {
            const int v = side(rng);
            s = v < 0 ? std::string(sasm::kNullGlue) : "g" + std::to_string(v);
        }
        tiles.push_back(t);
    }
    return sasm::TileSet(g, tiles);
}

// Random connected polyomino grown cell by cell, each cell carrying a random tile.
inline sasm::Supertile random_supertile(std::mt19937& rng, int cells, int tile_count) {
    std::vector<sasm::Cell> out{{{0, 0}, 0}};
    std::uniform_int_distribution<int> tile(0, tile_count - 1);
    out[0].tile = tile(rng);
    while (static_cast<int>(out.size()) < cells) {
        const auto& base = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
        const auto next = base.pos + sasm::step(sasm::kSides[std::uniform_int_distribution<int>(0, 3)(rng)]);
        bool taken = false;
        for (const auto& c : out) taken = taken || c.pos == next;
        if (!taken) out.push_back({next, static_cast<sasm::TileIndex>(tile(rng))});
    }
    return sasm::Supertile::canonicalize(out);
}

// Grown by attaching cells next to random existing ones; always 4-connected.
inline sasm::Shape random_polyomino(std::mt19937& rng, int cells) {
    const auto s = random_supertile(rng, cells, 1);
    std::vector<sasm::Coord> out;
    for (const auto& c : s.cells()) out.push_back(c.pos);
    return sasm::Shape::from_cells(out);
}

// Flood fill from outside the bounding box; a hole is an empty cell the fill cannot reach.
inline bool hole_free(const sasm::Shape& shape) {
    std::set<sasm::Coord> in(shape.cells().begin(), shape.cells().end());
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    for (auto c : in) x0 = std::min(x0, c.x), y0 = std::min(y0, c.y), x1 = std::max(x1, c.x), y1 = std::max(y1, c.y);
    std::set<sasm::Coord> out{{x0 - 1, y0 - 1}};
    std::vector<sasm::Coord> stack{{x0 - 1, y0 - 1}};
    while (!stack.empty()) {
        const auto c = stack.back();
        stack.pop_back();
        for (sasm::Side s : sasm::kSides) {
            const auto n = c + sasm::step(s);
            if (n.x < x0 - 1 || n.y < y0 - 1 || n.x > x1 + 1 || n.y > y1 + 1) continue;
            if (in.contains(n) || !out.insert(n).second) continue;
            stack.push_back(n);
        }
    }
    return out.size() + in.size() == static_cast<std::size_t>((x1 - x0 + 3) * (y1 - y0 + 3));
}

inline sasm::Shape random_hole_free(std::mt19937& rng, int max_cells) {
    for (;;) {
        auto s = random_polyomino(rng, std::uniform_int_distribution<int>(1, max_cells)(rng));
        if (hole_free(s)) return s;
    }
}

// Each column one vertical run, overlapping the previous column's run; at most max_cells cells.
inline sasm::Shape random_monotone(std::mt19937& rng, int max_cells) {
    std::vector<sasm::Coord> cells;
    int lo = 0, hi = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int x = 0;; ++x) {
        if (cells.size() + (hi - lo + 1) > static_cast<std::size_t>(max_cells)) break;
        for (int y = lo; y <= hi; ++y) cells.push_back({x, y});
        const int a = std::uniform_int_distribution<int>(lo - 2, hi)(rng);
        const int b = std::uniform_int_distribution<int>(std::max(a, lo), hi + 2)(rng);
        lo = a;
        hi = b;
    }
    return sasm::Shape::from_cells(cells);
}

// <= 5 seeds, <= 20 cells in total, temperature 1 or 2.
inline RandomBin random_bin(std::mt19937& rng) {
    RandomBin b;
    b.temperature = std::uniform_int_distribution<int>(1, 2)(rng);
    const int tile_count = std::uniform_int_distribution<int>(1, 4)(rng);
    b.tiles = random_tileset(rng, tile_count, std::uniform_int_distribution<int>(1, 3)(rng), b.temperature);
    const int seeds = std::uniform_int_distribution<int>(1, 5)(rng);
    int budget = 20;
    for (int i = 0; i < seeds && budget > 0; ++i) {
        const int size = std::uniform_int_distribution<int>(1, std::min(4, budget))(rng);
        budget -= size;
        b.seeds.push_back(random_supertile(rng, size, tile_count));
    }
    return b;
}

}  // namespace cases
